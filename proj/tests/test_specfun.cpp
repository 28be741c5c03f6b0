#include <doctest.h>

#include "error.hpp"
#include "specfun.hpp"
#include "support.hpp"

using namespace ptscarf;
using specfun::gen_binomial;
using specfun::jacobi_poly;
using testing::rel_diff;

TEST_CASE("gen_binomial small cases") {
  CHECK(gen_binomial(5.0, 2) == cplx(10.0, 0.0));
  CHECK(gen_binomial(cplx(3.7, -2.1), 0) == cplx(1.0, 0.0));
  CHECK(std::abs(gen_binomial(-4.2, 2) - 10.92) < 1e-14);
  CHECK(std::abs(gen_binomial(7.0, 7) - 1.0) < 1e-15);
  CHECK(gen_binomial(4.0, 6) == cplx(0.0, 0.0));
}

TEST_CASE("gen_binomial order bound") {
  CHECK_NOTHROW(gen_binomial(1.5, 128));
  CHECK_THROWS_AS(gen_binomial(1.5, 129), Error);
  CHECK_THROWS_AS(gen_binomial(1.5, -1), Error);
}

TEST_CASE("jacobi_poly low degrees") {
  CHECK(jacobi_poly({0.8, -4.2, 0}, cplx(0.0, 0.3)) == cplx(1.0, 0.0));
  CHECK(std::abs(jacobi_poly({0.8, -4.2, 1}, 0.0) - 2.5) < 1e-14);
  const cplx z{0.37, -1.2};
  CHECK(std::abs(jacobi_poly({0.8, -4.2, 1}, z) - (-0.7 * z + 2.5)) < 1e-14);
}

TEST_CASE("jacobi_poly complex parameters, frozen value") {
  // Recurrence and hypergeometric form both give 1.21875 + 1.21875i.
  const cplx a{0.0, 1.0}, b{-4.0, 0.0};
  const cplx v = jacobi_poly({a, b, 2}, 0.5);
  CHECK(rel_diff(v, cplx(1.21875, 1.21875)) < 1e-12);
  CHECK(rel_diff(v, testing::jacobi_recurrence(2, a, b, 0.5)) < 1e-12);
}

TEST_CASE("jacobi_poly degree bound and argument") {
  CHECK_NOTHROW(jacobi_poly({0.3, 0.4, 64}, 0.1));
  CHECK_THROWS_AS(jacobi_poly({0.3, 0.4, 65}, 0.1), Error);
  CHECK_THROWS_AS(jacobi_poly({0.3, 0.4, -1}, 0.1), Error);
  CHECK_THROWS_AS(jacobi_poly({0.3, 0.4, 2}, cplx(INFINITY, 0.0)), Error);
}

TEST_CASE("jacobi_poly Legendre special case") {
  // P_n^{(0,0)} are the Legendre polynomials.
  const double x = 0.3;
  CHECK(std::abs(jacobi_poly({0.0, 0.0, 2}, x) - (3 * x * x - 1) / 2) < 1e-15);
  CHECK(std::abs(jacobi_poly({0.0, 0.0, 3}, x) - (5 * x * x * x - 3 * x) / 2) < 1e-15);
}

TEST_CASE("jacobi_poly vanishing leading coefficient is handled") {
  // a + b = -n - 1 kills the z^n term; the sum stays finite.
  const cplx v = jacobi_poly({-1.0, -2.0, 2}, 0.7);
  CHECK(std::isfinite(v.real()));
  CHECK(std::isfinite(v.imag()));
}
