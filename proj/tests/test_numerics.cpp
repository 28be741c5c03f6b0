#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "numerics.hpp"

using namespace ptscarf;
using namespace ptscarf::num;

namespace {

constexpr double kPi = std::numbers::pi;

bool contains(const std::vector<cplx>& v, cplx z, double tol) {
  return std::any_of(v.begin(), v.end(), [&](cplx w) { return std::abs(w - z) <= tol; });
}

}  // namespace

TEST_CASE("GridSpec validation and shape") {
  const GridSpec g = GridSpec::make(-1.0, 1.0, 100, 4);
  CHECK(g.n_points == 101);
  CHECK(g.step() == doctest::Approx(0.02));
  CHECK(g.is_symmetric());
  CHECK_FALSE(GridSpec::make(-1.0, 2.0, 101).is_symmetric());
  CHECK(g.refined(4).n_points == 401);
  CHECK(g.halved().n_points == 51);
  CHECK_THROWS_AS(GridSpec::make(1.0, -1.0, 101), Error);
  CHECK_THROWS_AS(GridSpec::make(-1.0, 1.0, 15), Error);
  CHECK_THROWS_AS(GridSpec::make(-1.0, 1.0, 101, 3), Error);
  CHECK_THROWS_AS(GridSpec::make(-1.0, INFINITY, 101), Error);
}

TEST_CASE("first and second derivative of sin") {
  for (int order : {2, 4}) {
    const GridSpec g = GridSpec::make(0.0, 2.0 * kPi, 400, order);
    const GridFunction f = GridFunction::sample(g, [](double x) { return cplx(std::sin(x)); });
    const GridFunction d = differentiate(f);
    const GridFunction d2 = second_derivative(f);
    CHECK(d.first == g.half_width());
    CHECK(d.size() == g.n_points - 2 * g.half_width());
    double e1 = 0.0, e2 = 0.0;
    for (int k = 0; k < d.size(); ++k) {
      e1 = std::max(e1, std::abs(d.values[std::size_t(k)] - std::cos(d.x(k))));
      e2 = std::max(e2, std::abs(d2.values[std::size_t(k)] + std::sin(d2.x(k))));
    }
    const double tol = order == 4 ? 1e-5 : 2e-4;
    CHECK(e1 <= tol);
    CHECK(e2 <= tol);
  }
}

TEST_CASE("fourth order stencil converges at fourth order") {
  auto err = [](int n) {
    const GridSpec g = GridSpec::make(0.0, 2.0 * kPi, n, 4);
    const GridFunction d =
        differentiate(GridFunction::sample(g, [](double x) { return cplx(std::sin(x)); }));
    double e = 0.0;
    for (int k = 0; k < d.size(); ++k)
      e = std::max(e, std::abs(d.values[std::size_t(k)] - std::cos(d.x(k))));
    return e;
  };
  CHECK(err(201) / err(401) > 14.0);
}

TEST_CASE("Simpson integral of a Gaussian") {
  const GridSpec g = GridSpec::symmetric(10.0, 2001);
  const cplx v = integrate(GridFunction::sample(g, [](double x) { return cplx(std::exp(-x * x)); }));
  CHECK(std::abs(v - std::sqrt(kPi)) <= 1e-10);
  CHECK_THROWS_AS(integrate(GridFunction::zeros(g, 0, 2)), Error);
}

TEST_CASE("pointwise arithmetic on grid functions") {
  const GridSpec g = GridSpec::symmetric(1.0, 21);
  const GridFunction a = GridFunction::sample(g, [](double x) { return cplx(x, 1.0); });
  const GridFunction b = multiply(a, [](double) { return cplx(0.0, 2.0); });
  CHECK(b.at(20) == cplx(-2.0, 2.0));
  CHECK(max_abs_difference(a + a, cplx(2.0) * a) == 0.0);
  CHECK(max_abs(a - a) == 0.0);
  const GridFunction r = a.restricted(3, 10);
  CHECK(r.first == 3);
  CHECK(r.size() == 7);
  CHECK(r.at(3) == a.at(3));
  // sums over overlapping ranges keep the overlap only
  const GridFunction s = r + a;
  CHECK(s.first == 3);
  CHECK(s.size() == 7);
}

TEST_CASE("pt_inner parity and conjugation") {
  const GridSpec g = GridSpec::symmetric(10.0, 2001);
  const GridFunction even = GridFunction::sample(g, [](double x) { return cplx(std::exp(-x * x)); });
  const GridFunction odd =
      GridFunction::sample(g, [](double x) { return cplx(x * std::exp(-x * x)); });
  const GridFunction odd_i = cplx(0.0, 1.0) * odd;
  const double second_moment = std::sqrt(kPi) / (2.0 * std::pow(2.0, 1.5));
  const double gauss2 = std::sqrt(kPi / 2.0);

  CHECK(std::abs(pt_inner(even, even, InnerConvention::Conjugating) - gauss2) < 1e-10);
  CHECK(std::abs(pt_inner(odd, odd, InnerConvention::Conjugating) + second_moment) < 1e-10);
  CHECK(std::abs(hermitian_inner(odd, odd) - second_moment) < 1e-10);
  CHECK(std::abs(pt_inner(even, odd, InnerConvention::Bilinear)) < 1e-14);
  // i*odd: conjugation flips the sign relative to the bilinear pairing
  CHECK(std::abs(pt_inner(odd_i, odd_i, InnerConvention::Conjugating) + second_moment) < 1e-10);
  CHECK(std::abs(pt_inner(odd_i, odd_i, InnerConvention::Bilinear) - second_moment) < 1e-10);
  CHECK(to_string(InnerConvention::Conjugating) == "conjugating");
  CHECK(to_string(InnerConvention::Bilinear) == "bilinear");

  const GridSpec lopsided = GridSpec::make(-1.0, 2.0, 101);
  const GridFunction h = GridFunction::sample(lopsided, [](double) { return cplx(1.0); });
  CHECK_THROWS_AS(pt_inner(h, h, InnerConvention::Conjugating), Error);
}

TEST_CASE("dense eigenvalues of small matrices") {
  ComplexMatrix d = ComplexMatrix::Zero(3, 3);
  d(0, 0) = 3.0;
  d(1, 1) = cplx(1.0, 2.0);
  d(2, 2) = -5.0;
  const auto ev = eigenvalues(d);
  REQUIRE(ev.size() == 3);
  CHECK(ev[0] == cplx(-5.0, 0.0));
  CHECK(ev[1] == cplx(1.0, 2.0));
  CHECK(ev[2] == cplx(3.0, 0.0));

  ComplexMatrix rot(2, 2);
  rot << 0.0, 1.0, -1.0, 0.0;
  const auto r = eigenvalues(rot);
  REQUIRE(r.size() == 2);
  CHECK(contains(r, cplx(0.0, 1.0), 1e-14));
  CHECK(contains(r, cplx(0.0, -1.0), 1e-14));

  CHECK_THROWS_AS(eigenvalues(ComplexMatrix::Zero(2, 3)), Error);
}

TEST_CASE("eig_complex returns the lowest pairs with small backward error") {
  ComplexMatrix m(3, 3);
  m << 2.0, cplx(0.0, 1.0), 0.0, cplx(0.0, 1.0), -1.0, 0.5, 0.0, 0.5, 4.0;
  const auto pairs = eig_complex(m, 2);
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0].value.real() <= pairs[1].value.real());
  for (const auto& p : pairs) {
    CHECK(p.backward_error < 1e-14);
    CHECK((m * p.vector - p.value * p.vector).norm() < 1e-12 * p.vector.norm());
  }
  CHECK_THROWS_AS(eig_complex(m, 4), Error);
}

TEST_CASE("harmonic oscillator levels") {
  // -psi'' + x^2 psi = E psi: E = 2k + 1, states negligible at the walls.
  const GridSpec g = GridSpec::symmetric(10.0, 801, 4);
  const auto ev = eigenvalues(build_hamiltonian([](double x) { return cplx(x * x); }, g));
  CHECK(ev.size() == std::size_t(g.n_points - 2));
  for (int k = 0; k < 4; ++k) CHECK(std::abs(ev[std::size_t(k)] - double(2 * k + 1)) < 1e-6);
}

TEST_CASE("Hamiltonian matrix is complex symmetric") {
  const GridSpec g = GridSpec::symmetric(5.0, 41);
  const ComplexMatrix h = build_hamiltonian([](double x) { return cplx(x, std::sin(x)); }, g);
  CHECK(h.rows() == 39);
  CHECK((h - h.transpose()).norm() == 0.0);
}

TEST_CASE("tail ratios of a free decaying wave") {
  const double kappa = 0.7, h = 0.01;
  const auto r = tail_ratios([](double) { return cplx(0.0); }, 5.0, h, 3, -kappa * kappa, 1);
  REQUIRE(r.size() == 3);
  for (int k = 1; k <= 3; ++k)
    CHECK(std::abs(r[std::size_t(k - 1)] - std::exp(-kappa * k * h)) < 1e-10);
  const auto l = tail_ratios([](double) { return cplx(0.0); }, -5.0, h, 1, -kappa * kappa, -1);
  CHECK(std::abs(l[0] - std::exp(-kappa * h)) < 1e-10);
  CHECK_THROWS_AS(tail_ratios([](double) { return cplx(0.0); }, 5.0, h, 1, 1.0, 1), Error);
}

TEST_CASE("Poeschl-Teller well has a single bound level at -1") {
  const GridSpec g = GridSpec::symmetric(14.0, 801);
  const auto v = [](double x) { return cplx(-2.0 / (std::cosh(x) * std::cosh(x))); };
  const BoundSpectrum s = solve_bound_spectrum(v, g);
  REQUIRE(s.bound.size() == 1);
  CHECK(s.bound[0].converged);
  CHECK(std::abs(s.bound[0].value + 1.0) < 1e-6);
  CHECK_FALSE(s.continuum.empty());
  CHECK(s.dirichlet.size() == std::size_t(g.n_points - 2));

  const RefinedLevel r = refine_level(v, g, -0.98);
  CHECK(r.converged);
  CHECK(std::abs(r.value + 1.0) < 1e-6);
  CHECK(localization_threshold(g) == doctest::Approx(2.0 / 28.0));
}

TEST_CASE("greedy level matching") {
  const std::vector<cplx> analytic{-4.0, -1.0, cplx(0.0, 0.5)};
  const std::vector<cplx> numeric{cplx(0.0, 0.5000001), -1.00002, -3.0};
  const auto m = match_levels(analytic, numeric, 1e-4);
  REQUIRE(m.size() == 2);
  bool saw_minus_one = false, saw_imag = false;
  for (const auto& x : m) {
    if (x.analytic == 1) saw_minus_one = x.numeric == 1;
    if (x.analytic == 2) saw_imag = x.numeric == 0;
    CHECK(x.distance <= 1e-4);
  }
  CHECK(saw_minus_one);
  CHECK(saw_imag);
  // a numeric level is never used twice
  const std::vector<cplx> twice{-1.0, -1.0};
  const std::vector<cplx> once{-1.0};
  CHECK(match_levels(twice, once, 1e-4).size() == 1);
}
