#include "specfun.hpp"

#include <cmath>
#include <string>

#include "error.hpp"

namespace ptscarf::specfun {

namespace {

cplx ipow(cplx base, int e) {
  cplx r{1.0, 0.0};
  for (; e > 0; e >>= 1) {
    if (e & 1) r *= base;
    base *= base;
  }
  return r;
}

}  // namespace

cplx gen_binomial(cplx w, int m) {
  require(m >= 0 && m <= kMaxBinomialOrder,
          "gen_binomial: order must lie in [0, " +
              std::to_string(kMaxBinomialOrder) + "]");
  cplx r{1.0, 0.0};
  for (int j = 0; j < m; ++j) r *= (w - double(j)) / double(j + 1);
  return r;
}

cplx jacobi_poly(const JacobiParams& p, cplx z) {
  require(p.n >= 0 && p.n <= kMaxJacobiDegree,
          "jacobi_poly: degree must lie in [0, " +
              std::to_string(kMaxJacobiDegree) + "]");
  require(std::isfinite(z.real()) && std::isfinite(z.imag()),
          "jacobi_poly: argument must be finite");
  const int n = p.n;
  if (n == 0) return {1.0, 0.0};

  const cplx zm = z - 1.0;
  const cplx zp = z + 1.0;
  cplx sum{0.0, 0.0};
  for (int k = 0; k <= n; ++k) {
    sum += gen_binomial(double(n) + p.a, k) * gen_binomial(double(n) + p.b, n - k) *
           ipow(zm, n - k) * ipow(zp, k);
  }
  return std::ldexp(1.0, -n) * sum;
}

}  // namespace ptscarf::specfun
