#pragma once

#include <complex>

namespace ptscarf {

using cplx = std::complex<double>;

namespace specfun {

inline constexpr int kMaxJacobiDegree = 64;
inline constexpr int kMaxBinomialOrder = 128;

struct JacobiParams {
  cplx a;  // upper parameter
  cplx b;  // lower parameter
  int n = 0;
};

/// w (w-1) ... (w-m+1) / m!  for complex w; m = 0 gives 1.
cplx gen_binomial(cplx w, int m);

/// Jacobi polynomial P_n^{(a,b)}(z) for complex a, b, z, evaluated from
///
///   2^{-n} sum_k C(n+a, k) C(n+b, n-k) (z-1)^{n-k} (z+1)^k .
///
/// The sum has no denominators apart from factorials, so it stays valid where
/// the three-term recurrence divides by 2k+a+b ~ 0.
cplx jacobi_poly(const JacobiParams& p, cplx z);

}  // namespace specfun
}  // namespace ptscarf
