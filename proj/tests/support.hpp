#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace testing {

using cplx = std::complex<double>;

/// splitmix64; every property test owns a seeded instance.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * double(next() >> 11) * 0x1.0p-53;
  }

  int integer(int lo, int hi) { return lo + int(next() % std::uint64_t(hi - lo + 1)); }

  /// Uniform in the disc |z| <= radius.
  cplx disc(double radius) {
    const double r = radius * std::sqrt(uniform(0.0, 1.0));
    return std::polar(r, uniform(0.0, 2.0 * std::numbers::pi));
  }

  cplx box(double half) { return {uniform(-half, half), uniform(-half, half)}; }

 private:
  std::uint64_t state_;
};

inline double rel_diff(cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

/// Three-term recurrence for P_n^{(a,b)}(z). Divides by k + a + b and
/// 2k + a + b - 2; callers guard those.
inline cplx jacobi_recurrence(int n, cplx a, cplx b, cplx z) {
  cplx p0{1.0, 0.0};
  if (n == 0) return p0;
  cplx p1 = ((a + b + 2.0) * z + (a - b)) / 2.0;
  for (int k = 2; k <= n; ++k) {
    const double d = k;
    const cplx c = 2.0 * d + a + b;
    const cplx next = ((c - 1.0) * (c * (c - 2.0) * z + a * a - b * b) * p1 -
                       2.0 * (d + a - 1.0) * (d + b - 1.0) * c * p0) /
                      (2.0 * d * (d + a + b) * (c - 2.0));
    p0 = p1;
    p1 = next;
  }
  return p1;
}

/// True when no recurrence denominator up to degree n is within tol of zero.
inline bool recurrence_safe(int n, cplx a, cplx b, double tol = 1e-6) {
  for (int k = 1; k <= n; ++k)
    if (std::abs(2.0 * k + a + b) < tol || std::abs(double(k) + a + b) < tol) return false;
  return true;
}

}  // namespace testing
