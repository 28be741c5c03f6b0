#include "numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <tuple>

#include <lapacke.h>

namespace ptscarf::num {

namespace {

// Second-derivative stencils for -d^2/dx^2, coefficient of f_{i +- k} times h^2.
constexpr std::array<double, 2> kLaplace2{2.0, -1.0};
constexpr std::array<double, 3> kLaplace4{30.0 / 12.0, -16.0 / 12.0, 1.0 / 12.0};

double laplace_coeff(int order, int k, double h) {
  const double inv = 1.0 / (h * h);
  if (order == 2) return k < 2 ? kLaplace2[std::size_t(k)] * inv : 0.0;
  return kLaplace4[std::size_t(k)] * inv;
}

lapack_complex_double* lp(cplx* p) { return reinterpret_cast<lapack_complex_double*>(p); }

bool by_real_then_imag(cplx a, cplx b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

void require_same_grid(const GridFunction& a, const GridFunction& b) {
  require(a.grid.n_points == b.grid.n_points && a.grid.x_min == b.grid.x_min &&
              a.grid.x_max == b.grid.x_max,
          "grid functions live on different grids");
}

}  // namespace

// ---------------------------------------------------------------------------
// GridSpec

GridSpec GridSpec::make(double x_min, double x_max, int n_points, int stencil_order) {
  require(std::isfinite(x_min) && std::isfinite(x_max) && x_min < x_max,
          "grid: need finite x_min < x_max");
  require(n_points >= 16, "grid: need at least 16 points");
  require(stencil_order == 2 || stencil_order == 4, "grid: stencil order must be 2 or 4");
  GridSpec g;
  g.x_min = x_min;
  g.x_max = x_max;
  g.n_points = n_points % 2 == 1 ? n_points : n_points + 1;
  g.stencil_order = stencil_order;
  return g;
}

bool GridSpec::is_symmetric() const {
  return std::abs(x_min + x_max) <= 1e-12 * std::max(1.0, std::abs(x_max));
}

GridSpec GridSpec::refined(int factor) const {
  require(factor >= 1, "grid: refinement factor must be positive");
  return make(x_min, x_max, (n_points - 1) * factor + 1, stencil_order);
}

GridSpec GridSpec::halved() const {
  return make(x_min, x_max, (n_points - 1) / 2 + 1, stencil_order);
}

// ---------------------------------------------------------------------------
// GridFunction

GridFunction GridFunction::sample(const GridSpec& grid, const std::function<cplx(double)>& f) {
  GridFunction out;
  out.grid = grid;
  out.values.resize(std::size_t(grid.n_points));
  for (int i = 0; i < grid.n_points; ++i) out.values[std::size_t(i)] = f(grid.x(i));
  return out;
}

GridFunction GridFunction::zeros(const GridSpec& grid, int first, int size) {
  GridFunction out;
  out.grid = grid;
  out.first = first;
  out.values.assign(std::size_t(size), cplx{});
  return out;
}

GridFunction GridFunction::restricted(int lo, int hi) const {
  require(lo >= first && hi <= end() && lo < hi, "restricted: range outside samples");
  GridFunction out;
  out.grid = grid;
  out.first = lo;
  out.values.assign(values.begin() + (lo - first), values.begin() + (hi - first));
  return out;
}

GridFunction differentiate(const GridFunction& f) {
  const int m = f.grid.half_width();
  require(f.size() > 2 * m, "differentiate: too few samples");
  const double h = f.grid.step();
  GridFunction out = GridFunction::zeros(f.grid, f.first + m, f.size() - 2 * m);
  const auto& v = f.values;
  for (int k = 0; k < out.size(); ++k) {
    const std::size_t i = std::size_t(k + m);
    if (m == 1) {
      out.values[std::size_t(k)] = (v[i + 1] - v[i - 1]) / (2.0 * h);
    } else {
      out.values[std::size_t(k)] =
          (v[i - 2] - 8.0 * v[i - 1] + 8.0 * v[i + 1] - v[i + 2]) / (12.0 * h);
    }
  }
  return out;
}

GridFunction second_derivative(const GridFunction& f) {
  const int m = f.grid.half_width();
  require(f.size() > 2 * m, "second_derivative: too few samples");
  const double h = f.grid.step();
  GridFunction out = GridFunction::zeros(f.grid, f.first + m, f.size() - 2 * m);
  for (int k = 0; k < out.size(); ++k) {
    const std::size_t i = std::size_t(k + m);
    cplx acc = laplace_coeff(f.grid.stencil_order, 0, h) * f.values[i];
    for (int j = 1; j <= m; ++j) {
      acc += laplace_coeff(f.grid.stencil_order, j, h) *
             (f.values[i - std::size_t(j)] + f.values[i + std::size_t(j)]);
    }
    out.values[std::size_t(k)] = -acc;
  }
  return out;
}

GridFunction multiply(const GridFunction& f, const std::function<cplx(double)>& v) {
  GridFunction out = f;
  for (int k = 0; k < out.size(); ++k) out.values[std::size_t(k)] *= v(f.x(k));
  return out;
}

namespace {

template <class Op>
GridFunction combine(const GridFunction& a, const GridFunction& b, Op op) {
  require_same_grid(a, b);
  const int lo = std::max(a.first, b.first);
  const int hi = std::min(a.end(), b.end());
  require(lo < hi, "grid functions do not overlap");
  GridFunction out = GridFunction::zeros(a.grid, lo, hi - lo);
  for (int i = lo; i < hi; ++i) out.values[std::size_t(i - lo)] = op(a.at(i), b.at(i));
  return out;
}

}  // namespace

GridFunction operator+(const GridFunction& a, const GridFunction& b) {
  return combine(a, b, [](cplx x, cplx y) { return x + y; });
}

GridFunction operator-(const GridFunction& a, const GridFunction& b) {
  return combine(a, b, [](cplx x, cplx y) { return x - y; });
}

GridFunction operator*(cplx s, const GridFunction& f) {
  GridFunction out = f;
  for (auto& v : out.values) v *= s;
  return out;
}

cplx integrate(const GridFunction& f) {
  const int n = f.size();
  require(n >= 3 && n % 2 == 1, "integrate: Simpson needs an odd number (>= 3) of samples");
  const double h = f.grid.step();
  cplx acc = f.values.front() + f.values.back();
  for (int k = 1; k < n - 1; ++k) acc += (k % 2 == 1 ? 4.0 : 2.0) * f.values[std::size_t(k)];
  return acc * (h / 3.0);
}

double max_abs(const GridFunction& f) {
  double m = 0.0;
  for (const auto& v : f.values) m = std::max(m, std::abs(v));
  return m;
}

double max_abs_difference(const GridFunction& a, const GridFunction& b) {
  return max_abs(a - b);
}

std::string_view to_string(InnerConvention c) {
  return c == InnerConvention::Conjugating ? "conjugating" : "bilinear";
}

cplx pt_inner(const GridFunction& f, const GridFunction& g, InnerConvention c) {
  require(f.grid.is_symmetric(), "pt_inner: grid must be symmetric about x = 0");
  require_same_grid(f, g);
  require(f.covers_grid() && g.covers_grid(), "pt_inner: functions must cover the grid");
  const int n = f.grid.n_points;
  GridFunction prod = GridFunction::zeros(f.grid, 0, n);
  for (int i = 0; i < n; ++i) {
    const cplx reflected = f.values[std::size_t(n - 1 - i)];
    prod.values[std::size_t(i)] =
        (c == InnerConvention::Conjugating ? std::conj(reflected) : reflected) *
        g.values[std::size_t(i)];
  }
  return integrate(prod);
}

cplx hermitian_inner(const GridFunction& f, const GridFunction& g) {
  require_same_grid(f, g);
  require(f.first == g.first && f.size() == g.size(), "hermitian_inner: ranges differ");
  GridFunction prod = f;
  for (int k = 0; k < f.size(); ++k)
    prod.values[std::size_t(k)] = std::conj(f.values[std::size_t(k)]) * g.values[std::size_t(k)];
  return integrate(prod);
}

// ---------------------------------------------------------------------------
// Hamiltonian and dense eigensolver

ComplexMatrix build_hamiltonian(const Potential& v, const GridSpec& grid) {
  const int n = grid.n_points - 2;
  const int m = grid.half_width();
  const double h = grid.step();
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    out(i, i) = laplace_coeff(grid.stencil_order, 0, h) + v(grid.x(i + 1));
    for (int k = 1; k <= m && i + k < n; ++k) {
      const double c = laplace_coeff(grid.stencil_order, k, h);
      out(i, i + k) = c;
      out(i + k, i) = c;
    }
  }
  return out;
}

std::vector<cplx> eigenvalues(ComplexMatrix m) {
  require(m.rows() == m.cols(), "eigenvalues: matrix must be square");
  const int n = int(m.rows());
  require(n <= 4096, "eigenvalues: dimension above 4096");
  std::vector<cplx> w(static_cast<std::size_t>(n));
  const lapack_int info = LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', 'N', n, lp(m.data()), n,
                                        lp(w.data()), nullptr, 1, nullptr, 1);
  if (info > 0) {
    std::vector<cplx> partial(w.begin() + info, w.end());
    throw EigenSolverFailure("zgeev failed to converge; " + std::to_string(n - info) +
                                 " eigenvalues available",
                             std::move(partial));
  }
  if (info < 0) fail(ErrorKind::Numerical, "zgeev: illegal argument " + std::to_string(-info));
  std::sort(w.begin(), w.end(), by_real_then_imag);
  return w;
}

std::vector<EigenPair> eig_complex(const ComplexMatrix& m, int k) {
  require(m.rows() == m.cols(), "eig_complex: matrix must be square");
  const int n = int(m.rows());
  require(n <= 4096, "eig_complex: dimension above 4096");
  require(k >= 0 && k <= n, "eig_complex: k outside [0, n]");
  ComplexMatrix a = m;
  ComplexMatrix vr(n, n);
  std::vector<cplx> w(static_cast<std::size_t>(n));
  const lapack_int info = LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', 'V', n, lp(a.data()), n,
                                        lp(w.data()), nullptr, 1, lp(vr.data()), n);
  if (info > 0) {
    std::vector<cplx> partial(w.begin() + info, w.end());
    throw EigenSolverFailure("zgeev failed to converge; " + std::to_string(n - info) +
                                 " eigenvalues available",
                             std::move(partial));
  }
  if (info < 0) fail(ErrorKind::Numerical, "zgeev: illegal argument " + std::to_string(-info));

  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[std::size_t(i)] = i;
  std::sort(order.begin(), order.end(), [&](int a_, int b_) {
    return by_real_then_imag(w[std::size_t(a_)], w[std::size_t(b_)]);
  });

  const double mnorm = m.norm();
  std::vector<EigenPair> out;
  out.reserve(std::size_t(k));
  for (int i = 0; i < k; ++i) {
    const int j = order[std::size_t(i)];
    EigenPair p;
    p.value = w[std::size_t(j)];
    p.vector = vr.col(j);
    const double vnorm = p.vector.norm();
    p.backward_error = (m * p.vector - p.value * p.vector).norm() /
                       (std::max(mnorm, 1e-300) * std::max(vnorm, 1e-300));
    out.push_back(std::move(p));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Decaying-tail closure

std::vector<cplx> tail_ratios(const Potential& v, double x_edge, double h, int count,
                              cplx energy, int side) {
  require(side == 1 || side == -1, "tail_ratios: side must be +1 or -1");
  require(count >= 1, "tail_ratios: need at least one ratio");
  cplx kappa = std::sqrt(-energy);
  if (kappa.real() < 0.0) kappa = -kappa;
  require(kappa.real() > 0.0, "tail_ratios: energy has no decaying tail");

  const double span = std::clamp(25.0 / kappa.real(), 10.0, 200.0);
  const double s = double(side);

  // Integrate psi'' = (V - E) psi inward from the far point, where the
  // decaying solution is psi ~ exp(-kappa |x|).
  cplx psi{1.0, 0.0};
  cplx dpsi = -s * kappa;
  double x = x_edge + s * (span + double(count) * h);

  std::vector<cplx> at(std::size_t(count) + 1);
  int stored_from = count + 1;  // at[stored_from..count] already recorded

  auto rhs = [&](double xx, cplx p) { return (v(xx) - energy) * p; };
  auto rescale = [&](double scale) {
    psi /= scale;
    dpsi /= scale;
    for (int j = stored_from; j <= count; ++j) at[std::size_t(j)] /= scale;
  };
  auto advance_to = [&](double target) {
    const int steps = std::max(1, int(std::ceil(std::abs(target - x) / 0.005)));
    const double dx = (target - x) / double(steps);
    for (int i = 0; i < steps; ++i) {
      const cplx k1p = dpsi, k1d = rhs(x, psi);
      const cplx k2p = dpsi + 0.5 * dx * k1d, k2d = rhs(x + 0.5 * dx, psi + 0.5 * dx * k1p);
      const cplx k3p = dpsi + 0.5 * dx * k2d, k3d = rhs(x + 0.5 * dx, psi + 0.5 * dx * k2p);
      const cplx k4p = dpsi + dx * k3d, k4d = rhs(x + dx, psi + dx * k3p);
      psi += dx / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
      dpsi += dx / 6.0 * (k1d + 2.0 * k2d + 2.0 * k3d + k4d);
      x += dx;
      if (const double scale = std::abs(psi); scale > 1e100) rescale(scale);
    }
  };

  for (int k = count; k >= 0; --k) {
    advance_to(x_edge + s * double(k) * h);
    at[std::size_t(k)] = psi;
    stored_from = k;
  }
  std::vector<cplx> ratios(static_cast<std::size_t>(count));
  for (int k = 1; k <= count; ++k) ratios[std::size_t(k - 1)] = at[std::size_t(k)] / at[0];
  return ratios;
}

namespace {

// Pentadiagonal (or tridiagonal) matrix in LAPACK general-band storage with
// room for the fill-in of a pivoted LU.
struct BandMatrix {
  int n = 0;
  int kl = 0;
  int ldab = 0;
  std::vector<cplx> ab;

  BandMatrix(int n_, int bw) : n(n_), kl(bw), ldab(3 * bw + 1), ab(std::size_t(ldab) * std::size_t(n_)) {}

  cplx& operator()(int i, int j) {
    return ab[std::size_t(2 * kl + i - j) + std::size_t(j) * std::size_t(ldab)];
  }
  cplx operator()(int i, int j) const {
    return ab[std::size_t(2 * kl + i - j) + std::size_t(j) * std::size_t(ldab)];
  }

  Eigen::VectorXcd apply(const Eigen::VectorXcd& x) const {
    Eigen::VectorXcd y = Eigen::VectorXcd::Zero(n);
    for (int i = 0; i < n; ++i) {
      const int lo = std::max(0, i - kl), hi = std::min(n - 1, i + kl);
      for (int j = lo; j <= hi; ++j) y(i) += (*this)(i, j) * x(j);
    }
    return y;
  }
};

BandMatrix closed_hamiltonian(const Potential& v, const GridSpec& grid, cplx energy) {
  const int npts = grid.n_points;
  const int n = npts - 2;
  const int m = grid.half_width();
  const double h = grid.step();
  const int order = grid.stencil_order;
  BandMatrix b(n, m);
  for (int i = 0; i < n; ++i) {
    b(i, i) = laplace_coeff(order, 0, h) + v(grid.x(i + 1));
    for (int k = 1; k <= m && i + k < n; ++k) {
      b(i, i + k) = laplace_coeff(order, k, h);
      b(i + k, i) = laplace_coeff(order, k, h);
    }
  }
  // Ghost values outside the interior follow the decaying tail attached to
  // the outermost interior point: psi_{edge +- k} = r_k psi_edge.
  const auto right = tail_ratios(v, grid.x(npts - 2), h, m, energy, +1);
  const auto left = tail_ratios(v, grid.x(1), h, m, energy, -1);
  for (int r = n - m; r < n; ++r) {
    const int full_r = r + 1;
    for (int j = npts - 1; j <= full_r + m; ++j)
      b(r, n - 1) += laplace_coeff(order, j - full_r, h) * right[std::size_t(j - (npts - 2) - 1)];
  }
  for (int r = 0; r < m; ++r) {
    const int full_r = r + 1;
    for (int j = full_r - m; j <= 0; ++j)
      b(r, 0) += laplace_coeff(order, full_r - j, h) * left[std::size_t(1 - j - 1)];
  }
  return b;
}

Eigen::VectorXcd start_vector(int n) {
  std::mt19937_64 gen(0x5ca4f11ULL);
  Eigen::VectorXcd x(n);
  for (int i = 0; i < n; ++i) {
    const double re = double(gen() >> 11) * 0x1.0p-53 - 0.5;
    const double im = double(gen() >> 11) * 0x1.0p-53 - 0.5;
    x(i) = cplx{re, im};
  }
  return x.normalized();
}

}  // namespace

RefinedLevel refine_level(const Potential& v, const GridSpec& grid, cplx guess) {
  const int n = grid.n_points - 2;
  const int m = grid.half_width();
  RefinedLevel out;
  out.dirichlet = guess;
  cplx lam = guess;
  Eigen::VectorXcd x = start_vector(n);
  std::vector<lapack_int> ipiv(static_cast<std::size_t>(n));
  double prev_delta = std::numeric_limits<double>::infinity();

  constexpr int kMaxOuter = 60;
  for (int it = 1; it <= kMaxOuter; ++it) {
    cplx kappa = std::sqrt(-lam);
    if (kappa.real() <= 0.0) break;  // left the bound region

    const BandMatrix b = closed_hamiltonian(v, grid, lam);
    BandMatrix lu = b;
    for (int i = 0; i < n; ++i) lu(i, i) -= lam;
    lapack_int info = LAPACKE_zgbtrf(LAPACK_COL_MAJOR, n, n, m, m, lp(lu.ab.data()), lu.ldab,
                                     ipiv.data());
    if (info > 0) {
      // Shift sits exactly on an eigenvalue; nudge it.
      lu = b;
      const cplx nudged = lam + 1e-13 * (1.0 + std::abs(lam));
      for (int i = 0; i < n; ++i) lu(i, i) -= nudged;
      info = LAPACKE_zgbtrf(LAPACK_COL_MAJOR, n, n, m, m, lp(lu.ab.data()), lu.ldab, ipiv.data());
      if (info != 0) break;
    }
    for (int s = 0; s < 2; ++s) {
      LAPACKE_zgbtrs(LAPACK_COL_MAJOR, 'N', n, m, m, 1, lp(lu.ab.data()), lu.ldab, ipiv.data(),
                     lp(x.data()), n);
      x.normalize();
    }
    const cplx mu = x.dot(b.apply(x));  // x^H B x with |x| = 1
    const double delta = std::abs(mu - lam);
    lam = mu;
    out.iterations = it;
    const double scale = 1.0 + std::abs(lam);
    if (delta <= 1e-13 * scale ||
        (it >= 6 && delta <= 1e-10 * scale && delta >= 0.5 * prev_delta)) {
      out.converged = true;
      break;
    }
    prev_delta = delta;
  }
  out.value = lam;
  if (std::sqrt(-lam).real() > 0.0) {
    const BandMatrix b = closed_hamiltonian(v, grid, lam);
    out.residual = (b.apply(x) - lam * x).norm() / x.norm();
  } else {
    out.converged = false;
  }
  return out;
}

double localization_threshold(const GridSpec& grid) {
  return 2.0 / (grid.x_max - grid.x_min);
}

std::vector<cplx> BoundSpectrum::bound_values() const {
  std::vector<cplx> out;
  out.reserve(bound.size());
  for (const auto& b : bound) out.push_back(b.value);
  return out;
}

BoundSpectrum solve_bound_spectrum(const Potential& v, const GridSpec& grid) {
  BoundSpectrum out;
  out.dirichlet = eigenvalues(build_hamiltonian(v, grid));
  const double kmin = localization_threshold(grid);
  for (const cplx e : out.dirichlet) {
    if (std::sqrt(-e).real() < kmin) {
      out.continuum.push_back(e);
      continue;
    }
    RefinedLevel r = refine_level(v, grid, e);
    if (!r.converged || std::sqrt(-r.value).real() < 0.5 * kmin) {
      out.continuum.push_back(e);
      continue;
    }
    const bool duplicate = std::any_of(out.bound.begin(), out.bound.end(), [&](const auto& b) {
      return std::abs(b.value - r.value) <= 1e-7 * (1.0 + std::abs(r.value));
    });
    if (!duplicate) out.bound.push_back(r);
  }
  std::sort(out.bound.begin(), out.bound.end(),
            [](const RefinedLevel& a, const RefinedLevel& b) { return by_real_then_imag(a.value, b.value); });
  return out;
}

std::vector<LevelMatch> match_levels(std::span<const cplx> analytic,
                                     std::span<const cplx> numeric, double tol) {
  std::vector<std::tuple<double, std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < analytic.size(); ++i)
    for (std::size_t j = 0; j < numeric.size(); ++j) {
      const double d = std::abs(analytic[i] - numeric[j]);
      if (d <= tol) pairs.emplace_back(d, i, j);
    }
  std::sort(pairs.begin(), pairs.end());
  std::vector<bool> used_a(analytic.size()), used_n(numeric.size());
  std::vector<LevelMatch> out;
  for (const auto& [d, i, j] : pairs) {
    if (used_a[i] || used_n[j]) continue;
    used_a[i] = used_n[j] = true;
    out.push_back({i, j, d});
  }
  std::sort(out.begin(), out.end(),
            [](const LevelMatch& a, const LevelMatch& b) { return a.analytic < b.analytic; });
  return out;
}

}  // namespace ptscarf::num
