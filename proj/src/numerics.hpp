#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "error.hpp"

namespace ptscarf {

using cplx = std::complex<double>;

namespace num {

using Potential = std::function<cplx(double)>;
using ComplexMatrix = Eigen::MatrixXcd;

/// Uniform grid on [x_min, x_max]. The endpoints carry Dirichlet walls when a
/// Hamiltonian is built; n_points is always odd so Simpson weights apply.
struct GridSpec {
  double x_min = -14.0;
  double x_max = 14.0;
  int n_points = 1601;
  int stencil_order = 4;

  /// Validates and rounds n_points up to the next odd number.
  static GridSpec make(double x_min, double x_max, int n_points, int stencil_order = 4);
  static GridSpec symmetric(double x_max, int n_points, int stencil_order = 4) {
    return make(-x_max, x_max, n_points, stencil_order);
  }

  double step() const { return (x_max - x_min) / double(n_points - 1); }
  double x(int i) const { return x_min + step() * double(i); }
  int half_width() const { return stencil_order / 2; }
  bool is_symmetric() const;

  /// Same box, (n_points - 1) * factor + 1 points.
  GridSpec refined(int factor) const;
  /// Same box, (n_points - 1) / 2 + 1 points.
  GridSpec halved() const;
};

/// Samples of a function on the contiguous index range [first, first + size)
/// of a grid. Differential operators shrink the range by the stencil width.
struct GridFunction {
  GridSpec grid;
  int first = 0;
  std::vector<cplx> values;

  static GridFunction sample(const GridSpec& grid, const std::function<cplx(double)>& f);
  static GridFunction zeros(const GridSpec& grid, int first, int size);

  int size() const { return int(values.size()); }
  int end() const { return first + size(); }
  double x(int k) const { return grid.x(first + k); }
  bool covers_grid() const { return first == 0 && size() == grid.n_points; }
  /// Value at a grid index; the index must be inside the sampled range.
  cplx at(int grid_index) const { return values[std::size_t(grid_index - first)]; }
  GridFunction restricted(int lo, int hi) const;
};

GridFunction differentiate(const GridFunction& f);
GridFunction second_derivative(const GridFunction& f);
/// Pointwise v(x) * f(x).
GridFunction multiply(const GridFunction& f, const std::function<cplx(double)>& v);
GridFunction operator+(const GridFunction& a, const GridFunction& b);
GridFunction operator-(const GridFunction& a, const GridFunction& b);
GridFunction operator*(cplx s, const GridFunction& f);

/// Composite Simpson over the sampled range (odd sample count required).
cplx integrate(const GridFunction& f);

double max_abs(const GridFunction& f);
/// max |a - b| over the index range both functions cover.
double max_abs_difference(const GridFunction& a, const GridFunction& b);

enum class InnerConvention { Conjugating, Bilinear };
std::string_view to_string(InnerConvention c);

/// Reflected pairing sum_j w_j f(-x_j) g(x_j), with f conjugated under the
/// Conjugating convention. Both functions must cover a symmetric grid.
cplx pt_inner(const GridFunction& f, const GridFunction& g, InnerConvention c);
/// sum_j w_j f*(x_j) g(x_j).
cplx hermitian_inner(const GridFunction& f, const GridFunction& g);

/// -d^2/dx^2 + V on the interior points with Dirichlet walls at x_min, x_max.
/// The result is complex symmetric whatever V is.
ComplexMatrix build_hamiltonian(const Potential& v, const GridSpec& grid);

/// All eigenvalues of a general complex matrix, ordered by real part then
/// imaginary part. Throws EigenSolverFailure on non-convergence.
std::vector<cplx> eigenvalues(ComplexMatrix m);

struct EigenPair {
  cplx value;
  Eigen::VectorXcd vector;
  double backward_error = 0.0;  // |Mv - lambda v| / (|M|_F |v|)
};

/// The k eigenpairs of smallest real part.
std::vector<EigenPair> eig_complex(const ComplexMatrix& m, int k);

class EigenSolverFailure : public Error {
 public:
  EigenSolverFailure(const std::string& what, std::vector<cplx> partial)
      : Error(ErrorKind::Numerical, what), partial_(std::move(partial)) {}
  const std::vector<cplx>& partial() const { return partial_; }

 private:
  std::vector<cplx> partial_;
};

/// Ratios psi(x_edge + side*k*h) / psi(x_edge), k = 1..count, of the solution
/// of psi'' = (V - E) psi that decays for side*x -> infinity.
std::vector<cplx> tail_ratios(const Potential& v, double x_edge, double h, int count,
                              cplx energy, int side);

struct RefinedLevel {
  cplx value;
  cplx dirichlet;       // starting eigenvalue of the walled problem
  int iterations = 0;
  double residual = 0.0;  // |(H(E) - E) v| / |v| at the final E
  bool converged = false;
};

/// Replaces the Dirichlet walls by the energy-dependent decaying-tail closure
/// and iterates E -> eigenvalue of H(E) nearest E by banded shift-invert.
RefinedLevel refine_level(const Potential& v, const GridSpec& grid, cplx guess);

/// Minimum Re sqrt(-E) for an eigenvalue to count as a localized candidate.
double localization_threshold(const GridSpec& grid);

struct BoundSpectrum {
  std::vector<cplx> dirichlet;       // every eigenvalue of the walled matrix
  std::vector<RefinedLevel> bound;   // refined localized levels, sorted
  std::vector<cplx> continuum;       // walled eigenvalues not treated as bound

  std::vector<cplx> bound_values() const;
};

BoundSpectrum solve_bound_spectrum(const Potential& v, const GridSpec& grid);

struct LevelMatch {
  std::size_t analytic = 0;
  std::size_t numeric = 0;
  double distance = 0.0;
};

/// Greedy one-to-one matching by complex distance; pairs farther than tol
/// stay unmatched. Deterministic for equal distances (lowest indices first).
std::vector<LevelMatch> match_levels(std::span<const cplx> analytic,
                                     std::span<const cplx> numeric, double tol);

}  // namespace num
}  // namespace ptscarf
