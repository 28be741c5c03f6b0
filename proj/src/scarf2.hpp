#pragma once

#include <complex>
#include <functional>
#include <string_view>
#include <vector>

#include "numerics.hpp"

namespace ptscarf {

using cplx = std::complex<double>;

/// Couplings (alpha, beta) of the complex Scarf II potential
///
///   V(x) = -sech^2 x [((a+b)/2)^2 + ((a-b)/2)^2 - 1/4]
///          + 2i sinh x sech^2 x ((b+a)/2)((b-a)/2)
///
/// plus an optional imaginary displacement x -> x + i axis_shift of the
/// coordinate. Units: hbar^2/2m = 1, H = -d^2/dx^2 + V.
struct ScarfParams {
  cplx alpha{0.8, 0.0};
  cplx beta{-4.2, 0.0};
  double axis_shift = 0.0;

  /// Throws InvalidArgument unless the couplings are finite and
  /// |axis_shift| < pi/2 (cosh(x + i eps) must not vanish on the real line).
  static ScarfParams make(cplx alpha, cplx beta, double axis_shift = 0.0);
  void validate() const;

  bool operator==(const ScarfParams&) const = default;
};

/// Sign selecting which of +-alpha enters the solution formulas.
enum class QuasiParity : int { Plus = 1, Minus = -1 };

inline int sign(QuasiParity q) { return static_cast<int>(q); }
inline QuasiParity opposite(QuasiParity q) {
  return q == QuasiParity::Plus ? QuasiParity::Minus : QuasiParity::Plus;
}
QuasiParity quasi_parity(int q);  // throws unless q is +1 or -1

enum class SymmetryPhase { Hermitian, PTUnbroken, PTBroken, NoBoundStates, General };
std::string_view to_string(SymmetryPhase p);

/// V(x + i eps) with alpha replaced by q*alpha. Bitwise independent of q.
cplx eval_potential(const ScarfParams& p, QuasiParity q, double x);
num::Potential potential_function(const ScarfParams& p);

/// -(n + (q alpha + beta + 1)/2)^2 ; defined for every n.
cplx energy(const ScarfParams& p, QuasiParity q, int n);

/// Number of n >= 0 with n < -[Re(q alpha + beta) + 1]/2.
int max_level(const ScarfParams& p, QuasiParity q);

struct Level {
  QuasiParity q = QuasiParity::Plus;
  int n = 0;
  cplx energy;
  bool normalizable = false;
};

/// Energy of (q, n) with the normalizability flag attached.
Level level(const ScarfParams& p, QuasiParity q, int n);

/// All normalizable levels, q = +1 first, each sector in increasing n.
std::vector<Level> bound_levels(const ScarfParams& p);

/// Unnormalized eigenfunction
///   (1 - i sinh u)^{q a/2 + 1/4} (1 + i sinh u)^{b/2 + 1/4} P_n^{(q a, b)}(i sinh u),
/// u = x + i eps, principal branches. Throws OutOfRange for non-normalizable n
/// and BranchCut where Re(1 -+ i sinh u) <= 0.
cplx wavefunction(const ScarfParams& p, QuasiParity q, int n, double x);

struct BoundState {
  QuasiParity q = QuasiParity::Plus;
  int n = 0;
  cplx energy;
  cplx pseudo_norm;  // numeric PT pseudo-norm; zero until computed
  std::function<cplx(double)> wavefunction;
};

std::vector<BoundState> bound_states(const ScarfParams& p);
/// Same, with pseudo_norm = pt_inner(psi, psi) on the given symmetric grid.
std::vector<BoundState> bound_states(const ScarfParams& p, const num::GridSpec& grid,
                                     num::InnerConvention convention);

SymmetryPhase classify_symmetry(const ScarfParams& p);

/// Whether [V(-x)]* = V(x) holds identically (PT-unbroken or PT-broken
/// couplings, zero axis shift).
bool is_pt_symmetric(const ScarfParams& p);

/// Coefficient conventions used elsewhere in the literature:
///   V1V2:    V1 = [(a+b)^2 + (a-b)^2 - 1]/4,  V2 = (a+b)(a-b)/2
///   AB:      A  = -(a+b+1)/2,                 B  = (a-b)/2
///   SLambda: s  = -(a+b+1)/2,                 lambda = i(a-b)/2
enum class Notation { V1V2, AB, SLambda };
std::string_view to_string(Notation n);
Notation notation_from_string(std::string_view tag);  // throws on unknown tag

struct ForeignCoefficients {
  Notation notation = Notation::AB;
  cplx first;
  cplx second;
};

ForeignCoefficients export_params(const ScarfParams& p, Notation target);
/// Inverse map. alpha and -alpha describe the same potential; the result has
/// Re alpha >= 0 (Im alpha >= 0 on ties). V1V2 only fixes beta^2, and the
/// representative with Re beta <= 0 (Im beta <= 0 on ties) is returned.
ScarfParams convert_params(const ForeignCoefficients& c, double axis_shift = 0.0);

/// The representative convert_params would return for the potential of p.
ScarfParams canonical_representative(const ScarfParams& p, Notation n);

}  // namespace ptscarf
