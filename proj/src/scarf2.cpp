#include "scarf2.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "error.hpp"
#include "specfun.hpp"

namespace ptscarf {

namespace {

constexpr double kPhaseTol = 1e-12;
constexpr cplx kI{0.0, 1.0};

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

bool is_real(cplx z) { return std::abs(z.imag()) <= kPhaseTol * (1.0 + std::abs(z.real())); }

bool is_imaginary(cplx z) {
  return std::abs(z.real()) <= kPhaseTol * (1.0 + std::abs(z.imag())) &&
         std::abs(z.imag()) > kPhaseTol;
}

cplx shifted(double x, double eps) { return {x, eps}; }

// Flip z to the half plane Re z >= 0 (Im z >= 0 on the imaginary axis).
cplx upper_representative(cplx z) {
  if (z.real() < 0.0 || (z.real() == 0.0 && z.imag() < 0.0)) return -z;
  return z;
}

}  // namespace

ScarfParams ScarfParams::make(cplx alpha, cplx beta, double axis_shift) {
  ScarfParams p{alpha, beta, axis_shift};
  p.validate();
  return p;
}

void ScarfParams::validate() const {
  require(finite(alpha) && finite(beta), "Scarf II couplings must be finite");
  require(std::isfinite(axis_shift) && std::abs(axis_shift) < std::numbers::pi / 2,
          "axis shift must satisfy |eps| < pi/2");
}

QuasiParity quasi_parity(int q) {
  require(q == 1 || q == -1, "quasi-parity must be +1 or -1");
  return q == 1 ? QuasiParity::Plus : QuasiParity::Minus;
}

std::string_view to_string(SymmetryPhase p) {
  switch (p) {
    case SymmetryPhase::Hermitian: return "Hermitian";
    case SymmetryPhase::PTUnbroken: return "PTUnbroken";
    case SymmetryPhase::PTBroken: return "PTBroken";
    case SymmetryPhase::NoBoundStates: return "NoBoundStates";
    case SymmetryPhase::General: return "General";
  }
  return "General";
}

cplx eval_potential(const ScarfParams& p, QuasiParity q, double x) {
  // Only alpha^2 enters, which is what makes the q = -1 evaluation bitwise
  // identical: ((a+b)/2)^2 + ((a-b)/2)^2 = (a^2+b^2)/2 and
  // ((b+a)/2)((b-a)/2) = (b^2-a^2)/4.
  const cplx a = double(sign(q)) * p.alpha;
  const cplx a2 = a * a;
  const cplx b2 = p.beta * p.beta;
  const cplx u = shifted(x, p.axis_shift);
  const cplx sech = 1.0 / std::cosh(u);
  const cplx even = (a2 + b2) / 2.0 - 0.25;
  const cplx odd = (b2 - a2) / 4.0;
  // sinh u sech^2 u written as tanh u sech u to stay finite for large |x|.
  return -sech * sech * even + 2.0 * kI * std::tanh(u) * sech * odd;
}

num::Potential potential_function(const ScarfParams& p) {
  return [p](double x) { return eval_potential(p, QuasiParity::Plus, x); };
}

cplx energy(const ScarfParams& p, QuasiParity q, int n) {
  const cplx k = double(n) + (double(sign(q)) * p.alpha + p.beta + 1.0) / 2.0;
  return -(k * k);
}

int max_level(const ScarfParams& p, QuasiParity q) {
  double bound = -((double(sign(q)) * p.alpha + p.beta).real() + 1.0) / 2.0;
  if (std::abs(bound - std::round(bound)) <= 1e-12 * (1.0 + std::abs(bound)))
    bound = std::round(bound);
  if (bound <= 0.0) return 0;
  return int(std::ceil(bound));
}

Level level(const ScarfParams& p, QuasiParity q, int n) {
  return {q, n, energy(p, q, n), n >= 0 && n < max_level(p, q)};
}

std::vector<Level> bound_levels(const ScarfParams& p) {
  std::vector<Level> out;
  for (QuasiParity q : {QuasiParity::Plus, QuasiParity::Minus})
    for (int n = 0; n < max_level(p, q); ++n) out.push_back(level(p, q, n));
  return out;
}

cplx wavefunction(const ScarfParams& p, QuasiParity q, int n, double x) {
  const int bound = max_level(p, q);
  if (n < 0 || n >= bound) {
    std::ostringstream msg;
    msg << "level n = " << n << " is not normalizable for q = " << sign(q)
        << ": need n < " << -((double(sign(q)) * p.alpha + p.beta).real() + 1.0) / 2.0
        << " (" << bound << " bound state" << (bound == 1 ? "" : "s") << ")";
    fail(ErrorKind::OutOfRange, msg.str());
  }
  const cplx a = double(sign(q)) * p.alpha;
  const cplx s = kI * std::sinh(shifted(x, p.axis_shift));
  const cplx lower = 1.0 - s;
  const cplx upper = 1.0 + s;
  if (p.axis_shift != 0.0 && (lower.real() <= 0.0 || upper.real() <= 0.0)) {
    std::ostringstream msg;
    msg << "principal branch of (1 -+ i sinh(x + i eps)) is discontinuous at x = " << x
        << " for eps = " << p.axis_shift;
    fail(ErrorKind::BranchCut, msg.str());
  }
  return std::pow(lower, a / 2.0 + 0.25) * std::pow(upper, p.beta / 2.0 + 0.25) *
         specfun::jacobi_poly({a, p.beta, n}, s);
}

std::vector<BoundState> bound_states(const ScarfParams& p) {
  std::vector<BoundState> out;
  for (const Level& l : bound_levels(p)) {
    BoundState s;
    s.q = l.q;
    s.n = l.n;
    s.energy = l.energy;
    s.wavefunction = [p, q = l.q, n = l.n](double x) { return wavefunction(p, q, n, x); };
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<BoundState> bound_states(const ScarfParams& p, const num::GridSpec& grid,
                                     num::InnerConvention convention) {
  auto out = bound_states(p);
  for (auto& s : out) {
    const auto f = num::GridFunction::sample(grid, s.wavefunction);
    s.pseudo_norm = num::pt_inner(f, f, convention);
  }
  return out;
}

SymmetryPhase classify_symmetry(const ScarfParams& p) {
  const cplx a = p.alpha, b = p.beta;
  if (std::abs(a - std::conj(b)) <= kPhaseTol * (1.0 + std::abs(a))) return SymmetryPhase::Hermitian;
  if (is_real(a) && is_real(b)) return SymmetryPhase::PTUnbroken;
  if ((is_imaginary(a) && is_real(b)) || (is_real(a) && is_imaginary(b)))
    return SymmetryPhase::PTBroken;
  if (is_imaginary(a) && is_imaginary(b)) return SymmetryPhase::NoBoundStates;
  return SymmetryPhase::General;
}

bool is_pt_symmetric(const ScarfParams& p) {
  if (p.axis_shift != 0.0) return false;
  const cplx a = p.alpha, b = p.beta;
  return (is_real(a) || is_imaginary(a)) && (is_real(b) || is_imaginary(b));
}

std::string_view to_string(Notation n) {
  switch (n) {
    case Notation::V1V2: return "V1V2";
    case Notation::AB: return "AB";
    case Notation::SLambda: return "sLambda";
  }
  return "AB";
}

Notation notation_from_string(std::string_view tag) {
  if (tag == "V1V2") return Notation::V1V2;
  if (tag == "AB") return Notation::AB;
  if (tag == "sLambda") return Notation::SLambda;
  fail(ErrorKind::InvalidArgument, "unknown notation tag '" + std::string(tag) +
                                       "' (expected V1V2, AB or sLambda)");
}

ForeignCoefficients export_params(const ScarfParams& p, Notation target) {
  const cplx a = p.alpha, b = p.beta;
  switch (target) {
    case Notation::V1V2:
      return {target, ((a + b) * (a + b) + (a - b) * (a - b) - 1.0) / 4.0, (a + b) * (a - b) / 2.0};
    case Notation::AB:
      return {target, -(a + b + 1.0) / 2.0, (a - b) / 2.0};
    case Notation::SLambda:
      return {target, -(a + b + 1.0) / 2.0, kI * (a - b) / 2.0};
  }
  fail(ErrorKind::InvalidArgument, "unknown notation");
}

ScarfParams convert_params(const ForeignCoefficients& c, double axis_shift) {
  cplx a, b;
  switch (c.notation) {
    case Notation::V1V2: {
      // V1 + 1/4 = (a^2 + b^2)/2,  V2 = (a^2 - b^2)/2.
      a = std::sqrt(c.first + 0.25 + c.second);
      b = -upper_representative(std::sqrt(c.first + 0.25 - c.second));
      break;
    }
    case Notation::AB:
      a = -c.first - 0.5 + c.second;
      b = -c.first - 0.5 - c.second;
      break;
    case Notation::SLambda:
      a = -c.first - 0.5 - kI * c.second;
      b = -c.first - 0.5 + kI * c.second;
      break;
  }
  return ScarfParams::make(upper_representative(a), b, axis_shift);
}

ScarfParams canonical_representative(const ScarfParams& p, Notation n) {
  ScarfParams out = p;
  out.alpha = upper_representative(p.alpha);
  if (n == Notation::V1V2) out.beta = -upper_representative(p.beta);
  return out;
}

}  // namespace ptscarf
