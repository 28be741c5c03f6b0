#pragma once

#include <string>
#include <vector>

#include "numerics.hpp"
#include "scarf2.hpp"

namespace ptscarf::susy {

/// W(x) = -(1/2)(q a + b + 1) tanh u - (i/2)(b - q a) sech u,  u = x + i eps.
/// W = -(d/dx) ln psi_0 for the ground state of sector q.
struct Superpotential {
  ScarfParams params;
  QuasiParity q = QuasiParity::Plus;

  cplx value(double x) const;
  cplx derivative(double x) const;  // exact closed form
  /// ((q a + b + 1)/2)^2 = -E_0 of sector q.
  cplx energy_shift() const;
};

Superpotential superpotential(const ScarfParams& p, QuasiParity q);

/// Smallest grid the shift operators accept.
inline constexpr int kMinShiftGridPoints = 16;

/// A f = f' + W f on the stencil interior of f.
num::GridFunction apply_shift_down(const Superpotential& w, const num::GridFunction& f);
/// A^dagger f = -f' + W f on the stencil interior of f.
num::GridFunction apply_shift_up(const Superpotential& w, const num::GridFunction& f);

/// U_- = W^2 - W' (the A^dagger A potential).
cplx bosonic_potential(const Superpotential& w, double x);
/// U_+ = W^2 + W' (the A A^dagger potential).
cplx fermionic_potential(const Superpotential& w, double x);

/// (q a + 1, b + 1), stored with quasi-parity label reset to +1.
ScarfParams partner_params(const ScarfParams& p, QuasiParity q);

struct PartnerPair {
  ScarfParams bosonic;
  ScarfParams fermionic_plus;
  ScarfParams fermionic_minus;
  cplx shift_plus;
  cplx shift_minus;
};

PartnerPair partner_pair(const ScarfParams& p);

/// A level labelled by the bosonic sector and index it coincides with.
struct SpectralLevel {
  QuasiParity sector = QuasiParity::Plus;
  int n = 0;
  cplx energy;
};

/// Bound spectrum of the partner built from sector q: {E_n^(q), n >= 1}
/// followed by {E_n^(-q), all n}. Always one level short of the bosonic
/// spectrum when sector q has a bound state.
std::vector<SpectralLevel> fermionic_spectrum(const ScarfParams& p, QuasiParity q);

/// Where each bosonic level goes in the partner built from sector q.
struct DegeneracyRow {
  QuasiParity bosonic_sector = QuasiParity::Plus;
  int bosonic_n = 0;
  cplx energy;
  bool missing = false;  // the (q, 0) level has no partner
  QuasiParity partner_sector = QuasiParity::Plus;  // in the partner's own labels
  int partner_n = 0;
};

std::vector<DegeneracyRow> degeneracy_table(const ScarfParams& p, QuasiParity q);

/// Two-component grid function (bosonic, fermionic).
struct Spinor {
  num::GridFunction bosonic;
  num::GridFunction fermionic;
};

/// Q = [[0, 0], [A, 0]].
Spinor apply_charge(const Superpotential& w, const Spinor& s);
/// Q^dagger = [[0, A^dagger], [0, 0]].
Spinor apply_charge_adjoint(const Superpotential& w, const Spinor& s);
/// diag(-d^2 + U_-, -d^2 + U_+), both written with the direct second
/// difference rather than as products of shift operators.
Spinor apply_hamiltonian(const Superpotential& w, const Spinor& s);

struct AlgebraReport {
  int spinors = 0;
  double tolerance = 1e-6;
  double q_squared = 0.0;          // max |Q^2 s|, expected exactly 0
  double q_adjoint_squared = 0.0;  // max |Q^dagger^2 s|, expected exactly 0
  double anticommutator = 0.0;     // max relative |{Q, Q^dagger} s - H s|
  double commutator_q = 0.0;       // max relative |[H, Q] s|
  double commutator_q_adjoint = 0.0;
  num::GridSpec grid;              // grid the operators acted on
  bool passed() const;
};

/// Deterministic smooth test spinors (Gaussian envelopes with distinct
/// centres, widths and phases) sampled on grid.
std::vector<Spinor> test_spinors(const num::GridSpec& grid, int count = 5);

/// Nilpotency, {Q, Q^dagger} = H and [H, Q] = [H, Q^dagger] = 0 on the test
/// spinors. Operators act on grid.refined(refine).
AlgebraReport susy_algebra_check(const ScarfParams& p, QuasiParity q, const num::GridSpec& grid,
                                 int refine = 4);

/// T H_+ T - eps^*: the complex-conjugated fermionic partner.
struct TModifiedPartner {
  ScarfParams partner;         // parameters of the unmodified partner
  cplx shift;                  // conj(eps^(q))
  num::Potential potential;    // x -> conj(U_+(x) - eps)
  std::vector<SpectralLevel> spectrum;  // conjugates of fermionic_spectrum
  bool partner_pt_symmetric = false;    // then potential(x) = U_+(-x) - eps
  std::string spectrum_map;
};

TModifiedPartner t_modified_partner(const ScarfParams& p, QuasiParity q);

}  // namespace ptscarf::susy
