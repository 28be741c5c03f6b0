#include "susy.hpp"

#include <algorithm>
#include <cmath>

namespace ptscarf::susy {

namespace {

constexpr cplx kI{0.0, 1.0};

cplx half_sum(const ScarfParams& p, QuasiParity q) {
  return (double(sign(q)) * p.alpha + p.beta + 1.0) / 2.0;
}

cplx half_diff(const ScarfParams& p, QuasiParity q) {
  return (p.beta - double(sign(q)) * p.alpha) / 2.0;
}

void require_resolution(const num::GridFunction& f) {
  require(f.grid.n_points >= kMinShiftGridPoints && f.size() > 2 * f.grid.half_width(),
          "shift operators need a grid of at least 16 points");
}

double relative(double defect, double scale) { return scale > 0.0 ? defect / scale : defect; }

double max_abs(const Spinor& s) {
  return std::max(num::max_abs(s.bosonic), num::max_abs(s.fermionic));
}

double max_abs_difference(const Spinor& a, const Spinor& b) {
  return std::max(num::max_abs_difference(a.bosonic, b.bosonic),
                  num::max_abs_difference(a.fermionic, b.fermionic));
}

Spinor sum(const Spinor& a, const Spinor& b) {
  return {a.bosonic + b.bosonic, a.fermionic + b.fermionic};
}

}  // namespace

cplx Superpotential::value(double x) const {
  const cplx u{x, params.axis_shift};
  return -half_sum(params, q) * std::tanh(u) - kI * half_diff(params, q) / std::cosh(u);
}

cplx Superpotential::derivative(double x) const {
  const cplx u{x, params.axis_shift};
  const cplx sech = 1.0 / std::cosh(u);
  return -half_sum(params, q) * sech * sech + kI * half_diff(params, q) * sech * std::tanh(u);
}

cplx Superpotential::energy_shift() const {
  const cplx s = half_sum(params, q);
  return s * s;
}

Superpotential superpotential(const ScarfParams& p, QuasiParity q) {
  p.validate();
  return {p, q};
}

num::GridFunction apply_shift_down(const Superpotential& w, const num::GridFunction& f) {
  require_resolution(f);
  return num::differentiate(f) + num::multiply(f, [&w](double x) { return w.value(x); });
}

num::GridFunction apply_shift_up(const Superpotential& w, const num::GridFunction& f) {
  require_resolution(f);
  return num::multiply(f, [&w](double x) { return w.value(x); }) - num::differentiate(f);
}

cplx bosonic_potential(const Superpotential& w, double x) {
  const cplx v = w.value(x);
  return v * v - w.derivative(x);
}

cplx fermionic_potential(const Superpotential& w, double x) {
  const cplx v = w.value(x);
  return v * v + w.derivative(x);
}

ScarfParams partner_params(const ScarfParams& p, QuasiParity q) {
  return ScarfParams::make(double(sign(q)) * p.alpha + 1.0, p.beta + 1.0, p.axis_shift);
}

PartnerPair partner_pair(const ScarfParams& p) {
  return {p,
          partner_params(p, QuasiParity::Plus),
          partner_params(p, QuasiParity::Minus),
          superpotential(p, QuasiParity::Plus).energy_shift(),
          superpotential(p, QuasiParity::Minus).energy_shift()};
}

std::vector<SpectralLevel> fermionic_spectrum(const ScarfParams& p, QuasiParity q) {
  std::vector<SpectralLevel> out;
  for (int n = 1; n < max_level(p, q); ++n) out.push_back({q, n, energy(p, q, n)});
  const QuasiParity other = opposite(q);
  for (int n = 0; n < max_level(p, other); ++n) out.push_back({other, n, energy(p, other, n)});
  return out;
}

std::vector<DegeneracyRow> degeneracy_table(const ScarfParams& p, QuasiParity q) {
  std::vector<DegeneracyRow> out;
  for (const Level& l : bound_levels(p)) {
    DegeneracyRow row;
    row.bosonic_sector = l.q;
    row.bosonic_n = l.n;
    row.energy = l.energy;
    if (l.q == q) {
      row.missing = l.n == 0;
      row.partner_sector = QuasiParity::Plus;
      row.partner_n = l.n - 1;
    } else {
      row.partner_sector = QuasiParity::Minus;
      row.partner_n = l.n;
    }
    out.push_back(row);
  }
  return out;
}

Spinor apply_charge(const Superpotential& w, const Spinor& s) {
  const num::GridFunction lower = apply_shift_down(w, s.bosonic);
  return {num::GridFunction::zeros(lower.grid, lower.first, lower.size()), lower};
}

Spinor apply_charge_adjoint(const Superpotential& w, const Spinor& s) {
  const num::GridFunction upper = apply_shift_up(w, s.fermionic);
  return {upper, num::GridFunction::zeros(upper.grid, upper.first, upper.size())};
}

Spinor apply_hamiltonian(const Superpotential& w, const Spinor& s) {
  auto block = [](const num::GridFunction& f, const num::Potential& u) {
    const num::GridFunction d2 = num::second_derivative(f);
    return num::multiply(f, u) - d2;
  };
  return {block(s.bosonic, [&w](double x) { return bosonic_potential(w, x); }),
          block(s.fermionic, [&w](double x) { return fermionic_potential(w, x); })};
}

bool AlgebraReport::passed() const {
  return q_squared == 0.0 && q_adjoint_squared == 0.0 && anticommutator <= tolerance &&
         commutator_q <= tolerance && commutator_q_adjoint <= tolerance;
}

std::vector<Spinor> test_spinors(const num::GridSpec& grid, int count) {
  std::vector<Spinor> out;
  for (int k = 0; k < count; ++k) {
    const double centre = -1.5 + 0.75 * k;
    const double width = 0.8 + 0.15 * k;
    const double wave = 0.5 * (k - 2);
    auto packet = [=](double shift, double phase) {
      return [=](double x) {
        const double y = (x - centre - shift) / width;
        return std::exp(-0.5 * y * y) * std::polar(1.0, wave * x + phase);
      };
    };
    out.push_back({num::GridFunction::sample(grid, packet(0.0, 0.0)),
                   num::GridFunction::sample(grid, packet(0.4, 0.3 * k + 0.1))});
  }
  return out;
}

AlgebraReport susy_algebra_check(const ScarfParams& p, QuasiParity q, const num::GridSpec& grid,
                                 int refine) {
  AlgebraReport r;
  r.grid = grid.refined(refine);
  const Superpotential w = superpotential(p, q);
  const auto spinors = test_spinors(r.grid);
  r.spinors = int(spinors.size());
  for (const Spinor& s : spinors) {
    const Spinor qs = apply_charge(w, s);
    const Spinor qds = apply_charge_adjoint(w, s);
    r.q_squared = std::max(r.q_squared, max_abs(apply_charge(w, qs)));
    r.q_adjoint_squared = std::max(r.q_adjoint_squared, max_abs(apply_charge_adjoint(w, qds)));

    const Spinor hs = apply_hamiltonian(w, s);
    const Spinor anti = sum(apply_charge(w, qds), apply_charge_adjoint(w, qs));
    r.anticommutator =
        std::max(r.anticommutator, relative(max_abs_difference(anti, hs), max_abs(hs)));

    const Spinor hq = apply_hamiltonian(w, qs);
    const Spinor qh = apply_charge(w, hs);
    r.commutator_q = std::max(
        r.commutator_q,
        relative(max_abs_difference(hq, qh), std::max(max_abs(hq), max_abs(qh))));

    const Spinor hqd = apply_hamiltonian(w, qds);
    const Spinor qdh = apply_charge_adjoint(w, hs);
    r.commutator_q_adjoint = std::max(
        r.commutator_q_adjoint,
        relative(max_abs_difference(hqd, qdh), std::max(max_abs(hqd), max_abs(qdh))));
  }
  return r;
}

TModifiedPartner t_modified_partner(const ScarfParams& p, QuasiParity q) {
  TModifiedPartner t;
  const Superpotential w = superpotential(p, q);
  const cplx eps = w.energy_shift();
  t.partner = partner_params(p, q);
  t.shift = std::conj(eps);
  t.potential = [w, eps](double x) { return std::conj(fermionic_potential(w, x) - eps); };
  for (SpectralLevel l : fermionic_spectrum(p, q)) {
    l.energy = std::conj(l.energy);
    t.spectrum.push_back(l);
  }
  t.partner_pt_symmetric = is_pt_symmetric(t.partner);
  t.spectrum_map =
      "eigenvalues of the conjugated fermionic Hamiltonian are the complex conjugates of the "
      "fermionic eigenvalues";
  if (classify_symmetry(p) == SymmetryPhase::PTUnbroken)
    t.spectrum_map += "; the input is PT-unbroken, so both spectra are real and coincide";
  if (t.partner_pt_symmetric)
    t.spectrum_map += "; the fermionic potential is PT symmetric, so conjugation equals reflection";
  return t;
}

}  // namespace ptscarf::susy
