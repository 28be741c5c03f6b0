#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

namespace ptscarf::verify {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kDegenerate = 1e-9;
constexpr double kOrthogonality = 1e-6;
constexpr double kTailExponent = 36.0;  // e^-36 ~ 2e-16
constexpr double kMaxQuadratureBox = 200.0;
constexpr double kHermitianCross = 1e-3;
constexpr double kUnpaired = 1e-3;
constexpr double kAnnihilation = 1e-8;
constexpr double kProportionality = 1e-6;

bool same_level(cplx a, cplx b) { return std::abs(a - b) <= kDegenerate * (1.0 + std::abs(a)); }

std::string label(QuasiParity q) { return q == QuasiParity::Plus ? "q=+1" : "q=-1"; }

std::string with_sector(const std::string& name, QuasiParity q) {
  return name + "[" + label(q) + "]";
}

std::string fmt(cplx z) {
  std::ostringstream s;
  s.precision(10);
  s << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return s.str();
}

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(6);
  s << x;
  return s.str();
}

std::vector<Level> as_levels(const std::vector<susy::SpectralLevel>& levels) {
  std::vector<Level> out;
  for (const auto& l : levels) out.push_back({l.sector, l.n, l.energy, true});
  return out;
}

bool has_bound_levels(const ScarfParams& p) {
  return max_level(p, QuasiParity::Plus) + max_level(p, QuasiParity::Minus) > 0;
}

// max |a - b| / scale over the range both cover.
double relative_difference(const num::GridFunction& a, const num::GridFunction& b, double scale) {
  const double d = num::max_abs_difference(a, b);
  return scale > 0.0 ? d / scale : d;
}

}  // namespace

CheckResult CheckResult::make(std::string name, double measured, double tolerance,
                              std::string details) {
  return {std::move(name), measured <= tolerance, measured, tolerance, std::move(details)};
}

CheckResult CheckResult::must_exceed(std::string name, double defect, double threshold,
                                     std::string details) {
  const double measured = defect > 0.0 ? 1.0 / defect : kInf;
  return make(std::move(name), measured, 1.0 / threshold, std::move(details));
}

std::vector<cplx> SpectrumReport::numeric_values() const {
  std::vector<cplx> out;
  for (const auto& l : numeric) out.push_back(l.value);
  return out;
}

bool SpectrumReport::all_matched() const { return matches.size() == distinct.size(); }

double SpectrumReport::max_error() const {
  if (!all_matched()) return kInf;
  double worst = 0.0;
  for (const auto& m : matches) worst = std::max(worst, m.distance);
  return worst;
}

std::optional<cplx> SpectrumReport::numeric_for(std::size_t analytic_index) const {
  if (analytic_index >= analytic.size()) return std::nullopt;
  const cplx e = analytic[analytic_index].energy;
  for (const auto& m : matches)
    if (same_level(distinct[m.analytic], e)) return numeric[m.numeric].value;
  return std::nullopt;
}

CheckResult SpectrumReport::as_check(double tolerance, std::string name) const {
  std::ostringstream d;
  d << matches.size() << " of " << distinct.size() << " distinct analytic levels matched";
  if (!unmatched_numeric.empty()) d << "; " << unmatched_numeric.size() << " unmatched numeric";
  for (std::size_t i = 0; i < distinct.size(); ++i)
    if (std::none_of(matches.begin(), matches.end(), [&](auto& m) { return m.analytic == i; }))
      d << "; missing " << fmt(distinct[i]);
  return CheckResult::make(std::move(name), max_error(), tolerance, d.str());
}

SpectrumReport compare_spectrum(const num::Potential& v, std::vector<Level> expected,
                                const num::GridSpec& grid) {
  SpectrumReport r;
  r.grid = grid;
  r.analytic = std::move(expected);
  for (const Level& l : r.analytic) {
    auto it = std::find_if(r.distinct.begin(), r.distinct.end(),
                           [&](cplx d) { return same_level(d, l.energy); });
    if (it == r.distinct.end()) {
      r.distinct.push_back(l.energy);
      r.multiplicity.push_back(1);
    } else {
      ++r.multiplicity[std::size_t(it - r.distinct.begin())];
    }
  }
  num::BoundSpectrum bs = num::solve_bound_spectrum(v, grid);
  r.numeric = std::move(bs.bound);
  r.continuum = std::move(bs.continuum);
  const auto values = r.numeric_values();
  r.matches = num::match_levels(r.distinct, values, kMatchTolerance);
  for (std::size_t j = 0; j < values.size(); ++j)
    if (std::none_of(r.matches.begin(), r.matches.end(), [&](auto& m) { return m.numeric == j; }))
      r.unmatched_numeric.push_back(values[j]);
  return r;
}

double conjugate_pairing_defect(const std::vector<cplx>& values) {
  double worst = 0.0;
  for (const cplx z : values) {
    double nearest = kInf;
    for (const cplx w : values) nearest = std::min(nearest, std::abs(std::conj(z) - w));
    worst = std::max(worst, nearest);
  }
  return worst;
}

SpectrumReport check_spectrum(const ScarfParams& p, const num::GridSpec& grid) {
  p.validate();
  SpectrumReport r = compare_spectrum(potential_function(p), bound_levels(p), grid);
  r.params = p;
  r.phase = classify_symmetry(p);
  // All refined levels: for imaginary beta the conjugate of a listed level
  // belongs to the -beta family, which the quasi-parity labels do not cover.
  if (r.phase == SymmetryPhase::PTBroken)
    r.pairing = CheckResult::make("spectrum_conjugate_pairing",
                                  conjugate_pairing_defect(r.numeric_values()), kGridTolerance,
                                  "max distance from a numeric level's conjugate to the set");
  return r;
}

PartnerAnalysis analyze_partner(const ScarfParams& p, QuasiParity q, const num::GridSpec& grid) {
  require(has_bound_levels(p), "partner isospectrality needs at least one bound level");
  PartnerAnalysis a;
  a.bosonic = p;
  a.q = q;
  a.partner = susy::partner_params(p, q);
  const susy::Superpotential w = susy::superpotential(p, q);
  a.shift = w.energy_shift();
  a.missing = energy(p, q, 0);
  a.has_missing = max_level(p, q) >= 1;
  a.expected = susy::fermionic_spectrum(p, q);
  const cplx eps = a.shift;
  a.report = compare_spectrum(
      [w, eps](double x) { return susy::fermionic_potential(w, x) - eps; }, as_levels(a.expected),
      grid);
  a.report.params = a.partner;
  a.report.phase = classify_symmetry(a.partner);
  return a;
}

CheckResult check_partner_isospectrality(const PartnerAnalysis& a) {
  const SpectrumReport& r = a.report;
  double measured = r.max_error();
  std::ostringstream d;
  d << "partner (" << fmt(a.partner.alpha) << ", " << fmt(a.partner.beta) << "); expected "
    << a.expected.size() << " levels, found " << r.numeric.size();
  if (a.has_missing) d << "; missing bosonic level " << fmt(a.missing);
  if (!r.unmatched_numeric.empty()) {
    measured = kInf;
    for (const cplx z : r.unmatched_numeric) d << "; unexpected " << fmt(z);
  }
  if (!r.all_matched()) d << "; " << r.distinct.size() - r.matches.size() << " expected unmatched";
  return CheckResult::make(with_sector("partner_isospectrality", a.q), measured, kGridTolerance,
                           d.str());
}

CheckResult check_partner_isospectrality(const ScarfParams& p, QuasiParity q,
                                         const num::GridSpec& grid) {
  return check_partner_isospectrality(analyze_partner(p, q, grid));
}

CheckResult check_partner_unpaired(const PartnerAnalysis& a) {
  const double defect = conjugate_pairing_defect(a.report.numeric_values());
  return CheckResult::must_exceed(with_sector("partner_not_conjugate_paired", a.q), defect,
                                  kUnpaired,
                                  "conjugation defect of the partner spectrum " + fmt(defect) +
                                      " must be >= " + fmt(kUnpaired));
}

std::vector<CheckResult> IntertwiningReport::checks() const {
  return {intertwining, round_trip, annihilation, proportionality};
}

IntertwiningReport check_intertwining(const ScarfParams& p, QuasiParity q,
                                      const num::GridSpec& grid) {
  IntertwiningReport r;
  r.params = p;
  r.q = q;
  r.grid = grid.refined(kOperatorRefinement);
  const susy::Superpotential w = susy::superpotential(p, q);
  const cplx eps = w.energy_shift();
  const ScarfParams partner = susy::partner_params(p, q);
  const num::Potential partner_v = [w, eps](double x) {
    return susy::fermionic_potential(w, x) - eps;
  };

  double worst_res = 0.0, worst_trip = 0.0, worst_zero = 0.0, worst_prop = 0.0;
  for (const Level& l : bound_levels(p)) {
    IntertwiningRow row;
    row.sector = l.q;
    row.n = l.n;
    row.energy = l.energy;
    row.annihilated = l.q == q && l.n == 0;

    const auto f = num::GridFunction::sample(r.grid, [&](double x) {
      return wavefunction(p, l.q, l.n, x);
    });
    const double f_scale = num::max_abs(f);
    const auto af = susy::apply_shift_down(w, f);
    const double af_scale = num::max_abs(af);
    const auto trip = susy::apply_shift_up(w, af);
    const cplx lift = l.energy + eps;

    if (row.annihilated) {
      row.residual = af_scale / f_scale;
      row.round_trip = num::max_abs(trip) / f_scale;
      worst_zero = std::max(worst_zero, row.residual);
    } else {
      const auto h_af = num::multiply(af, partner_v) - num::second_derivative(af);
      row.residual = relative_difference(h_af, l.energy * af, af_scale);
      row.round_trip = relative_difference(trip, lift * f, std::abs(lift) * f_scale);
      worst_res = std::max(worst_res, row.residual);

      const QuasiParity target = l.q == q ? QuasiParity::Plus : QuasiParity::Minus;
      const int target_n = l.q == q ? l.n - 1 : l.n;
      const auto psi = num::GridFunction::sample(r.grid, [&](double x) {
        return wavefunction(partner, target, target_n, x);
      }).restricted(af.first, af.end());
      cplx num_c{0.0, 0.0};
      double den = 0.0;
      for (int k = 0; k < af.size(); ++k) {
        num_c += std::conj(psi.values[std::size_t(k)]) * af.values[std::size_t(k)];
        den += std::norm(psi.values[std::size_t(k)]);
      }
      row.ratio = num_c / den;
      row.proportionality = relative_difference(af, row.ratio * psi, af_scale);
      worst_prop = std::max(worst_prop, row.proportionality);
    }
    worst_trip = std::max(worst_trip, row.round_trip);
    r.rows.push_back(row);
  }

  const std::string grid_note = "operator grid N=" + std::to_string(r.grid.n_points);
  r.intertwining = CheckResult::make(with_sector("intertwining", q), worst_res, kGridTolerance,
                                     "max |H_+ Af - E Af| / |Af| over excited states; " + grid_note);
  r.round_trip = CheckResult::make(with_sector("intertwining_round_trip", q), worst_trip,
                                   kGridTolerance,
                                   "max |A^dagger A f - (E + eps) f| relative; " + grid_note);
  r.annihilation = CheckResult::make(with_sector("ground_state_annihilation", q), worst_zero,
                                     kAnnihilation, "|A psi_0| / |psi_0|; " + grid_note);
  r.proportionality =
      CheckResult::make(with_sector("shift_proportionality", q), worst_prop, kProportionality,
                        "max |Af - c psi_partner| / |Af|; " + grid_note);
  return r;
}

std::vector<ScanRow> scan_pt_breaking(double beta, const std::vector<cplx>& alpha_path,
                                      const num::GridSpec& grid) {
  require(!alpha_path.empty(), "scan path must not be empty");
  std::vector<ScanRow> rows;
  for (const cplx alpha : alpha_path) {
    ScanRow row;
    row.alpha = alpha;
    try {
      const ScarfParams p = ScarfParams::make(alpha, beta);
      row.phase = classify_symmetry(p);
      row.analytic = bound_levels(p);
      row.numeric = num::solve_bound_spectrum(potential_function(p), grid).bound_values();
    } catch (const std::exception& e) {
      row.ok = false;
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<cplx> default_scan_path(double re_start, int n_real, double im_end, int n_imag) {
  require(n_real >= 1 && n_imag >= 0, "scan path needs at least one real sample");
  std::vector<cplx> path;
  for (int k = 0; k < n_real; ++k)
    path.emplace_back(n_real == 1 ? 0.0 : re_start * (1.0 - double(k) / double(n_real - 1)), 0.0);
  for (int k = 1; k <= n_imag; ++k) path.emplace_back(0.0, im_end * double(k) / double(n_imag));
  return path;
}

AxisShiftReport check_axis_shift(const ScarfParams& p, const std::vector<double>& epsilons,
                                 const num::GridSpec& grid, const SpectrumReport* unshifted) {
  AxisShiftReport r;
  const std::vector<Level> expected = bound_levels(p);
  double worst = 0.0;
  int rejected = 0;
  for (const double eps : epsilons) {
    AxisShiftRow row;
    row.epsilon = eps;
    if (!(std::abs(eps) < std::numbers::pi / 2)) {
      row.accepted = false;
      row.error = "|eps| must be below pi/2";
      ++rejected;
      r.rows.push_back(row);
      continue;
    }
    ScarfParams shifted = p;
    shifted.axis_shift = eps;
    SpectrumReport s;
    if (eps == p.axis_shift && unshifted && unshifted->grid.n_points == grid.n_points &&
        unshifted->grid.x_min == grid.x_min && unshifted->grid.x_max == grid.x_max &&
        unshifted->params == shifted)
      s = *unshifted;
    else
      s = compare_spectrum(potential_function(shifted), expected, grid);
    row.max_error = s.max_error();
    row.numeric = s.numeric_values();
    worst = std::max(worst, row.max_error);
    r.rows.push_back(row);
  }
  std::ostringstream d;
  d << "eps in {";
  for (std::size_t i = 0; i < epsilons.size(); ++i) d << (i ? ", " : "") << epsilons[i];
  d << "} against the unshifted analytic levels";
  if (rejected) d << "; " << rejected << " eps rejected";
  r.check = CheckResult::make("axis_shift_invariance", rejected ? kInf : worst, kGridTolerance,
                              d.str());
  return r;
}

std::vector<CheckResult> OrthogonalityReport::checks() const {
  return {orthogonality, hermitian_cross_term};
}

OrthogonalityReport check_pt_orthogonality(const ScarfParams& p, const num::GridSpec& grid) {
  const SymmetryPhase phase = classify_symmetry(p);
  require(phase == SymmetryPhase::PTUnbroken || phase == SymmetryPhase::PTBroken,
          "PT orthogonality needs PT-unbroken or PT-broken couplings");
  require(p.axis_shift == 0.0, "PT orthogonality is evaluated on the unshifted axis");
  require(grid.is_symmetric(), "PT orthogonality needs a symmetric grid");

  OrthogonalityReport r;
  r.states = bound_states(p);
  const std::size_t n = r.states.size();

  // psi_n decays like exp(-kappa_n |x|), kappa_n = -(Re(q alpha + beta) + 1) / 2 - n.
  double slowest = kInf;
  for (const auto& s : r.states) {
    const double kappa = -(std::real(double(sign(s.q)) * p.alpha + p.beta) + 1.0) / 2.0 - s.n;
    slowest = std::min(slowest, 2.0 * kappa);
  }
  const double h = grid.step();
  const double half = std::min(kMaxQuadratureBox, std::max(grid.x_max, kTailExponent / slowest));
  const int cells = 2 * int(std::ceil(half / h));
  r.quadrature = num::GridSpec::symmetric(h * cells / 2.0, cells + 1, grid.stencil_order);

  // pair[i]: the unique j with E_j = conj(E_i), or -1 when ambiguous/absent.
  std::vector<int> pair(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    int found = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (same_level(std::conj(r.states[i].energy), r.states[j].energy)) {
        pair[i] = found++ ? -1 : int(j);
        if (found > 1) break;
      }
  }
  auto skipped = [&](std::size_t i, std::size_t j) {
    return pair[i] < 0 || pair[j] < 0 || int(j) == pair[i] ||
           (i != j && same_level(r.states[i].energy, r.states[j].energy));
  };

  auto build = [&](const num::GridSpec& on, const std::string& name, auto inner, bool hermitian) {
    std::vector<num::GridFunction> f;
    for (const auto& s : r.states) f.push_back(num::GridFunction::sample(on, s.wavefunction));
    GramMatrix g;
    g.convention = name;
    g.entries.assign(n, std::vector<cplx>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g.entries[i][j] = inner(f[i], f[j]);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (hermitian) {
          if (i == j || same_level(r.states[i].energy, r.states[j].energy)) continue;
          const double scale = std::sqrt(std::abs(g.entries[i][i]) * std::abs(g.entries[j][j]));
          worst = std::max(worst, std::abs(g.entries[i][j]) / scale);
          continue;
        }
        if (skipped(i, j)) continue;
        const double scale =
            std::sqrt(std::abs(g.entries[i][std::size_t(pair[i])]) *
                      std::abs(g.entries[j][std::size_t(pair[j])]));
        worst = std::max(worst, scale > 0.0 ? std::abs(g.entries[i][j]) / scale : kInf);
      }
    g.off_pair_ratio = worst;
    return g;
  };

  using num::InnerConvention;
  auto conjugating = [](auto& a, auto& b) {
    return num::pt_inner(a, b, InnerConvention::Conjugating);
  };
  auto bilinear = [](auto& a, auto& b) { return num::pt_inner(a, b, InnerConvention::Bilinear); };
  r.gram.push_back(build(r.quadrature, "conjugating", conjugating, false));
  r.gram.push_back(build(r.quadrature, "bilinear", bilinear, false));
  r.gram.push_back(build(r.quadrature, "hermitian", [](auto& a, auto& b) {
    return num::hermitian_inner(a, b);
  }, true));

  const GramMatrix& best =
      r.gram[0].off_pair_ratio <= r.gram[1].off_pair_ratio ? r.gram[0] : r.gram[1];
  r.winner = best.convention;
  r.box_off_pair_ratio =
      (r.winner == "conjugating" ? build(grid, r.winner, conjugating, false)
                                 : build(grid, r.winner, bilinear, false))
          .off_pair_ratio;
  r.orthogonality = CheckResult::make(
      "pt_orthogonality", best.off_pair_ratio, kOrthogonality,
      "orthogonalizing convention: " + r.winner + " (conjugating " +
          fmt(r.gram[0].off_pair_ratio) + ", bilinear " + fmt(r.gram[1].off_pair_ratio) +
          "); integrated on [-" + fmt(r.quadrature.x_max) + ", " + fmt(r.quadrature.x_max) +
          "], configured box alone gives " + fmt(r.box_off_pair_ratio));
  r.hermitian_cross_term = CheckResult::must_exceed(
      "hermitian_product_not_orthogonal", r.gram[2].off_pair_ratio, kHermitianCross,
      "largest Hermitian cross term " + fmt(r.gram[2].off_pair_ratio) +
          " of the diagonal scale must be >= " + fmt(kHermitianCross));
  return r;
}

std::vector<CheckResult> TModifiedReport::checks() const {
  std::vector<CheckResult> out{spectrum};
  if (reflection) out.push_back(*reflection);
  return out;
}

TModifiedReport check_t_modified(const ScarfParams& p, QuasiParity q, const num::GridSpec& grid) {
  TModifiedReport r;
  r.q = q;
  r.partner = susy::t_modified_partner(p, q);
  r.report = compare_spectrum(r.partner.potential, as_levels(r.partner.spectrum), grid);
  r.report.params = r.partner.partner;
  r.report.phase = classify_symmetry(r.partner.partner);
  double measured = r.report.max_error();
  if (!r.report.unmatched_numeric.empty()) measured = kInf;
  r.spectrum = CheckResult::make(with_sector("t_modified_spectrum", q), measured, kGridTolerance,
                                 r.partner.spectrum_map);
  if (r.partner.partner_pt_symmetric) {
    const susy::Superpotential w = susy::superpotential(p, q);
    const cplx eps = w.energy_shift();
    double worst = 0.0;
    for (int i = 0; i < grid.n_points; ++i) {
      const double x = grid.x(i);
      worst = std::max(worst, std::abs(r.partner.potential(x) -
                                        (susy::fermionic_potential(w, -x) - eps)));
    }
    r.reflection = CheckResult::make(with_sector("t_modified_reflection", q), worst,
                                     kShapeTolerance,
                                     "max |conj(U_+(x) - eps) - (U_+(-x) - eps)| on the grid");
  }
  return r;
}

ConvergenceReport check_convergence(const ScarfParams& p, const num::GridSpec& fine,
                                    double min_ratio, const SpectrumReport* fine_report) {
  ConvergenceReport r;
  r.fine = fine;
  r.coarse = fine.halved();
  r.coarse_error = check_spectrum(p, r.coarse).max_error();
  r.fine_error = fine_report ? fine_report->max_error() : check_spectrum(p, fine).max_error();
  double measured;
  if (!std::isfinite(r.coarse_error) || !std::isfinite(r.fine_error))
    measured = kInf;
  else
    measured = r.coarse_error > 0.0 ? r.fine_error / r.coarse_error : (r.fine_error > 0 ? kInf : 0.0);
  std::ostringstream d;
  d << "worst level error N=" << r.coarse.n_points << ": " << fmt(r.coarse_error)
    << ", N=" << r.fine.n_points << ": " << fmt(r.fine_error) << "; reduction must be >= "
    << min_ratio;
  r.check = CheckResult::make("convergence", measured, 1.0 / min_ratio, d.str());
  return r;
}

std::vector<CheckResult> check_algebraic_identities(const ScarfParams& p, int samples) {
  std::mt19937_64 rng(0x1d3a7u);
  std::uniform_real_distribution<double> dist(-10.0, 10.0);
  std::vector<double> xs(static_cast<std::size_t>(samples));
  for (double& x : xs) x = dist(rng);

  std::vector<CheckResult> out;
  for (QuasiParity q : {QuasiParity::Plus, QuasiParity::Minus}) {
    const susy::Superpotential w = susy::superpotential(p, q);
    const cplx eps = w.energy_shift();
    const ScarfParams partner = susy::partner_params(p, q);
    double factor = 0.0, shape = 0.0;
    for (const double x : xs) {
      factor = std::max(factor,
                        std::abs(susy::bosonic_potential(w, x) - eps - eval_potential(p, q, x)));
      shape = std::max(shape, std::abs(susy::fermionic_potential(w, x) - eps -
                                       eval_potential(partner, QuasiParity::Plus, x)));
    }
    const std::string at = std::to_string(samples) + " sample points";
    out.push_back(CheckResult::make(with_sector("identity_factorization", q), factor,
                                    kIdentityTolerance, "max |W^2 - W' - eps - V| at " + at));
    out.push_back(CheckResult::make(with_sector("identity_shape_invariance", q), shape,
                                    kShapeTolerance,
                                    "max |U_+ - eps - V(q alpha + 1, beta + 1)| at " + at));
    out.push_back(CheckResult::make(with_sector("identity_energy_shift", q),
                                    std::abs(eps + energy(p, q, 0)), 0.0,
                                    "eps = " + fmt(eps) + " against -E_0"));
  }
  return out;
}

std::vector<CheckResult> algebra_checks(const susy::AlgebraReport& r, QuasiParity q) {
  const std::string on = std::to_string(r.spinors) + " test spinors, grid N=" +
                         std::to_string(r.grid.n_points);
  return {
      CheckResult::make(with_sector("susy_nilpotency", q),
                        std::max(r.q_squared, r.q_adjoint_squared), 0.0,
                        "max |Q^2 s|, |Q^dagger^2 s| on " + on),
      CheckResult::make(with_sector("susy_anticommutator", q), r.anticommutator, r.tolerance,
                        "max |{Q, Q^dagger} s - H s| / |H s| on " + on),
      CheckResult::make(with_sector("susy_commutator", q),
                        std::max(r.commutator_q, r.commutator_q_adjoint), r.tolerance,
                        "max relative |[H, Q] s|, |[H, Q^dagger] s| on " + on),
  };
}

int SuiteReport::failures() const {
  return int(std::count_if(checks.begin(), checks.end(), [](auto& c) { return !c.passed; }));
}

SuiteReport run_suite(const ScarfParams& p, const num::GridSpec& grid) {
  p.validate();
  SuiteReport s;
  s.params = p;
  s.grid = grid;
  s.phase = classify_symmetry(p);
  auto add = [&s](const std::vector<CheckResult>& cs) {
    s.checks.insert(s.checks.end(), cs.begin(), cs.end());
  };

  s.spectrum = check_spectrum(p, grid);
  add({s.spectrum.as_check(kGridTolerance)});
  if (s.spectrum.pairing) add({*s.spectrum.pairing});
  if (s.phase == SymmetryPhase::Hermitian) {
    double imag = 0.0;
    for (const cplx z : s.spectrum.numeric_values()) imag = std::max(imag, std::abs(z.imag()));
    add({CheckResult::make("spectrum_real", imag, kGridTolerance,
                           "max |Im E| of the numeric levels")});
  }
  add(check_algebraic_identities(p));

  const bool bound = has_bound_levels(p);
  const bool unshifted = p.axis_shift == 0.0;
  for (QuasiParity q : {QuasiParity::Plus, QuasiParity::Minus}) {
    s.algebra.push_back(susy::susy_algebra_check(p, q, grid, kOperatorRefinement));
    add(algebra_checks(s.algebra.back(), q));
    // Without a normalizable psi_0 in sector q the partner can gain the level
    // E_0^(q) (carried by 1/psi_0), so the removal pattern does not apply.
    if (max_level(p, q) < 1) continue;
    s.partners.push_back(analyze_partner(p, q, grid));
    add({check_partner_isospectrality(s.partners.back())});
    if (s.phase == SymmetryPhase::PTBroken) add({check_partner_unpaired(s.partners.back())});
    if (unshifted) {
      s.intertwining.push_back(check_intertwining(p, q, grid));
      add(s.intertwining.back().checks());
    }
    s.t_modified.push_back(check_t_modified(p, q, grid));
    add(s.t_modified.back().checks());
  }

  if (bound) {
    const bool pt = s.phase == SymmetryPhase::PTUnbroken || s.phase == SymmetryPhase::PTBroken;
    if (pt && unshifted && grid.is_symmetric() && s.spectrum.analytic.size() >= 2) {
      s.orthogonality = check_pt_orthogonality(p, grid);
      add(s.orthogonality->checks());
    }
    if (unshifted) {
      s.axis_shift = check_axis_shift(p, {0.0, 0.2, 0.5}, grid, &s.spectrum);
      add({s.axis_shift->check});
    }
    s.convergence = check_convergence(p, grid, 8.0, &s.spectrum);
    add({s.convergence->check});
  }

  std::stable_sort(s.checks.begin(), s.checks.end(),
                   [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  return s;
}

}  // namespace ptscarf::verify
