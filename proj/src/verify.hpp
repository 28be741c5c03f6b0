#pragma once

#include <optional>
#include <string>
#include <vector>

#include "numerics.hpp"
#include "scarf2.hpp"
#include "susy.hpp"

namespace ptscarf::verify {

/// passed <=> measured <= tolerance. Checks asserting that something does NOT
/// hold report measured = 1/defect against tolerance = 1/threshold.
struct CheckResult {
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double tolerance = 0.0;
  std::string details;

  static CheckResult make(std::string name, double measured, double tolerance,
                          std::string details = {});
  /// measured = 1/defect, tolerance = 1/threshold.
  static CheckResult must_exceed(std::string name, double defect, double threshold,
                                 std::string details = {});
};

inline constexpr double kMatchTolerance = 1e-4;
inline constexpr double kGridTolerance = 1e-5;
inline constexpr double kIdentityTolerance = 1e-10;
inline constexpr double kShapeTolerance = 1e-12;
/// Operators that compose two stencils act on this many times the points.
inline constexpr int kOperatorRefinement = 4;

struct SpectrumReport {
  ScarfParams params;
  num::GridSpec grid;
  SymmetryPhase phase = SymmetryPhase::General;
  std::vector<Level> analytic;               // every normalizable (q, n)
  std::vector<cplx> distinct;                // analytic energies, degeneracies merged
  std::vector<int> multiplicity;             // per distinct energy
  std::vector<num::RefinedLevel> numeric;    // refined localized levels
  std::vector<num::LevelMatch> matches;      // distinct index -> numeric index
  std::vector<cplx> unmatched_numeric;
  std::vector<cplx> continuum;               // walled eigenvalues not bound
  std::optional<CheckResult> pairing;        // PTBroken only

  std::vector<cplx> numeric_values() const;
  /// Worst |analytic - numeric|; infinity when a distinct level is unmatched.
  double max_error() const;
  bool all_matched() const;
  /// Numeric match for analytic level i, if any.
  std::optional<cplx> numeric_for(std::size_t analytic_index) const;
  CheckResult as_check(double tolerance, std::string name = "spectrum") const;
};

/// Spectrum of an arbitrary potential against expected levels.
SpectrumReport compare_spectrum(const num::Potential& v, std::vector<Level> expected,
                                const num::GridSpec& grid);

SpectrumReport check_spectrum(const ScarfParams& p, const num::GridSpec& grid);

/// Distance from each value's conjugate to the nearest member of the set,
/// maximized over the set (0 for a conjugation-closed set).
double conjugate_pairing_defect(const std::vector<cplx>& values);

struct PartnerAnalysis {
  ScarfParams bosonic;
  QuasiParity q = QuasiParity::Plus;
  ScarfParams partner;
  cplx shift;
  cplx missing;                            // E_0^(q), absent from the partner
  bool has_missing = false;                // sector q had a bound state
  std::vector<susy::SpectralLevel> expected;
  SpectrumReport report;
};

/// Diagonalizes U_+ - eps built from the superpotential (not from
/// partner_params) and matches it against the fermionic spectrum.
PartnerAnalysis analyze_partner(const ScarfParams& p, QuasiParity q, const num::GridSpec& grid);
CheckResult check_partner_isospectrality(const PartnerAnalysis& a);
CheckResult check_partner_isospectrality(const ScarfParams& p, QuasiParity q,
                                         const num::GridSpec& grid);
/// The partner spectrum is NOT closed under conjugation (defect >= 1e-3).
CheckResult check_partner_unpaired(const PartnerAnalysis& a);

struct IntertwiningRow {
  QuasiParity sector = QuasiParity::Plus;
  int n = 0;
  cplx energy;
  bool annihilated = false;  // the (q, 0) state
  double residual = 0.0;     // |H_+ Af - E Af| / |Af|, or |Af| / |f| if annihilated
  double round_trip = 0.0;   // |A^dagger A f - (E + eps) f| / (|E + eps| |f|)
  double proportionality = 0.0;  // |Af - c psi_partner| / |Af|
  cplx ratio;                // fitted c
};

struct IntertwiningReport {
  ScarfParams params;
  QuasiParity q = QuasiParity::Plus;
  num::GridSpec grid;  // operator grid
  std::vector<IntertwiningRow> rows;
  CheckResult intertwining;
  CheckResult round_trip;
  CheckResult annihilation;
  CheckResult proportionality;
  std::vector<CheckResult> checks() const;
};

IntertwiningReport check_intertwining(const ScarfParams& p, QuasiParity q, const num::GridSpec& grid);

struct ScanRow {
  cplx alpha;
  SymmetryPhase phase = SymmetryPhase::General;
  std::vector<Level> analytic;
  std::vector<cplx> numeric;
  bool ok = true;
  std::string error;
};

std::vector<ScanRow> scan_pt_breaking(double beta, const std::vector<cplx>& alpha_path,
                                      const num::GridSpec& grid);
/// n_real points from re_start to 0, then n_imag points i*im_end/n_imag .. i*im_end.
std::vector<cplx> default_scan_path(double re_start = 0.8, int n_real = 13, double im_end = 1.0,
                                    int n_imag = 12);

struct AxisShiftRow {
  double epsilon = 0.0;
  bool accepted = true;
  std::string error;
  double max_error = 0.0;
  std::vector<cplx> numeric;
};

struct AxisShiftReport {
  std::vector<AxisShiftRow> rows;
  CheckResult check;
};

/// Shifted-axis spectra against the eps = 0 analytic levels.
/// An unshifted report on the same grid may be passed to skip the eps = 0 solve.
AxisShiftReport check_axis_shift(const ScarfParams& p, const std::vector<double>& epsilons,
                                 const num::GridSpec& grid,
                                 const SpectrumReport* unshifted = nullptr);

struct GramMatrix {
  std::string convention;  // "conjugating", "bilinear" or "hermitian"
  std::vector<std::vector<cplx>> entries;
  double off_pair_ratio = 0.0;  // worst off-pair |G_ij| over the pair scale
};

struct OrthogonalityReport {
  std::vector<BoundState> states;
  std::vector<GramMatrix> gram;  // conjugating, bilinear, hermitian
  std::string winner;            // best PT convention
  num::GridSpec quadrature;      // configured step, box widened to bury the tails
  double box_off_pair_ratio = 0; // winner's ratio on the configured box alone
  CheckResult orthogonality;
  CheckResult hermitian_cross_term;
  std::vector<CheckResult> checks() const;
};

/// Pairwise inner products of all bound states. Entry (i, j) is expected
/// nonzero iff E_j = conj(E_i) (the diagonal in the unbroken phase); every
/// other entry must fall below 1e-6 of sqrt(|G_i,pair(i)| |G_j,pair(j)|).
/// Integrals use the configured step on a symmetric box wide enough that the
/// slowest analytic integrand tail is below 1e-14.
OrthogonalityReport check_pt_orthogonality(const ScarfParams& p, const num::GridSpec& grid);

struct TModifiedReport {
  QuasiParity q = QuasiParity::Plus;
  susy::TModifiedPartner partner;
  SpectrumReport report;
  CheckResult spectrum;
  std::optional<CheckResult> reflection;  // when the partner is PT symmetric
  std::vector<CheckResult> checks() const;
};

TModifiedReport check_t_modified(const ScarfParams& p, QuasiParity q, const num::GridSpec& grid);

struct ConvergenceReport {
  num::GridSpec coarse;
  num::GridSpec fine;
  double coarse_error = 0.0;
  double fine_error = 0.0;
  CheckResult check;  // measured = fine/coarse against 1/8
};

/// fine_report, when given, must come from check_spectrum(p, fine).
ConvergenceReport check_convergence(const ScarfParams& p, const num::GridSpec& fine,
                                    double min_ratio = 8.0,
                                    const SpectrumReport* fine_report = nullptr);

/// Factorization W^2 - W' - eps = V (1e-10), shape invariance
/// U_+ - eps = V(q a + 1, b + 1) (1e-12) and eps = -E_0 (exact), both q.
std::vector<CheckResult> check_algebraic_identities(const ScarfParams& p, int samples = 200);

std::vector<CheckResult> algebra_checks(const susy::AlgebraReport& r, QuasiParity q);

struct SuiteReport {
  ScarfParams params;
  num::GridSpec grid;
  SymmetryPhase phase = SymmetryPhase::General;
  SpectrumReport spectrum;
  std::vector<PartnerAnalysis> partners;
  std::vector<IntertwiningReport> intertwining;
  std::vector<susy::AlgebraReport> algebra;
  std::vector<TModifiedReport> t_modified;
  std::optional<OrthogonalityReport> orthogonality;
  std::optional<AxisShiftReport> axis_shift;
  std::optional<ConvergenceReport> convergence;
  std::vector<CheckResult> checks;  // sorted by name

  int failures() const;
};

/// Every applicable check for p on grid.
SuiteReport run_suite(const ScarfParams& p, const num::GridSpec& grid);

}  // namespace ptscarf::verify
