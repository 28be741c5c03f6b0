#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <string>

#include "verify.hpp"

using namespace ptscarf;
using namespace ptscarf::verify;

namespace {

const ScarfParams kUnbroken = ScarfParams::make(0.8, -4.2);
const ScarfParams kBroken = ScarfParams::make(cplx(0.0, 1.0), -4.0);
const ScarfParams kHermitian = ScarfParams::make(cplx(-1.2, -2.5), cplx(-1.2, 2.5));
const num::GridSpec kGrid = num::GridSpec::symmetric(14.0, 801);
constexpr QuasiParity kPlus = QuasiParity::Plus;
constexpr QuasiParity kMinus = QuasiParity::Minus;

bool has_check(const SuiteReport& s, const std::string& name) {
  return std::any_of(s.checks.begin(), s.checks.end(),
                     [&](const CheckResult& c) { return c.name == name; });
}

}  // namespace

TEST_CASE("CheckResult encodings") {
  CHECK(CheckResult::make("a", 1e-6, 1e-5).passed);
  CHECK_FALSE(CheckResult::make("a", 2e-5, 1e-5).passed);
  CHECK(CheckResult::make("a", 1e-5, 1e-5).passed);
  const CheckResult big = CheckResult::must_exceed("b", 0.5, 1e-3);
  CHECK(big.passed);
  CHECK(big.measured == doctest::Approx(2.0));
  CHECK(big.tolerance == doctest::Approx(1000.0));
  CHECK_FALSE(CheckResult::must_exceed("b", 1e-4, 1e-3).passed);
  CHECK_FALSE(CheckResult::must_exceed("b", 0.0, 1e-3).passed);
}

TEST_CASE("conjugate pairing defect") {
  CHECK(conjugate_pairing_defect({cplx(0.0, 1.0), cplx(0.0, -1.0), -2.0}) == 0.0);
  CHECK(conjugate_pairing_defect({cplx(0.0, 1.0)}) == doctest::Approx(2.0));
  CHECK(conjugate_pairing_defect({}) == 0.0);
}

TEST_CASE("unbroken spectrum on a moderate grid") {
  const SpectrumReport r = check_spectrum(kUnbroken, kGrid);
  CHECK(r.phase == SymmetryPhase::PTUnbroken);
  CHECK(r.analytic.size() == 4);
  CHECK(r.distinct.size() == 4);
  CHECK(r.all_matched());
  CHECK(r.unmatched_numeric.empty());
  CHECK(r.max_error() < 1e-5);
  CHECK_FALSE(r.pairing.has_value());
  CHECK(r.as_check(kGridTolerance).passed);
  for (std::size_t i = 0; i < r.analytic.size(); ++i) {
    const auto z = r.numeric_for(i);
    REQUIRE(z.has_value());
    CHECK(std::abs(*z - r.analytic[i].energy) < 1e-5);
  }
}

TEST_CASE("broken spectrum pairs into conjugates") {
  const SpectrumReport r = check_spectrum(kBroken, kGrid);
  CHECK(r.phase == SymmetryPhase::PTBroken);
  CHECK(r.all_matched());
  CHECK(r.max_error() < 1e-5);
  REQUIRE(r.pairing.has_value());
  CHECK(r.pairing->passed);
}

TEST_CASE("no bound states") {
  const SpectrumReport r = check_spectrum(ScarfParams::make(cplx(0.0, 2.0), cplx(0.0, 3.0)),
                                          num::GridSpec::symmetric(14.0, 401));
  CHECK(r.phase == SymmetryPhase::NoBoundStates);
  CHECK(r.analytic.empty());
  CHECK(r.max_error() == 0.0);
}

TEST_CASE("degenerate cross-sector levels are merged with multiplicity") {
  // Integer alpha: psi_0^+ and psi_1^- coincide, so -1 is an exceptional point.
  const ScarfParams p = ScarfParams::make(1.0, -4.0);
  const SpectrumReport r = check_spectrum(p, kGrid);
  CHECK(r.analytic.size() == 3);
  REQUIRE(r.distinct.size() == 2);
  const auto it = std::find_if(r.distinct.begin(), r.distinct.end(),
                               [](cplx z) { return std::abs(z + 1.0) < 1e-12; });
  REQUIRE(it != r.distinct.end());
  CHECK(r.multiplicity[std::size_t(it - r.distinct.begin())] == 2);
  for (double x : {-1.0, 0.5, 2.0})
    CHECK(std::abs(wavefunction(p, kPlus, 0, x) / wavefunction(p, kMinus, 1, x) - 2.0 / 3.0) < 1e-12);

  // The walled pair splits into a conjugate pair shrinking like h^2; its mean
  // converges at the stencil rate.
  auto pair_near = [&](int n) {
    const auto g = num::GridSpec::symmetric(14.0, n);
    std::vector<cplx> near;
    for (cplx e : num::eigenvalues(num::build_hamiltonian(potential_function(p), g)))
      if (std::abs(e + 1.0) < 1e-2) near.push_back(e);
    return near;
  };
  const auto coarse = pair_near(401), fine = pair_near(801);
  REQUIRE(coarse.size() == 2);
  REQUIRE(fine.size() == 2);
  const double split_coarse = std::abs(coarse[0] - coarse[1]);
  const double split_fine = std::abs(fine[0] - fine[1]);
  CHECK(split_fine > 1e-4);
  CHECK(split_coarse / split_fine == doctest::Approx(4.0).epsilon(0.05));
  CHECK(std::abs(0.5 * (fine[0] + fine[1]) + 1.0) < 1e-6);
  CHECK_FALSE(r.all_matched());
}

TEST_CASE("partner isospectrality, both sectors") {
  for (QuasiParity q : {kPlus, kMinus}) {
    const PartnerAnalysis a = analyze_partner(kUnbroken, q, kGrid);
    CHECK(a.has_missing);
    CHECK(std::abs(a.missing - energy(kUnbroken, q, 0)) < 1e-14);
    CHECK(a.expected.size() == 3);
    CHECK(check_partner_isospectrality(a).passed);
  }
  const PartnerAnalysis b = analyze_partner(kBroken, kPlus, kGrid);
  CHECK(check_partner_isospectrality(b).passed);
  CHECK(check_partner_unpaired(b).passed);
}

TEST_CASE("partner of a sector without a ground state gains a level") {
  const PartnerAnalysis a = analyze_partner(kHermitian, kMinus, kGrid);
  CHECK_FALSE(a.has_missing);
  const auto& extra = a.report.unmatched_numeric;
  CHECK(std::any_of(extra.begin(), extra.end(),
                    [](cplx z) { return std::abs(z - cplx(6.0, -2.5)) < 1e-4; }));
}

TEST_CASE("intertwining on the operator grid") {
  const num::GridSpec g = num::GridSpec::symmetric(14.0, 1601);
  for (QuasiParity q : {kPlus, kMinus}) {
    const IntertwiningReport r = check_intertwining(kUnbroken, q, g);
    CHECK(r.grid.n_points == 6401);
    CHECK(r.rows.size() == 4);
    CHECK(r.intertwining.passed);
    CHECK(r.round_trip.passed);
    CHECK(r.annihilation.passed);
    CHECK(r.proportionality.passed);
    CHECK(r.checks().size() == 4);
    const auto ground = std::find_if(r.rows.begin(), r.rows.end(),
                                     [](const IntertwiningRow& row) { return row.annihilated; });
    REQUIRE(ground != r.rows.end());
    CHECK(ground->sector == q);
    CHECK(ground->n == 0);
  }
}

TEST_CASE("default scan path") {
  const auto path = default_scan_path();
  REQUIRE(path.size() == 25);
  CHECK(path.front() == cplx(0.8, 0.0));
  CHECK(path[12] == cplx(0.0, 0.0));
  CHECK(std::abs(path.back() - cplx(0.0, 1.0)) < 1e-15);
}

TEST_CASE("scan flips phase on the imaginary segment") {
  const auto rows = scan_pt_breaking(-4.0, {cplx(0.8), cplx(0.0), cplx(0.0, 1.0)},
                                     num::GridSpec::symmetric(14.0, 401));
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].phase == SymmetryPhase::PTUnbroken);
  CHECK(rows[2].phase == SymmetryPhase::PTBroken);
  for (const auto& r : rows) {
    CHECK(r.ok);
    CHECK(r.numeric.size() >= 1);
  }
  // alpha = 0: both sectors coincide
  CHECK(rows[1].analytic.size() == 2 * std::size_t(max_level(ScarfParams::make(0.0, -4.0), kPlus)));
}

TEST_CASE("axis shift") {
  const AxisShiftReport r = check_axis_shift(kUnbroken, {0.0, 0.2}, kGrid);
  REQUIRE(r.rows.size() == 2);
  CHECK(r.check.passed);
  const AxisShiftReport bad = check_axis_shift(kUnbroken, {0.0, 1.6}, num::GridSpec::symmetric(14.0, 401));
  CHECK_FALSE(bad.rows[1].accepted);
  CHECK(std::isinf(bad.check.measured));
  CHECK_FALSE(bad.check.passed);
}

TEST_CASE("PT orthogonality, unbroken benchmark") {
  const OrthogonalityReport r = check_pt_orthogonality(kUnbroken, kGrid);
  REQUIRE(r.gram.size() == 3);
  CHECK(r.gram[0].entries.size() == 4);
  CHECK(r.winner == "conjugating");
  CHECK(r.orthogonality.passed);
  CHECK(r.hermitian_cross_term.passed);
  CHECK(r.gram[2].off_pair_ratio > 1e-3);
  CHECK(r.gram[1].off_pair_ratio > 1e-3);
  CHECK(r.quadrature.x_max > kGrid.x_max);
  CHECK(r.quadrature.step() == doctest::Approx(kGrid.step()));
  for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(r.gram[0].entries[i][i]) > 1e-3);
  CHECK_THROWS_AS(check_pt_orthogonality(kHermitian, kGrid), Error);
}

TEST_CASE("PT orthogonality, broken benchmark pairs conjugate levels") {
  const OrthogonalityReport r = check_pt_orthogonality(kBroken, kGrid);
  CHECK(r.orthogonality.passed);
  CHECK(r.hermitian_cross_term.passed);
}

TEST_CASE("T-modified construction") {
  const TModifiedReport b = check_t_modified(kBroken, kPlus, kGrid);
  CHECK(b.spectrum.passed);
  CHECK_FALSE(b.reflection.has_value());
  const TModifiedReport u = check_t_modified(kUnbroken, kPlus, kGrid);
  CHECK(u.spectrum.passed);
  REQUIRE(u.reflection.has_value());
  CHECK(u.reflection->passed);
}

TEST_CASE("algebraic identities") {
  for (const auto& p : {kUnbroken, kBroken, kHermitian}) {
    const auto checks = check_algebraic_identities(p);
    CHECK(checks.size() == 6);
    for (const auto& c : checks) CHECK_MESSAGE(c.passed, c.name);
  }
}

TEST_CASE("convergence check uses the halved grid") {
  const ConvergenceReport r = check_convergence(kUnbroken, kGrid);
  CHECK(r.coarse.n_points == 401);
  CHECK(r.fine.n_points == 801);
  CHECK(r.fine_error < r.coarse_error);
  CHECK(r.check.tolerance == doctest::Approx(0.125));
}

TEST_CASE("suite on the Hermitian benchmark skips the empty sector's partner") {
  const SuiteReport s = run_suite(kHermitian, kGrid);
  CHECK(s.phase == SymmetryPhase::Hermitian);
  CHECK(has_check(s, "spectrum_real"));
  CHECK(has_check(s, "partner_isospectrality[q=+1]"));
  CHECK_FALSE(has_check(s, "partner_isospectrality[q=-1]"));
  CHECK(has_check(s, "susy_anticommutator[q=-1]"));
  CHECK_FALSE(s.orthogonality.has_value());
  CHECK(std::is_sorted(s.checks.begin(), s.checks.end(),
                       [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; }));
  for (const auto& c : s.checks) CHECK_MESSAGE(c.passed, c.name, " ", c.measured);
}

TEST_CASE("a coarse grid fails convergence-sensitive checks") {
  const SuiteReport s = run_suite(kUnbroken, num::GridSpec::symmetric(14.0, 101));
  CHECK(s.failures() > 0);
  for (const auto& c : s.checks)
    if (!c.passed) CHECK(c.measured > c.tolerance);
}
