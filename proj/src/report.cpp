#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace ptscarf::report {

namespace {

std::string sector_tag(QuasiParity q) { return q == QuasiParity::Plus ? "qplus" : "qminus"; }

void write(std::ostringstream& out, const Json& j, int indent) {
  const std::string pad(std::size_t(indent) * 2, ' ');
  const std::string inner(std::size_t(indent + 1) * 2, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out << "{}";
        return;
      }
      out << "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out << ",\n";
        first = false;
        out << inner << Json(it.key()).dump() << ": ";
        write(out, it.value(), indent + 1);
      }
      out << "\n" << pad << "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out << "[]";
        return;
      }
      out << "[\n";
      bool first = true;
      for (const auto& v : j) {
        if (!first) out << ",\n";
        first = false;
        out << inner;
        write(out, v, indent + 1);
      }
      out << "\n" << pad << "]";
      return;
    }
    case Json::value_t::number_float: {
      const double x = j.get<double>();
      out << (std::isfinite(x) ? number(x) : "null");
      return;
    }
    default:
      out << j.dump();
  }
}

struct Csv {
  std::ostringstream out;
  explicit Csv(const std::vector<std::string>& header) { row(header); }
  void row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
    out << "\n";
  }
  std::string str() const { return out.str(); }
};

std::string quoted(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string r = "\"";
  for (char c : s) r += c == '"' ? std::string("\"\"") : std::string(1, c);
  return r + "\"";
}

Json level_json(const Level& l) {
  return {{"q", sign(l.q)}, {"n", l.n}, {"energy", to_json(l.energy)}};
}

Json spectral_json(const susy::SpectralLevel& l) {
  return {{"sector", sign(l.sector)}, {"n", l.n}, {"energy", to_json(l.energy)}};
}

Json checks_json(const std::vector<verify::CheckResult>& cs) {
  Json a = Json::array();
  for (const auto& c : cs) a.push_back(to_json(c));
  return a;
}

std::string checks_csv(const std::vector<verify::CheckResult>& cs) {
  Csv csv({"name", "passed", "measured", "tolerance", "details"});
  for (const auto& c : cs)
    csv.row({c.name, c.passed ? "true" : "false", number(c.measured), number(c.tolerance),
             quoted(c.details)});
  return csv.str();
}

std::string spectrum_csv(const verify::SpectrumReport& r) {
  Csv csv({"q", "n", "energy_re", "energy_im", "numeric_re", "numeric_im", "error"});
  for (std::size_t i = 0; i < r.analytic.size(); ++i) {
    const Level& l = r.analytic[i];
    const auto m = r.numeric_for(i);
    csv.row({std::to_string(sign(l.q)), std::to_string(l.n), number(l.energy.real()),
             number(l.energy.imag()), m ? number(m->real()) : "", m ? number(m->imag()) : "",
             m ? number(std::abs(*m - l.energy)) : ""});
  }
  return csv.str();
}

std::string gram_csv(const verify::GramMatrix& g) {
  Csv csv({"i", "j", "value_re", "value_im", "abs"});
  for (std::size_t i = 0; i < g.entries.size(); ++i)
    for (std::size_t j = 0; j < g.entries[i].size(); ++j)
      csv.row({std::to_string(i), std::to_string(j), number(g.entries[i][j].real()),
               number(g.entries[i][j].imag()), number(std::abs(g.entries[i][j]))});
  return csv.str();
}

Json algebra_json(const susy::AlgebraReport& r) {
  return {{"spinors", r.spinors},
          {"operator_grid", to_json(r.grid)},
          {"tolerance", r.tolerance},
          {"q_squared", r.q_squared},
          {"q_adjoint_squared", r.q_adjoint_squared},
          {"anticommutator_vs_hamiltonian", r.anticommutator},
          {"commutator_h_q", r.commutator_q},
          {"commutator_h_q_adjoint", r.commutator_q_adjoint},
          {"passed", r.passed()}};
}

}  // namespace

Format format_from_string(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  fail(ErrorKind::InvalidArgument, "unknown output format '" + s + "' (expected json or csv)");
}

std::string number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x == 0.0 ? 0.0 : x);
  return buf;
}

std::string dump(const Json& j) {
  std::ostringstream out;
  write(out, j, 0);
  out << "\n";
  return out.str();
}

Json to_json(cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }

Json to_json(const ScarfParams& p) {
  return {{"alpha", to_json(p.alpha)}, {"beta", to_json(p.beta)}, {"axis_shift", p.axis_shift}};
}

Json to_json(const num::GridSpec& g) {
  return {{"x_min", g.x_min},
          {"x_max", g.x_max},
          {"n_points", g.n_points},
          {"stencil_order", g.stencil_order}};
}

Json to_json(const verify::CheckResult& c) {
  return {{"name", c.name},
          {"passed", c.passed},
          {"measured", c.measured},
          {"tolerance", c.tolerance},
          {"details", c.details}};
}

Json to_json(const verify::SpectrumReport& r) {
  Json levels = Json::array();
  for (std::size_t i = 0; i < r.analytic.size(); ++i) {
    Json l = level_json(r.analytic[i]);
    const auto m = r.numeric_for(i);
    l["numeric"] = m ? to_json(*m) : Json(nullptr);
    l["error"] = m ? Json(std::abs(*m - r.analytic[i].energy)) : Json(nullptr);
    if (r.phase == SymmetryPhase::PTBroken && m) {
      Json partner = nullptr;
      for (std::size_t j = 0; j < r.analytic.size(); ++j) {
        const auto mj = r.numeric_for(j);
        if (j != i && mj && std::abs(std::conj(*m) - *mj) <= verify::kGridTolerance) {
          partner = Json{{"q", sign(r.analytic[j].q)}, {"n", r.analytic[j].n}};
          break;
        }
      }
      l["conjugate_partner"] = partner;
    }
    levels.push_back(l);
  }
  Json numeric = Json::array();
  for (const auto& n : r.numeric)
    numeric.push_back({{"value", to_json(n.value)},
                       {"dirichlet", to_json(n.dirichlet)},
                       {"iterations", n.iterations},
                       {"residual", n.residual}});
  Json unmatched = Json::array();
  for (const cplx z : r.unmatched_numeric) unmatched.push_back(to_json(z));
  Json out = {{"params", to_json(r.params)},
              {"grid", to_json(r.grid)},
              {"phase", std::string(to_string(r.phase))},
              {"levels", levels},
              {"numeric", numeric},
              {"unmatched_numeric", unmatched},
              {"continuum_count", r.continuum.size()},
              {"match_tolerance", verify::kMatchTolerance},
              {"all_matched", r.all_matched()},
              {"max_error", r.max_error()}};
  if (r.pairing) out["conjugate_pairing"] = to_json(*r.pairing);
  return out;
}

Bundle spectrum_documents(const verify::SpectrumReport& r, Format f) {
  if (f == Format::Csv) return {{"spectrum.csv", spectrum_csv(r)}};
  return {{"spectrum.json", dump(to_json(r))}};
}

Bundle partner_documents(const verify::PartnerAnalysis& a, const num::GridSpec& grid, Format f) {
  Bundle out;
  const auto table = susy::degeneracy_table(a.bosonic, a.q);
  const verify::CheckResult check = verify::check_partner_isospectrality(a);

  const susy::Superpotential w = susy::superpotential(a.bosonic, a.q);
  Csv pot({"x", "bosonic_re", "bosonic_im", "partner_re", "partner_im"});
  for (int i = 0; i < grid.n_points; ++i) {
    const double x = grid.x(i);
    const cplx vb = eval_potential(a.bosonic, QuasiParity::Plus, x);
    const cplx vp = susy::fermionic_potential(w, x) - a.shift;
    pot.row({number(x), number(vb.real()), number(vb.imag()), number(vp.real()),
             number(vp.imag())});
  }
  out.push_back({"partner_potential.csv", pot.str()});

  if (f == Format::Csv) {
    Csv deg({"bosonic_q", "bosonic_n", "energy_re", "energy_im", "missing", "partner_q",
             "partner_n"});
    for (const auto& r : table)
      deg.row({std::to_string(sign(r.bosonic_sector)), std::to_string(r.bosonic_n),
               number(r.energy.real()), number(r.energy.imag()), r.missing ? "true" : "false",
               r.missing ? "" : std::to_string(sign(r.partner_sector)),
               r.missing ? "" : std::to_string(r.partner_n)});
    out.push_back({"partner_degeneracy.csv", deg.str()});
    out.push_back({"partner_spectrum.csv", spectrum_csv(a.report)});
    return out;
  }

  Json expected = Json::array();
  for (const auto& l : a.expected) expected.push_back(spectral_json(l));
  Json rows = Json::array();
  for (const auto& r : table) {
    Json row = {{"bosonic_q", sign(r.bosonic_sector)},
                {"bosonic_n", r.bosonic_n},
                {"energy", to_json(r.energy)},
                {"missing", r.missing}};
    if (r.missing) {
      row["partner_q"] = nullptr;
      row["partner_n"] = nullptr;
    } else {
      row["partner_q"] = sign(r.partner_sector);
      row["partner_n"] = r.partner_n;
    }
    rows.push_back(row);
  }
  Json numeric = Json::array();
  for (const cplx z : a.report.numeric_values()) numeric.push_back(to_json(z));
  Json doc = {{"bosonic", to_json(a.bosonic)},
              {"q", sign(a.q)},
              {"partner", to_json(a.partner)},
              {"partner_phase", std::string(to_string(classify_symmetry(a.partner)))},
              {"partner_pt_symmetric", is_pt_symmetric(a.partner)},
              {"energy_shift", to_json(a.shift)},
              {"missing_level", a.has_missing ? to_json(a.missing) : Json(nullptr)},
              {"expected_spectrum", expected},
              {"numeric_spectrum", numeric},
              {"degeneracy_table", rows},
              {"grid", to_json(grid)},
              {"isospectrality", to_json(check)}};
  out.insert(out.begin(), {"partner.json", dump(doc)});
  return out;
}

Bundle wavefunction_documents(const ScarfParams& p, QuasiParity q, int n,
                              const num::GridSpec& grid, Format f) {
  const auto psi = num::GridFunction::sample(grid, [&](double x) { return wavefunction(p, q, n, x); });

  std::string convention = "conjugating";
  std::string source = "default";
  const SymmetryPhase phase = classify_symmetry(p);
  if ((phase == SymmetryPhase::PTUnbroken || phase == SymmetryPhase::PTBroken) &&
      p.axis_shift == 0.0 && grid.is_symmetric() && bound_levels(p).size() >= 2) {
    convention = verify::check_pt_orthogonality(p, grid).winner;
    source = "orthogonality";
  }
  const auto conv = convention == "bilinear" ? num::InnerConvention::Bilinear
                                             : num::InnerConvention::Conjugating;
  const bool symmetric = grid.is_symmetric();

  Csv csv({"x", "psi_re", "psi_im", "density_re", "density_im"});
  for (int i = 0; i < grid.n_points; ++i) {
    const cplx v = psi.values[std::size_t(i)];
    std::string dre, dim;
    if (symmetric) {
      const cplx mirror = psi.values[std::size_t(grid.n_points - 1 - i)];
      const cplx d = (conv == num::InnerConvention::Conjugating ? std::conj(mirror) : mirror) * v;
      dre = number(d.real());
      dim = number(d.imag());
    }
    csv.row({number(grid.x(i)), number(v.real()), number(v.imag()), dre, dim});
  }

  const std::string stem = "wavefunction_" + sector_tag(q) + "_n" + std::to_string(n);
  Bundle out{{stem + ".csv", csv.str()}};
  if (f == Format::Json) {
    Json doc = {{"params", to_json(p)},
                {"q", sign(q)},
                {"n", n},
                {"energy", to_json(energy(p, q, n))},
                {"grid", to_json(grid)},
                {"convention", convention},
                {"convention_source", source},
                {"pseudo_norm", symmetric ? to_json(num::pt_inner(psi, psi, conv)) : Json(nullptr)},
                {"hermitian_norm", num::hermitian_inner(psi, psi).real()},
                {"value_at_zero", to_json(wavefunction(p, q, n, 0.0))}};
    out.push_back({stem + ".json", dump(doc)});
  }
  return out;
}

Bundle verify_documents(const verify::SuiteReport& s, Format f) {
  Bundle out;
  out.push_back({"report.json", dump(checks_json(s.checks))});
  Json summary = {{"params", to_json(s.params)},
                  {"grid", to_json(s.grid)},
                  {"phase", std::string(to_string(s.phase))},
                  {"checks", s.checks.size()},
                  {"failures", s.failures()},
                  {"passed", s.failures() == 0}};
  if (s.orthogonality) summary["orthogonalizing_convention"] = s.orthogonality->winner;
  out.push_back({"summary.json", dump(summary)});
  out.push_back({"checks.csv", checks_csv(s.checks)});
  out.push_back({"spectrum.csv", spectrum_csv(s.spectrum)});
  for (const auto& a : s.partners)
    out.push_back({"partner_spectrum_" + sector_tag(a.q) + ".csv", spectrum_csv(a.report)});
  for (const auto& t : s.t_modified)
    out.push_back({"t_modified_spectrum_" + sector_tag(t.q) + ".csv",
                   spectrum_csv(t.report)});
  if (s.orthogonality)
    for (const auto& g : s.orthogonality->gram)
      out.push_back({"gram_" + g.convention + ".csv", gram_csv(g)});
  if (!s.intertwining.empty()) {
    Csv csv({"q", "sector", "n", "energy_re", "energy_im", "annihilated", "residual", "round_trip",
             "proportionality", "ratio_re", "ratio_im"});
    for (const auto& r : s.intertwining)
      for (const auto& row : r.rows)
        csv.row({std::to_string(sign(r.q)), std::to_string(sign(row.sector)),
                 std::to_string(row.n), number(row.energy.real()), number(row.energy.imag()),
                 row.annihilated ? "true" : "false", number(row.residual),
                 number(row.round_trip), row.annihilated ? "" : number(row.proportionality),
                 row.annihilated ? "" : number(row.ratio.real()),
                 row.annihilated ? "" : number(row.ratio.imag())});
    out.push_back({"intertwining.csv", csv.str()});
  }
  if (s.axis_shift) {
    Csv csv({"epsilon", "accepted", "max_error", "error"});
    for (const auto& r : s.axis_shift->rows)
      csv.row({number(r.epsilon), r.accepted ? "true" : "false", number(r.max_error),
               quoted(r.error)});
    out.push_back({"axis_shift.csv", csv.str()});
  }
  (void)f;
  return out;
}

Bundle scan_documents(double beta, const std::vector<verify::ScanRow>& rows,
                      const num::GridSpec& grid, Format f) {
  std::size_t na = 0, nn = 0;
  for (const auto& r : rows) {
    na = std::max(na, r.analytic.size());
    nn = std::max(nn, r.numeric.size());
  }
  std::vector<std::string> header{"alpha_re", "alpha_im", "phase", "ok", "error"};
  for (std::size_t k = 1; k <= na; ++k) {
    const std::string s = std::to_string(k);
    for (const char* suffix : {"_q", "_n", "_re", "_im"})
      header.push_back("analytic_" + s + suffix);
  }
  for (std::size_t k = 1; k <= nn; ++k) {
    header.push_back("numeric_" + std::to_string(k) + "_re");
    header.push_back("numeric_" + std::to_string(k) + "_im");
  }
  Csv csv(header);
  for (const auto& r : rows) {
    std::vector<std::string> cells{number(r.alpha.real()), number(r.alpha.imag()),
                                   std::string(to_string(r.phase)), r.ok ? "true" : "false",
                                   quoted(r.error)};
    for (std::size_t k = 0; k < na; ++k) {
      if (k < r.analytic.size()) {
        const Level& l = r.analytic[k];
        cells.insert(cells.end(), {std::to_string(sign(l.q)), std::to_string(l.n),
                                   number(l.energy.real()), number(l.energy.imag())});
      } else {
        cells.insert(cells.end(), {"", "", "", ""});
      }
    }
    for (std::size_t k = 0; k < nn; ++k) {
      if (k < r.numeric.size())
        cells.insert(cells.end(), {number(r.numeric[k].real()), number(r.numeric[k].imag())});
      else
        cells.insert(cells.end(), {"", ""});
    }
    csv.row(cells);
  }
  Bundle out{{"scan.csv", csv.str()}};
  if (f == Format::Json) {
    Json a = Json::array();
    for (const auto& r : rows) {
      Json analytic = Json::array(), numeric = Json::array();
      for (const auto& l : r.analytic) analytic.push_back(level_json(l));
      for (const cplx z : r.numeric) numeric.push_back(to_json(z));
      a.push_back({{"alpha", to_json(r.alpha)},
                   {"phase", std::string(to_string(r.phase))},
                   {"ok", r.ok},
                   {"error", r.error},
                   {"analytic", analytic},
                   {"numeric", numeric}});
    }
    out.push_back({"scan.json", dump({{"beta", beta}, {"grid", to_json(grid)}, {"rows", a}})});
  }
  return out;
}

Bundle algebra_documents(const ScarfParams& p, const num::GridSpec& grid, Format f) {
  std::vector<verify::CheckResult> checks = verify::check_algebraic_identities(p);
  Json sectors = Json::object();
  for (QuasiParity q : {QuasiParity::Plus, QuasiParity::Minus}) {
    const auto r = susy::susy_algebra_check(p, q, grid, verify::kOperatorRefinement);
    const auto cs = verify::algebra_checks(r, q);
    checks.insert(checks.end(), cs.begin(), cs.end());
    const susy::Superpotential w = susy::superpotential(p, q);
    Json s = algebra_json(r);
    s["energy_shift"] = to_json(w.energy_shift());
    sectors[q == QuasiParity::Plus ? "q_plus" : "q_minus"] = s;
  }
  std::stable_sort(checks.begin(), checks.end(),
                   [](const auto& a, const auto& b) { return a.name < b.name; });
  if (f == Format::Csv) return {{"algebra.csv", checks_csv(checks)}};
  Json doc = {{"params", to_json(p)},
              {"grid", to_json(grid)},
              {"sectors", sectors},
              {"checks", checks_json(checks)}};
  return {{"algebra.json", dump(doc)}};
}

}  // namespace ptscarf::report
