// Command-line front end. Every number comes from the C API; this file only
// resolves configuration, calls one run function and writes its documents.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ptscarf/ptscarf.h"

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Settings {
  double alpha = 0.8, alpha_im = 0.0, beta = -4.2, beta_im = 0.0, axis_shift = 0.0;
  int q = 1, n = 0;
  double xmax = 14.0;
  int npoints = 1601, order = 4;
  std::string out = ".";
  std::string format = "json";
  std::string path;
};

// Values given on the command line (or read from the config file); unset
// members fall back to the config file, then to Settings defaults.
struct Flags {
  std::optional<double> alpha, alpha_im, beta, beta_im, axis_shift, xmax;
  std::optional<int> q, n, npoints, order;
  std::optional<std::string> out, format, path, config;
};

template <class T>
void take(const Json& cfg, const char* key, T& dst) {
  if (!cfg.contains(key)) return;
  try {
    dst = cfg.at(key).get<T>();
  } catch (const Json::exception&) {
    throw UsageError(std::string("config: bad value for '") + key + "'");
  }
}

template <class T>
void take(const Json& cfg, const char* key, std::optional<T>& dst) {
  if (!cfg.contains(key)) return;
  T v{};
  take(cfg, key, v);
  dst = v;
}

// A coupling keeps its default only when neither part is given; otherwise the
// missing part is 0, so --alpha-im 1 alone means alpha = i.
void coupling(std::optional<double> re, std::optional<double> im, double& dst_re,
              double& dst_im) {
  if (!re && !im) return;
  dst_re = re.value_or(0.0);
  dst_im = im.value_or(0.0);
}

Settings resolve(const Flags& f) {
  Settings s;
  Flags c;  // config-file values
  if (f.config) {
    std::ifstream in(*f.config);
    if (!in) throw UsageError("cannot read config file " + *f.config);
    Json cfg;
    try {
      cfg = Json::parse(in);
    } catch (const Json::exception& e) {
      throw UsageError("config: " + std::string(e.what()));
    }
    if (!cfg.is_object()) throw UsageError("config must be a JSON object");
    static const std::vector<std::string> known{"alpha", "alpha_im", "beta", "beta_im",
                                                "axis_shift", "q", "n", "xmax", "npoints",
                                                "order", "out", "format", "path"};
    for (auto it = cfg.begin(); it != cfg.end(); ++it)
      if (std::find(known.begin(), known.end(), it.key()) == known.end())
        throw UsageError("config: unknown key '" + it.key() + "'");
    take(cfg, "alpha", c.alpha);
    take(cfg, "alpha_im", c.alpha_im);
    take(cfg, "beta", c.beta);
    take(cfg, "beta_im", c.beta_im);
    take(cfg, "axis_shift", c.axis_shift);
    take(cfg, "q", c.q);
    take(cfg, "n", c.n);
    take(cfg, "xmax", c.xmax);
    take(cfg, "npoints", c.npoints);
    take(cfg, "order", c.order);
    take(cfg, "out", c.out);
    take(cfg, "format", c.format);
    take(cfg, "path", c.path);
  }
  auto pick = [](const auto& flag, const auto& config) { return flag ? flag : config; };
  coupling(pick(f.alpha, c.alpha), pick(f.alpha_im, c.alpha_im), s.alpha, s.alpha_im);
  coupling(pick(f.beta, c.beta), pick(f.beta_im, c.beta_im), s.beta, s.beta_im);
  s.axis_shift = pick(f.axis_shift, c.axis_shift).value_or(s.axis_shift);
  s.q = pick(f.q, c.q).value_or(s.q);
  s.n = pick(f.n, c.n).value_or(s.n);
  s.xmax = pick(f.xmax, c.xmax).value_or(s.xmax);
  s.npoints = pick(f.npoints, c.npoints).value_or(s.npoints);
  s.order = pick(f.order, c.order).value_or(s.order);
  s.out = pick(f.out, c.out).value_or(s.out);
  s.format = pick(f.format, c.format).value_or(s.format);
  s.path = pick(f.path, c.path).value_or(s.path);
  if (s.format != "json" && s.format != "csv") throw UsageError("--format must be json or csv");
  if (s.q != 1 && s.q != -1) throw UsageError("--q must be 1 or -1");
  return s;
}

// "0.8", "-2i", "0.5+1.5i", "i".
ptscarf_complex parse_complex(std::string token) {
  token.erase(std::remove(token.begin(), token.end(), ' '), token.end());
  if (token.empty()) throw UsageError("empty path sample");
  auto number = [&](const std::string& t, bool imag) {
    if (imag && (t.empty() || t == "+" || t == "-")) return t == "-" ? -1.0 : 1.0;
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (end != t.c_str() + t.size() || !std::isfinite(v))
      throw UsageError("bad path sample '" + token + "'");
    return v;
  };
  if (token.back() != 'i') return {number(token, false), 0.0};
  const std::string body = token.substr(0, token.size() - 1);
  // split at the last sign that is not an exponent sign or the leading one
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E')
      return {number(body.substr(0, k), false), number(body.substr(k), true)};
  }
  return {0.0, number(body, true)};
}

std::vector<ptscarf_complex> parse_path(const std::string& spec) {
  std::vector<ptscarf_complex> out;
  std::stringstream in(spec);
  std::string token;
  while (std::getline(in, token, ',')) out.push_back(parse_complex(token));
  if (out.empty()) throw UsageError("--path needs at least one sample");
  return out;
}

struct Model {
  ptscarf_model* handle = nullptr;
  ~Model() { ptscarf_model_destroy(handle); }
};

struct Documents {
  ptscarf_documents* handle = nullptr;
  ~Documents() { ptscarf_documents_destroy(handle); }
};

int exit_for(ptscarf_status st) {
  return st == PTSCARF_NUMERICAL || st == PTSCARF_INTERNAL ? kExitNumerical : kExitUsage;
}

[[noreturn]] void api_failure(ptscarf_status st) {
  std::cerr << "error (" << ptscarf_status_name(st) << "): " << ptscarf_last_error() << "\n";
  std::exit(exit_for(st));
}

void check(ptscarf_status st) {
  if (st != PTSCARF_OK) api_failure(st);
}

void write_documents(const ptscarf_documents* docs, const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw UsageError("cannot create output directory " + dir + ": " + ec.message());
  for (std::size_t i = 0; i < ptscarf_documents_count(docs); ++i) {
    std::size_t len = 0;
    const char* content = ptscarf_documents_content(docs, i, &len);
    const fs::path file = fs::path(dir) / ptscarf_documents_name(docs, i);
    std::ofstream out(file, std::ios::binary);
    if (!out || !out.write(content, std::streamsize(len)))
      throw UsageError("cannot write " + file.string());
    std::cout << "wrote " << file.string() << "\n";
  }
}

std::string find_document(const ptscarf_documents* docs, const std::string& name) {
  for (std::size_t i = 0; i < ptscarf_documents_count(docs); ++i)
    if (name == ptscarf_documents_name(docs, i)) return ptscarf_documents_content(docs, i, nullptr);
  return {};
}

void add_options(CLI::App& app, Flags& f) {
  app.add_option("--alpha", f.alpha, "real part of alpha (default 0.8 when no part of alpha is given, else 0)");
  app.add_option("--alpha-im", f.alpha_im, "imaginary part of alpha (default 0)");
  app.add_option("--beta", f.beta, "real part of beta (default -4.2 when no part of beta is given, else 0)");
  app.add_option("--beta-im", f.beta_im, "imaginary part of beta (default 0)");
  app.add_option("--axis-shift", f.axis_shift, "imaginary shift eps of the x axis, |eps| < pi/2");
  app.add_option("--q", f.q, "quasi-parity, 1 or -1 (default 1)");
  app.add_option("--n", f.n, "level index (default 0)");
  app.add_option("--xmax", f.xmax, "half width of the grid box (default 14)");
  app.add_option("--npoints", f.npoints, "grid points, rounded up to odd (default 1601)");
  app.add_option("--order", f.order, "finite-difference order, 2 or 4 (default 4)");
  app.add_option("--config", f.config, "JSON file with any of the option values");
  app.add_option("--out", f.out, "output directory (default .)");
  app.add_option("--format", f.format, "json or csv (default json)");
}

int run(const std::string& command, const Settings& s) {
  Model model;
  check(ptscarf_model_create({s.alpha, s.alpha_im}, {s.beta, s.beta_im}, s.axis_shift,
                             &model.handle));
  check(ptscarf_model_set_grid(model.handle, -s.xmax, s.xmax, s.npoints, s.order));
  const ptscarf_format fmt = s.format == "csv" ? PTSCARF_FORMAT_CSV : PTSCARF_FORMAT_JSON;

  Documents docs;
  int code = kExitOk;
  if (command == "spectrum") {
    check(ptscarf_run_spectrum(model.handle, fmt, &docs.handle));
  } else if (command == "partner") {
    check(ptscarf_run_partner(model.handle, s.q, fmt, &docs.handle));
  } else if (command == "wavefunction") {
    check(ptscarf_run_wavefunction(model.handle, s.q, s.n, fmt, &docs.handle));
  } else if (command == "algebra") {
    check(ptscarf_run_algebra(model.handle, fmt, &docs.handle));
  } else if (command == "verify") {
    int failures = 0;
    check(ptscarf_run_verify(model.handle, fmt, &docs.handle, &failures));
    const Json checks = Json::parse(find_document(docs.handle, "report.json"));
    for (const auto& c : checks)
      std::cout << (c["passed"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>()
                << "  measured=" << (c["measured"].is_null() ? "inf" : c["measured"].dump())
                << " tolerance=" << c["tolerance"].dump() << "\n";
    std::cout << failures << " of " << checks.size() << " checks failed\n";
    code = failures == 0 ? kExitOk : kExitNumerical + failures;
  } else if (command == "scan") {
    int ok_rows = 0;
    if (s.path.empty()) {
      check(ptscarf_run_scan(model.handle, nullptr, 0, fmt, &docs.handle, &ok_rows));
    } else {
      const auto path = parse_path(s.path);
      check(ptscarf_run_scan(model.handle, path.data(), path.size(), fmt, &docs.handle, &ok_rows));
    }
    if (ok_rows == 0) code = kExitNumerical;
  }
  write_documents(docs.handle, s.out);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Complex Scarf II potential: spectra, SUSY partners and numerical checks"};
  app.require_subcommand(1);
  Flags flags;
  add_options(app, flags);
  app.fallthrough();

  const std::vector<std::pair<std::string, std::string>> commands{
      {"spectrum", "analytic levels matched against the grid spectrum"},
      {"wavefunction", "sample one bound-state wavefunction (--q, --n)"},
      {"partner", "SUSY partner of sector --q with its spectrum and degeneracy table"},
      {"verify", "run every applicable check; exit 2 + failures on failure"},
      {"scan", "levels along an alpha path at fixed real beta"},
      {"algebra", "SUSY algebra and factorization identities"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    if (name == "scan")
      sub->add_option("--path", flags.path,
                      "comma-separated alpha samples such as 0.8,0.4,0.1i,1i "
                      "(default 0.8 -> 0 in 13 steps, then 1i/12 -> 1i)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Settings s = resolve(flags);
    return run(app.get_subcommands().front()->get_name(), s);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
