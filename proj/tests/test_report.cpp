#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <string>

#include "report.hpp"

using namespace ptscarf;
using namespace ptscarf::report;

namespace {

const ScarfParams kUnbroken = ScarfParams::make(0.8, -4.2);
const num::GridSpec kSmall = num::GridSpec::symmetric(14.0, 401);

const Document* find(const Bundle& b, const std::string& name) {
  for (const auto& d : b)
    if (d.name == name) return &d;
  return nullptr;
}

}  // namespace

TEST_CASE("numbers print at 17 significant digits") {
  CHECK(number(0.1) == "0.10000000000000001");
  CHECK(number(-4.2) == "-4.2000000000000002");
  CHECK(number(2.0) == "2");
  CHECK(number(INFINITY) == "inf");
  CHECK(number(-INFINITY) == "-inf");
  CHECK(number(NAN) == "nan");
}

TEST_CASE("JSON dump is fixed-format and maps non-finite numbers to null") {
  Json j = {{"b", 0.1}, {"a", INFINITY}, {"c", Json::array({1, 2.5})}, {"d", "x"}};
  const std::string s = dump(j);
  CHECK(s ==
        "{\n  \"b\": 0.10000000000000001,\n  \"a\": null,\n  \"c\": [\n    1,\n    2.5\n  ],\n"
        "  \"d\": \"x\"\n}\n");
  CHECK(Json::parse(s)["b"].get<double>() == 0.1);
  CHECK(dump(Json::object()) == "{}\n");
  CHECK(dump(Json::array()) == "[]\n");
}

TEST_CASE("complex numbers and params serialize as re/im objects") {
  const Json z = to_json(cplx(1.5, -2.0));
  CHECK(z["re"].get<double>() == 1.5);
  CHECK(z["im"].get<double>() == -2.0);
  const Json p = to_json(kUnbroken);
  CHECK(p["alpha"]["re"].get<double>() == 0.8);
  CHECK(p["beta"]["re"].get<double>() == -4.2);
  CHECK(p["axis_shift"].get<double>() == 0.0);
  const Json g = to_json(kSmall);
  CHECK(g["n_points"].get<int>() == 401);
  const Json c = to_json(verify::CheckResult::make("x", 1e-7, 1e-5, "d"));
  CHECK(c["name"] == "x");
  CHECK(c["passed"] == true);
}

TEST_CASE("format tags") {
  CHECK(format_from_string("json") == Format::Json);
  CHECK(format_from_string("csv") == Format::Csv);
  CHECK_THROWS_AS(format_from_string("xml"), Error);
}

TEST_CASE("spectrum documents are byte-deterministic") {
  const auto r = verify::check_spectrum(kUnbroken, kSmall);
  const Bundle a = spectrum_documents(r, Format::Json);
  const Bundle b = spectrum_documents(verify::check_spectrum(kUnbroken, kSmall), Format::Json);
  REQUIRE(a.size() == 1);
  CHECK(a[0].name == "spectrum.json");
  CHECK(a[0].content == b[0].content);
  const Json j = Json::parse(a[0].content);
  CHECK(j["phase"] == "PTUnbroken");
  CHECK(j["levels"].size() == 4);

  const Bundle c = spectrum_documents(r, Format::Csv);
  REQUIRE(c.size() == 1);
  CHECK(c[0].name == "spectrum.csv");
  CHECK(c[0].content.rfind("q,n,energy_re,energy_im,numeric_re,numeric_im,error\n", 0) == 0);
}

TEST_CASE("wavefunction documents") {
  const Bundle b = wavefunction_documents(kUnbroken, QuasiParity::Plus, 0, kSmall, Format::Json);
  const Document* csv = find(b, "wavefunction_qplus_n0.csv");
  const Document* json = find(b, "wavefunction_qplus_n0.json");
  REQUIRE(csv != nullptr);
  REQUIRE(json != nullptr);
  CHECK(csv->content.rfind("x,psi_re,psi_im,density_re,density_im\n", 0) == 0);
  CHECK(std::count(csv->content.begin(), csv->content.end(), '\n') == 402);
  const Json j = Json::parse(json->content);
  CHECK(j["value_at_zero"]["re"].get<double>() == 1.0);
  CHECK(j["convention"] == "conjugating");
  CHECK(j["convention_source"] == "orthogonality");
  CHECK_THROWS_AS(wavefunction_documents(kUnbroken, QuasiParity::Plus, 5, kSmall, Format::Csv),
                  Error);
}

TEST_CASE("partner documents") {
  const auto a = verify::analyze_partner(kUnbroken, QuasiParity::Plus, kSmall);
  const Bundle j = partner_documents(a, kSmall, Format::Json);
  REQUIRE(find(j, "partner.json") != nullptr);
  REQUIRE(find(j, "partner_potential.csv") != nullptr);
  const Json doc = Json::parse(find(j, "partner.json")->content);
  CHECK(doc["partner"]["alpha"]["re"].get<double>() == doctest::Approx(1.8));
  CHECK(doc["missing_level"]["re"].get<double>() == doctest::Approx(-1.44));
  CHECK(doc["degeneracy_table"].size() == 4);
  const Bundle c = partner_documents(a, kSmall, Format::Csv);
  CHECK(find(c, "partner_degeneracy.csv") != nullptr);
  CHECK(find(c, "partner_spectrum.csv") != nullptr);
}

TEST_CASE("scan and algebra documents") {
  const auto rows = verify::scan_pt_breaking(-4.0, {cplx(0.8), cplx(0.0, 0.5)}, kSmall);
  const Bundle s = scan_documents(-4.0, rows, kSmall, Format::Json);
  REQUIRE(find(s, "scan.csv") != nullptr);
  REQUIRE(find(s, "scan.json") != nullptr);
  const std::string& csv = find(s, "scan.csv")->content;
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
  const Bundle al = algebra_documents(kUnbroken, kSmall, Format::Json);
  REQUIRE(al.size() == 1);
  const Json j = Json::parse(al[0].content);
  CHECK(j["sectors"].contains("q_plus"));
  CHECK(j["sectors"].contains("q_minus"));
}
