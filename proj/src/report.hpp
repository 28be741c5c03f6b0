#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "scarf2.hpp"
#include "susy.hpp"
#include "verify.hpp"

namespace ptscarf::report {

using Json = nlohmann::ordered_json;

/// One output file: name relative to the output directory, full content.
struct Document {
  std::string name;
  std::string content;
};
using Bundle = std::vector<Document>;

enum class Format { Json, Csv };
Format format_from_string(const std::string& s);  // "json" or "csv"

/// Pretty JSON with every number printed at 17 significant digits and
/// non-finite numbers as null. Byte-deterministic for equal input.
std::string dump(const Json& j);
std::string number(double x);  // %.17g, "inf"/"-inf"/"nan" for CSV

Json to_json(cplx z);
Json to_json(const ScarfParams& p);
Json to_json(const num::GridSpec& g);
Json to_json(const verify::CheckResult& c);
Json to_json(const verify::SpectrumReport& r);

Bundle spectrum_documents(const verify::SpectrumReport& r, Format f);
Bundle partner_documents(const verify::PartnerAnalysis& a, const num::GridSpec& grid, Format f);
/// Samples psi_n^(q) on grid; pseudo-norm under the orthogonalizing PT
/// convention when one can be determined, conjugating otherwise.
Bundle wavefunction_documents(const ScarfParams& p, QuasiParity q, int n,
                              const num::GridSpec& grid, Format f);
Bundle verify_documents(const verify::SuiteReport& s, Format f);
Bundle scan_documents(double beta, const std::vector<verify::ScanRow>& rows,
                      const num::GridSpec& grid, Format f);
Bundle algebra_documents(const ScarfParams& p, const num::GridSpec& grid, Format f);

}  // namespace ptscarf::report
