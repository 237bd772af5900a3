#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "coringlab/structure.hpp"

namespace coringlab {

inline constexpr const char* kToolVersion = "0.1.0";

struct ReportDocument {
  std::string subject;  // bimodule name in the definition file
  AnalysisReport report;
  std::optional<double> seconds;  // only rendered when set
};

// Both renderings are functions of (document, version) alone; map iteration
// follows key order and witnesses follow the flag order.
std::string render_text(const ReportDocument& doc);
nlohmann::ordered_json report_json(const ReportDocument& doc);

// Reads back a witness written by report_json.
Witness witness_from_json(const Field& f, const nlohmann::json& j);

// Coring and algebra dumps for the construct command.
nlohmann::ordered_json coring_json(const Coring& c);
nlohmann::ordered_json algebra_json(const Algebra& a);

}  // namespace coringlab
