#pragma once

#include <optional>
#include <string>

#include <json.hpp>

namespace f1m {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kReportSchema = "report-v1";

/// Outcome of a single verification check.
struct CheckResult {
  bool pass = true;
  nlohmann::json details = nlohmann::json::object();

  void fail(const std::string& what, nlohmann::json counterexample = {}) {
    pass = false;
    if (!details.contains("counterexample")) {
      details["counterexample"] = {{"what", what}};
      if (!counterexample.is_null()) details["counterexample"]["data"] = std::move(counterexample);
    }
  }
};

/// Machine-readable report emitted by the CLI for every claim.
struct VerificationReport {
  std::string claim;
  nlohmann::json scope = nlohmann::json::object();
  bool pass = false;
  double elapsed_seconds = 0.0;
  std::optional<nlohmann::json> counterexample;

  nlohmann::json to_json() const {
    nlohmann::json j{{"schema", kReportSchema},
                     {"claim", claim},
                     {"scope", scope},
                     {"result", pass ? "pass" : "fail"},
                     {"elapsed_seconds", elapsed_seconds},
                     {"tool_version", kToolVersion}};
    if (counterexample) j["counterexample"] = *counterexample;
    return j;
  }
};

}  // namespace f1m
