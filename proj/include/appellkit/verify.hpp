#pragma once

/// @file verify.hpp
/// @brief Named identity checks grouped in suites, and report rendering.
///
/// Every identity owns its RNG stream (seeded from the config seed and the
/// identity name), so results do not depend on scheduling.

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "appellkit/check.hpp"
#include "appellkit/config.hpp"

namespace appellkit {

struct IdentitySpec {
  std::string suite;
  std::string name;
  std::function<CheckResult(const RunConfig&)> run;
};

/// All identities, in report order.
const std::vector<IdentitySpec>& identity_registry();

/// The suites accepted by run_suite, "all" excluded.
const std::vector<std::string>& suite_names();

/// (suite, identity) pairs every invariant is filed under.
std::vector<std::pair<std::string, std::string>> invariant_manifest();

/// Runs one identity by name; DomainError if unknown. Errors thrown by the
/// check are caught and reported as a failed result.
CheckResult run_identity(const std::string& name, const RunConfig& config);

/// Runs a suite ("all" for every suite), one task per identity.
std::vector<CheckResult> run_suite(const std::string& suite, const RunConfig& config);

struct Report {
  std::string suite;
  RunConfig config;
  std::vector<CheckResult> results;

  bool pass() const;
};

nlohmann::json to_json(const Report& r);
std::string render(const Report& r, OutputFormat format);

}  // namespace appellkit
