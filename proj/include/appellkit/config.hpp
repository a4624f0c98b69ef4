#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

namespace appellkit {

enum class OutputFormat { json, csv, md };

OutputFormat parse_format(const std::string& s);
const char* to_string(OutputFormat f);

struct RunConfig {
  /// Truncation for the symbolic suites; at most 24.
  unsigned degree_cap = 12;
  double tolerance = 1e-10;
  unsigned hermite_nodes = 80;
  unsigned plane_radial = 64;
  unsigned plane_angular = 128;
  unsigned legendre_nodes = 64;
  std::uint64_t seed = 20240601;
  OutputFormat format = OutputFormat::json;
  /// Replaces gamma_1 of the weighted shift; a negative control.
  std::optional<double> gamma_fault;

  /// Throws DomainError on N > 24, non-positive tolerance or empty rules.
  void validate() const;
};

/// Fields missing from the object keep their defaults.
RunConfig config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const RunConfig& c);

/// Reads `path` if non-empty, else $APPELLKIT_CONFIG if set, else defaults.
RunConfig load_config(const std::string& path);

}  // namespace appellkit
