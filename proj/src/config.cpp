#include "appellkit/config.hpp"

#include <cstdlib>
#include <fstream>

#include "appellkit/errors.hpp"

namespace appellkit {

OutputFormat parse_format(const std::string& s) {
  if (s == "json") {
    return OutputFormat::json;
  }
  if (s == "csv") {
    return OutputFormat::csv;
  }
  if (s == "md") {
    return OutputFormat::md;
  }
  throw DomainError("unknown output format '" + s + "'");
}

const char* to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
    case OutputFormat::md: return "md";
  }
  return "json";
}

void RunConfig::validate() const {
  if (degree_cap > 24) {
    throw DomainError("degree cap N must be at most 24, got " + std::to_string(degree_cap));
  }
  if (!(tolerance > 0.0)) {
    throw DomainError("tolerance must be positive");
  }
  if (hermite_nodes == 0 || plane_radial == 0 || plane_angular == 0 || legendre_nodes == 0) {
    throw DomainError("quadrature sizes must be positive");
  }
}

RunConfig config_from_json(const nlohmann::json& j) {
  RunConfig c;
  try {
    c.degree_cap = j.value("degree_cap", c.degree_cap);
    c.tolerance = j.value("tolerance", c.tolerance);
    c.hermite_nodes = j.value("hermite_nodes", c.hermite_nodes);
    c.plane_radial = j.value("plane_radial", c.plane_radial);
    c.plane_angular = j.value("plane_angular", c.plane_angular);
    c.legendre_nodes = j.value("legendre_nodes", c.legendre_nodes);
    c.seed = j.value("seed", c.seed);
    if (j.contains("format")) {
      c.format = parse_format(j.at("format").get<std::string>());
    }
    if (j.contains("gamma_fault") && !j.at("gamma_fault").is_null()) {
      c.gamma_fault = j.at("gamma_fault").get<double>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("bad config: ") + e.what());
  }
  c.validate();
  return c;
}

nlohmann::json to_json(const RunConfig& c) {
  nlohmann::json j = {{"degree_cap", c.degree_cap},       {"tolerance", c.tolerance},
                      {"hermite_nodes", c.hermite_nodes}, {"plane_radial", c.plane_radial},
                      {"plane_angular", c.plane_angular}, {"legendre_nodes", c.legendre_nodes},
                      {"seed", c.seed},                   {"format", to_string(c.format)}};
  j["gamma_fault"] = c.gamma_fault ? nlohmann::json(*c.gamma_fault) : nlohmann::json(nullptr);
  return j;
}

RunConfig load_config(const std::string& path) {
  std::string source = path;
  if (source.empty()) {
    if (const char* env = std::getenv("APPELLKIT_CONFIG"); env != nullptr && *env != '\0') {
      source = env;
    }
  }
  if (source.empty()) {
    return RunConfig{};
  }
  std::ifstream in(source);
  if (!in) {
    throw DomainError("cannot read config file " + source);
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("config " + source + " is not valid JSON: " + e.what());
  }
  return config_from_json(j);
}

}  // namespace appellkit
