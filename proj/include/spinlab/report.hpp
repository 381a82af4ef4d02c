#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "spinlab/rng.hpp"

namespace spinlab {

using json = nlohmann::ordered_json;

struct SuiteConfig {
  double tolerance = 1e-10;
  std::uint64_t seed = 42;
  int trials = 100;
  int mode_cutoff = 4;
  std::vector<double> holonomy;  // empty = suite defaults
  // Optional grid overrides; <= 0 means "use the suite default grid".
  int n = 0;
  int m = 0;
  int r = 0;
  int s = 1;
};

struct CheckRow {
  std::string check;
  json params = json::object();
  std::string status;  // pass | fail | warn
  double max_residual = 0.0;
  double tolerance = 0.0;
  std::string details;
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  std::vector<CheckRow> checks;
  json extra = json::object();  // suite-specific payloads (rows, spectra)

  void add(CheckRow row) { checks.push_back(std::move(row)); }

  void add_check(const std::string& name, json params, double residual, double tol,
                 const std::string& details = "") {
    CheckRow row;
    row.check = name;
    row.params = std::move(params);
    row.status = residual < tol ? "pass" : "fail";
    row.max_residual = residual;
    row.tolerance = tol;
    row.details = details;
    checks.push_back(std::move(row));
  }

  void add_condition(const std::string& name, json params, bool ok,
                     const std::string& details = "", double residual = 0.0,
                     double tol = 0.0) {
    CheckRow row;
    row.check = name;
    row.params = std::move(params);
    row.status = ok ? "pass" : "fail";
    row.max_residual = residual;
    row.tolerance = tol;
    row.details = details;
    checks.push_back(std::move(row));
  }

  int count(const std::string& status) const {
    int c = 0;
    for (const auto& row : checks) {
      if (row.status == status) ++c;
    }
    return c;
  }

  bool passed() const { return count("fail") == 0; }

  json to_json() const {
    json j;
    j["suite"] = suite;
    j["rng"] = Rng::algorithm();
    j["seed"] = seed;
    j["tolerance"] = tolerance;
    json rows = json::array();
    for (const auto& row : checks) {
      json r;
      r["check"] = row.check;
      r["params"] = row.params;
      r["status"] = row.status;
      r["max_residual"] = row.max_residual;
      r["tolerance"] = row.tolerance;
      r["details"] = row.details;
      rows.push_back(r);
    }
    j["checks"] = rows;
    for (const auto& [key, value] : extra.items()) j[key] = value;
    j["summary"] = {{"pass", count("pass")}, {"fail", count("fail")}, {"warn", count("warn")}};
    return j;
  }
};

/// Render a suite report (or the combined "all" report) as a markdown
/// table.  Works off the serialized form so the CLI can reuse it.
inline std::string to_markdown(const json& report) {
  std::string out;
  if (report.contains("reports")) {
    for (const auto& sub : report.at("reports")) out += to_markdown(sub);
    out += "\noverall summary: " + report.at("summary").dump() + "\n";
    return out;
  }
  out += "# spinlab suite: " + report.at("suite").get<std::string>() + "\n\n";
  out += "| check | params | status | max_residual | tolerance |\n";
  out += "|---|---|---|---|---|\n";
  for (const auto& row : report.at("checks")) {
    out += "| " + row.at("check").get<std::string>() + " | " + row.at("params").dump() + " | " +
           row.at("status").get<std::string>() + " | " + row.at("max_residual").dump() + " | " +
           row.at("tolerance").dump() + " |\n";
  }
  out += "\nsummary: " + report.at("summary").dump() + "\n\n";
  return out;
}

}  // namespace spinlab
