#pragma once

#include <json.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ggplab/exact.hpp"

namespace ggplab::report {

using Json = nlohmann::ordered_json;

inline constexpr const char* kArtifactVersion = "1.0.0";
inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

struct RunConfig {
  std::string suite = "all";
  int n = 3;
  int trials = 100;
  std::uint64_t seed = kDefaultSeed;
  double q = 101.0;
  double theta = 0.0;
  double h = 0.2;
  std::map<std::string, double> tol;  // named tolerance overrides
  std::string output_path;
  std::string csv_path;
  std::string matrix_path;

  // Tolerances and default parameters live here; each named default notes
  // the acceptance check it serves.
  double tolerance(const std::string& key, double fallback) const;
};

struct CheckResult {
  std::string name;
  Json params = Json::object();
  bool pass = false;
  std::map<std::string, double> measured;  // sorted keys keep output stable
  std::string notes;
  Json offending = Json();  // serialized failing input, when applicable

  static CheckResult make(const std::string& name, bool pass);
};

struct CsvTable {
  std::string name;  // suffix for the output file
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  std::string artifact_version = kArtifactVersion;
  RunConfig config;
  std::vector<CheckResult> checks;
  std::vector<CsvTable> tables;
  long long wall_time_ms = 0;

  bool all_pass() const;
  Json to_json() const;
};

Json config_to_json(const RunConfig& cfg);

// Matrices serialize as arrays of arrays of "p/q" strings.
Json exact_matrix_to_json(const alg::ExactMatrix& m);
alg::ExactMatrix exact_matrix_from_json(const Json& j);

// Write-then-rename so readers never observe a partial report.
void write_atomically(const std::string& path, const std::string& contents);

void write_csv_tables(const Report& rep, const std::string& base_path);

// Minimal structural validation of the emitted schema.
bool validate_report_json(const Json& j, std::string* why = nullptr);

}  // namespace ggplab::report
