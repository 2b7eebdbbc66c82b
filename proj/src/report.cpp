#include "ggplab/report.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace ggplab::report {

double RunConfig::tolerance(const std::string& key, double fallback) const {
  auto it = tol.find(key);
  return it == tol.end() ? fallback : it->second;
}

CheckResult CheckResult::make(const std::string& name, bool pass) {
  CheckResult r;
  r.name = name;
  r.pass = pass;
  return r;
}

bool Report::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

Json config_to_json(const RunConfig& cfg) {
  Json j;
  j["suite"] = cfg.suite;
  j["n"] = cfg.n;
  j["trials"] = cfg.trials;
  j["seed"] = cfg.seed;
  j["q"] = cfg.q;
  j["theta"] = cfg.theta;
  j["h"] = cfg.h;
  Json tols = Json::object();
  for (const auto& [k, v] : cfg.tol) tols[k] = v;
  j["tol"] = tols;
  j["output_path"] = cfg.output_path;
  j["csv_path"] = cfg.csv_path;
  j["matrix_path"] = cfg.matrix_path;
  return j;
}

Json Report::to_json() const {
  Json j;
  j["artifact_version"] = artifact_version;
  j["config"] = config_to_json(config);
  Json cs = Json::array();
  for (const auto& c : checks) {
    Json cj;
    cj["name"] = c.name;
    cj["params"] = c.params;
    cj["pass"] = c.pass;
    Json m = Json::object();
    for (const auto& [k, v] : c.measured) m[k] = v;
    cj["measured"] = m;
    cj["notes"] = c.notes;
    if (!c.offending.is_null()) cj["offending_input"] = c.offending;
    cs.push_back(cj);
  }
  j["checks"] = cs;
  j["wall_time_ms"] = wall_time_ms;
  return j;
}

Json exact_matrix_to_json(const alg::ExactMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(alg::rat_to_string(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

alg::ExactMatrix exact_matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix json: array of arrays required");
  int rows = static_cast<int>(j.size());
  int cols = static_cast<int>(j[0].size());
  alg::ExactMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(j[i].size()) != cols)
      throw std::invalid_argument("matrix json: ragged rows");
    for (int c = 0; c < cols; ++c)
      m.at(i, c) = alg::rat_from_string(j[i][c].get<std::string>());
  }
  return m;
}

void write_atomically(const std::string& path, const std::string& contents) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + tmp);
    out << contents;
    if (!out) throw std::runtime_error("short write: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("rename failed: " + path);
}

void write_csv_tables(const Report& rep, const std::string& base_path) {
  for (const auto& t : rep.tables) {
    std::string path = base_path;
    auto dot = path.rfind(".csv");
    std::string suffix = "." + t.name + ".csv";
    if (dot != std::string::npos && dot == path.size() - 4)
      path = path.substr(0, dot) + suffix;
    else
      path += suffix;
    std::string body;
    for (size_t i = 0; i < t.header.size(); ++i)
      body += (i ? "," : "") + t.header[i];
    body += "\n";
    for (const auto& row : t.rows) {
      for (size_t i = 0; i < row.size(); ++i) body += (i ? "," : "") + row[i];
      body += "\n";
    }
    write_atomically(path, body);
  }
}

bool validate_report_json(const Json& j, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (!j.is_object()) return fail("root must be an object");
  for (const char* key : {"artifact_version", "config", "checks", "wall_time_ms"})
    if (!j.contains(key)) return fail(std::string("missing key: ") + key);
  if (!j["artifact_version"].is_string()) return fail("artifact_version must be a string");
  if (!j["checks"].is_array()) return fail("checks must be an array");
  for (const auto& c : j["checks"]) {
    for (const char* key : {"name", "params", "pass", "measured", "notes"})
      if (!c.contains(key)) return fail("check missing key: " + std::string(key));
    if (!c["pass"].is_boolean()) return fail("check pass must be boolean");
    if (!c["measured"].is_object()) return fail("check measured must be an object");
    if (!c["pass"].get<bool>() && !c.contains("offending_input") && c["notes"].get<std::string>().empty())
      return fail("failed check must carry notes or an offending input");
  }
  if (!j["wall_time_ms"].is_number()) return fail("wall_time_ms must be a number");
  return true;
}

}  // namespace ggplab::report
