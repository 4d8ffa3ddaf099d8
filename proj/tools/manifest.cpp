#include "manifest.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>

namespace sta::cli {

namespace {

nlohmann::ordered_json number(double x) {
  if (std::isfinite(x)) return x;
  return nullptr;
}

}  // namespace

nlohmann::ordered_json to_json(const RunManifest& m) {
  nlohmann::ordered_json j;
  j["tool"] = "sta-zbw";
  j["version"] = m.version;
  nlohmann::ordered_json cfg;
  cfg["text"] = config_text(m.config);
  nlohmann::ordered_json given = nlohmann::ordered_json::object();
  for (const auto& [k, v] : m.config.entries) given[k] = v;
  cfg["given"] = given;
  char hash[20];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(m.config_hash));
  cfg["hash"] = hash;
  j["config"] = cfg;
  j["seed"] = m.seed;
  j["tol_scale"] = m.tol_scale;
  j["started_at"] = m.started_at;
  j["finished_at"] = m.finished_at;
  j["wall_seconds"] = m.wall_seconds;
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  if (!m.trajectory_path.empty()) out["trajectory"] = m.trajectory_path;
  if (!m.report_path.empty()) out["report"] = m.report_path;
  j["outputs"] = out;
  j["samples"] = m.samples;

  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const CheckResult& c : m.checks) {
    nlohmann::ordered_json r;
    r["name"] = c.name;
    r["measured"] = number(c.measured);
    if (c.gated) {
      if (std::isfinite(c.lo)) r["min"] = c.lo;
      r["tol"] = number(c.tol);
    }
    r["status"] = !c.gated ? "info" : (c.pass ? "pass" : "fail");
    checks.push_back(r);
  }
  j["checks"] = checks;
  j["pass"] = all_pass(m.checks);
  return j;
}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace sta::cli
