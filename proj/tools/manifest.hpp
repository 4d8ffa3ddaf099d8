#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "sta_zbw/checks.hpp"
#include "sta_zbw/config.hpp"

namespace sta::cli {

struct RunManifest {
  std::string version;
  RunConfig config;
  std::uint64_t config_hash = 0;
  std::uint64_t seed = 42;
  double tol_scale = 1.0;
  std::string started_at;
  std::string finished_at;
  double wall_seconds = 0.0;
  std::string trajectory_path;
  std::string report_path;
  std::size_t samples = 0;
  std::vector<CheckResult> checks;
};

nlohmann::ordered_json to_json(const RunManifest& m);

/// UTC, ISO 8601, second resolution.
std::string utc_now();

}  // namespace sta::cli
