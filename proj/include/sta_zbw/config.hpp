#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sta_zbw/dynamics.hpp"

namespace sta {

class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A parsed run configuration.
///
/// Text format: one `key = value` per line, `#` starts a comment. Keys:
///   mass, charge, p0, x0, psi0, field.kind, field.F, steps_per_period, periods,
///   integrator, normalize_energy, mass_shell, outputs
/// Multivectors use the text form of parse_multivector; psi0 also accepts
/// `exp(<bivector text>)`. field.kind is free, constant_F or potential_A (the
/// latter with A(x) = x.F / 2, so that d^A = F).
struct RunConfig {
  SimConfig sim;
  bool write_trajectory = true;
  bool write_report = true;
  /// Key/value pairs in file order, values trimmed.
  std::vector<std::pair<std::string, std::string>> entries;
};

/// Throws ConfigError on unknown or duplicate keys, bad values, or a config
/// that fails SimConfig::validate.
RunConfig parse_config(std::string_view text);

RunConfig load_config(const std::string& path);

/// Canonical `key = value` text with every key present. parse_config of this
/// text yields an identical SimConfig.
std::string config_text(const RunConfig& cfg);

/// A(x) = x.F / 2.
FieldSpec::Potential uniform_potential(const Multivector& F);

}  // namespace sta
