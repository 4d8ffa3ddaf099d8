#include "sta_zbw/config.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "sta_zbw/text.hpp"

namespace sta {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double to_double(const std::string& key, const std::string& v) {
  errno = 0;
  char* end = nullptr;
  const double x = std::strtod(v.c_str(), &end);
  if (v.empty() || end != v.c_str() + v.size() || errno == ERANGE || !std::isfinite(x))
    throw ConfigError(key + ": expected a finite number, got '" + v + "'");
  return x;
}

int to_int(const std::string& key, const std::string& v) {
  errno = 0;
  char* end = nullptr;
  const long x = std::strtol(v.c_str(), &end, 10);
  if (v.empty() || end != v.c_str() + v.size() || errno == ERANGE || x < 0 || x > 100000000)
    throw ConfigError(key + ": expected a non-negative integer, got '" + v + "'");
  return static_cast<int>(x);
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError(key + ": expected true or false, got '" + v + "'");
}

Multivector to_mv(const std::string& key, const std::string& v) {
  try {
    return parse_multivector(v);
  } catch (const ParseError& e) {
    throw ConfigError(key + ": " + e.what());
  }
}

Multivector to_vector(const std::string& key, const std::string& v) {
  const Multivector m = to_mv(key, v);
  if (off_grade_norm(m, 1) != 0.0) throw ConfigError(key + ": expected a vector");
  return m;
}

EvenElement to_spinor(const std::string& key, const std::string& v) {
  std::string body = v;
  bool exponential = false;
  if (body.size() > 5 && body.compare(0, 4, "exp(") == 0 && body.back() == ')') {
    body = body.substr(4, body.size() - 5);
    exponential = true;
  }
  const Multivector m = to_mv(key, body);
  if (odd_part(m).coeff_norm() != 0.0)
    throw ConfigError(key + ": expected an even multivector");
  const EvenElement e = EvenElement::project(m);
  if (!exponential) return e;
  try {
    return exp_even(e);
  } catch (const Error& err) {
    throw ConfigError(key + ": " + err.what());
  }
}

const std::set<std::string> kKeys{"mass",   "charge",     "p0",        "x0",               "psi0",
                                  "field.kind", "field.F", "steps_per_period", "periods",
                                  "integrator", "normalize_energy", "mass_shell", "outputs"};

}  // namespace

FieldSpec::Potential uniform_potential(const Multivector& F) {
  const Multivector f = grade_project(F, 2);
  return [f](const Multivector& x) { return 0.5 * dot(x, f); };
}

RunConfig parse_config(std::string_view text) {
  RunConfig cfg;
  std::set<std::string> seen;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(std::string_view(t).substr(0, eq));
    const std::string value = trim(std::string_view(t).substr(eq + 1));
    if (!kKeys.count(key)) throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    if (!seen.insert(key).second) throw ConfigError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
    cfg.entries.emplace_back(key, value);
  }

  SimConfig& s = cfg.sim;
  std::string kind = "free";
  Multivector F;
  bool have_F = false;
  for (const auto& [key, v] : cfg.entries) {
    if (key == "mass") s.mass = to_double(key, v);
    else if (key == "charge") s.charge = to_double(key, v);
    else if (key == "p0") s.p0 = to_vector(key, v);
    else if (key == "x0") s.x0 = to_vector(key, v);
    else if (key == "psi0") s.psi0 = to_spinor(key, v);
    else if (key == "field.kind") kind = v;
    else if (key == "field.F") {
      F = to_mv(key, v);
      if (off_grade_norm(F, 2) != 0.0) throw ConfigError("field.F: expected a bivector");
      have_F = true;
    } else if (key == "steps_per_period") s.steps_per_period = to_int(key, v);
    else if (key == "periods") s.periods = to_double(key, v);
    else if (key == "integrator") {
      if (v == "rk4") s.integrator = Integrator::rk4;
      else if (v == "euler") s.integrator = Integrator::euler;
      else throw ConfigError("integrator: expected rk4 or euler, got '" + v + "'");
    } else if (key == "normalize_energy") s.normalize_energy = to_bool(key, v);
    else if (key == "mass_shell") s.require_mass_shell = to_bool(key, v);
    else if (key == "outputs") {
      cfg.write_trajectory = cfg.write_report = false;
      std::istringstream list(v);
      std::string item;
      while (std::getline(list, item, ',')) {
        item = trim(item);
        if (item == "trajectory") cfg.write_trajectory = true;
        else if (item == "report") cfg.write_report = true;
        else if (item == "none") continue;
        else throw ConfigError("outputs: unknown output '" + item + "'");
      }
    }
  }

  if (kind == "free") {
    if (have_F && F.coeff_norm() != 0.0) throw ConfigError("field.F given but field.kind is free");
    s.field = FieldSpec::free_field();
  } else if (kind == "constant_F" || kind == "potential_A") {
    if (!have_F) throw ConfigError("field." + kind + " needs field.F");
    s.field = kind == "constant_F" ? FieldSpec::constant(F, s.charge) : FieldSpec::potential(uniform_potential(F), s.charge);
    s.field.F = F;
  } else {
    throw ConfigError("field.kind: expected free, constant_F or potential_A, got '" + kind + "'");
  }

  try {
    s.validate();
    (void)initial_state(s);
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string config_text(const RunConfig& cfg) {
  const SimConfig& s = cfg.sim;
  std::string kind = "free";
  if (s.field.kind == FieldKind::constant_F) kind = "constant_F";
  if (s.field.kind == FieldKind::potential_A) kind = "potential_A";
  std::string outputs;
  if (cfg.write_trajectory) outputs = "trajectory";
  if (cfg.write_report) outputs += outputs.empty() ? "report" : ",report";

  std::ostringstream o;
  o << "mass = " << fmt(s.mass) << "\n"
    << "charge = " << fmt(s.charge) << "\n"
    << "p0 = " << to_text(s.p0) << "\n"
    << "x0 = " << to_text(s.x0) << "\n"
    << "psi0 = " << to_text(s.psi0) << "\n"
    << "field.kind = " << kind << "\n";
  if (s.field.kind != FieldKind::free) o << "field.F = " << to_text(s.field.F) << "\n";
  o << "steps_per_period = " << s.steps_per_period << "\n"
    << "periods = " << fmt(s.periods) << "\n"
    << "integrator = " << (s.integrator == Integrator::rk4 ? "rk4" : "euler") << "\n"
    << "normalize_energy = " << (s.normalize_energy ? "true" : "false") << "\n"
    << "mass_shell = " << (s.require_mass_shell ? "true" : "false") << "\n";
  o << "outputs = " << (outputs.empty() ? "none" : outputs) << "\n";
  return o.str();
}

}  // namespace sta
