#include "sta_zbw/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "sta_zbw/dirac.hpp"
#include "sta_zbw/frenet.hpp"

namespace sta {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void put(std::string& line, double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  if (!line.empty()) line += ',';
  line += buf;
}

}  // namespace

std::vector<SampleRow> analyse(const Trajectory& t) {
  const FieldSpec& f = t.field();
  const bool have_curve = f.kind != FieldKind::potential_A;
  std::vector<SampleRow> rows;
  rows.reserve(t.size());
  for (const auto& smp : t.samples()) {
    const ParticleState& s = smp.state;
    SampleRow r;
    r.tau = s.tau;
    r.x = s.x.vector_components();
    r.v = smp.v.vector_components();
    r.H = smp.H;
    r.pv = scalar_product(kinetic_momentum(s, f), smp.v);
    const Derivatives d = eom_derivatives(s, f);
    try {
      r.OmegaS = scalar_product(rotor_omega(s, f), spin_bivector(s.psi));
    } catch (const DegenerateError&) {
      r.OmegaS = kNaN;
    }
    r.K1 = r.K2 = r.K3 = kNaN;
    if (have_curve) {
      try {
        const FrenetFrame fr = frenet_frame(s, f);
        r.K1 = fr.K.K1;
        r.K2 = fr.K.K2;
        r.K3 = fr.K.K3;
      } catch (const Error&) {
      }
    }
    r.res_nl = nonlinear_residual(s, d, f).coeff_norm();
    try {
      r.res_dh = streamline_dh_residual(s, d, t.mass()).coeff_norm();
    } catch (const Error&) {
      r.res_dh = kNaN;
    }
    rows.push_back(r);
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<SampleRow>& rows) {
  out << kCsvHeader << '\n';
  std::string line;
  for (const SampleRow& r : rows) {
    line.clear();
    put(line, r.tau);
    for (double c : r.x) put(line, c);
    for (double c : r.v) put(line, c);
    for (double c : {r.H, r.pv, r.OmegaS, r.K1, r.K2, r.K3, r.res_nl, r.res_dh}) put(line, c);
    out << line << '\n';
  }
}

std::vector<SampleRow> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw Error("read_csv: unexpected header");
  std::vector<SampleRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::array<double, 17> f{};
    std::istringstream cells(line);
    std::string cell;
    std::size_t n = 0;
    while (std::getline(cells, cell, ',')) {
      if (n >= f.size()) throw Error("read_csv: too many fields");
      char* end = nullptr;
      f[n] = std::strtod(cell.c_str(), &end);
      if (cell.empty() || *end != '\0') throw Error("read_csv: bad number '" + cell + "'");
      ++n;
    }
    if (n != f.size()) throw Error("read_csv: expected 17 fields");
    SampleRow r;
    r.tau = f[0];
    for (std::size_t k = 0; k < 4; ++k) {
      r.x[k] = f[1 + k];
      r.v[k] = f[5 + k];
    }
    r.H = f[9];
    r.pv = f[10];
    r.OmegaS = f[11];
    r.K1 = f[12];
    r.K2 = f[13];
    r.K3 = f[14];
    r.res_nl = f[15];
    r.res_dh = f[16];
    rows.push_back(r);
  }
  return rows;
}

}  // namespace sta
