#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "sta_zbw/dynamics.hpp"

namespace sta {

/// One row of trajectory.csv.
struct SampleRow {
  double tau = 0.0;
  std::array<double, 4> x{};
  std::array<double, 4> v{};
  double H = 0.0;       ///< p . v (canonical p)
  double pv = 0.0;      ///< pi . v (kinetic momentum)
  double OmegaS = 0.0;  ///< Omega . S, unit-rotor spin
  double K1 = 0.0, K2 = 0.0, K3 = 0.0;
  double res_nl = 0.0;  ///< |psi' gamma1 gamma2 + pi psi gamma0|
  double res_dh = 0.0;  ///< stream-line Dirac-Hestenes residual
};

inline constexpr const char* kCsvHeader = "tau,x0,x1,x2,x3,v0,v1,v2,v3,H,pv,OmegaS,K1,K2,K3,res_nl,res_dh";

/// Per-sample observables. Curvatures are NaN where the curve derivatives are
/// unavailable (potential_A fields).
std::vector<SampleRow> analyse(const Trajectory& t);

/// Header plus one line per row, every number with 17 significant digits.
void write_csv(std::ostream& out, const std::vector<SampleRow>& rows);

/// Reads what write_csv wrote. Throws sta::Error on a header or field mismatch.
std::vector<SampleRow> read_csv(std::istream& in);

}  // namespace sta
