#pragma once

#include <string>
#include <string_view>

#include "sta_zbw/multivector.hpp"

namespace sta {

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Human-readable form: terms "c*s" (scalar) or "c*g013" (gamma_0 gamma_1 gamma_3),
/// joined by " + ". Coefficients use 17 significant digits so that
/// parse_multivector(to_text(a)) == a exactly. The zero element prints as "0*s".
std::string to_text(const Multivector& a);

/// Inverse of to_text. Accepts whitespace-separated terms with optional "+"
/// separators; a term is "coef*blade", "blade" or a bare number. Blade digits
/// may be in any order or repeated ("g10" == -"g01", "g00" == 1).
Multivector parse_multivector(std::string_view text);

}  // namespace sta
