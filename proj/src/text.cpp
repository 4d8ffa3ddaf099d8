#include "sta_zbw/text.hpp"

#include <cctype>
#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <vector>

namespace sta {

namespace {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string blade_name(unsigned b) {
  if (b == 0) return "s";
  std::string n = "g";
  for (int i = 0; i < 4; ++i)
    if (b & (1u << i)) n.push_back(static_cast<char>('0' + i));
  return n;
}

Multivector parse_blade(std::string_view tok) {
  if (tok == "s") return Multivector::scalar(1.0);
  if (tok.size() < 2 || tok[0] != 'g') throw ParseError("bad blade name '" + std::string(tok) + "'");
  Multivector r = Multivector::scalar(1.0);
  for (char ch : tok.substr(1)) {
    if (ch < '0' || ch > '3') throw ParseError("bad blade index in '" + std::string(tok) + "'");
    r = r * Multivector::gamma(ch - '0');
  }
  return r;
}

double parse_number(std::string_view tok) {
  std::string s(tok);
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0' || errno == ERANGE) throw ParseError("bad coefficient '" + s + "'");
  return v;
}

bool looks_like_blade(std::string_view tok) { return tok == "s" || (!tok.empty() && tok[0] == 'g'); }

}  // namespace

std::string to_text(const Multivector& a) {
  std::string out;
  for (unsigned b = 0; b < Multivector::kSize; ++b) {
    if (a[b] == 0.0) continue;
    if (!out.empty()) out += " + ";
    out += format_double(a[b]) + "*" + blade_name(b);
  }
  return out.empty() ? "0*s" : out;
}

Multivector parse_multivector(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tok;
  Multivector sum;
  bool any = false;
  while (in >> tok) {
    if (tok == "+") continue;
    Multivector term;
    if (const auto star = tok.find('*'); star != std::string::npos) {
      term = parse_blade(std::string_view(tok).substr(star + 1)) * parse_number(std::string_view(tok).substr(0, star));
    } else if (looks_like_blade(tok)) {
      term = parse_blade(tok);
    } else if (tok[0] == '-' && looks_like_blade(std::string_view(tok).substr(1))) {
      term = -parse_blade(std::string_view(tok).substr(1));
    } else {
      term = Multivector::scalar(parse_number(tok));
    }
    sum += term;
    any = true;
  }
  if (!any) throw ParseError("empty multivector text");
  return sum;
}

}  // namespace sta
