#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace polychrome {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sgn(const Rat& v) { return v.sign(); }

/// Parses "7", "-3", "5/8", "-5/8". Exact; no floating point.
inline Rat parse_rational(const std::string& s) {
  auto parse_int = [&s](const std::string& part) {
    std::size_t d = part.size() && (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (d == part.size()) throw std::invalid_argument("malformed rational: " + s);
    for (std::size_t i = d; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9')
        throw std::invalid_argument("malformed rational: " + s);
    return Int(part);
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(parse_int(s));
  Int num = parse_int(s.substr(0, slash));
  Int den = parse_int(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: " + s);
  return Rat(num, den);
}

inline std::string to_string(const Rat& v) {
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

/// Least integer >= v.
inline Int ceil_int(const Rat& v) {
  Int num = numerator(v), den = denominator(v);  // den > 0
  Int q = num / den;
  if (num > q * den) ++q;
  return q;
}

}  // namespace polychrome
