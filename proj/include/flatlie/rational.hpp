#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "flatlie/errors.hpp"

namespace flatlie {

/// Exact rational backed by GMP; every arithmetic result is kept in lowest terms.
using Rational = mpq_class;

/// Coordinate vector over the rationals.
using Vector = std::vector<Rational>;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

/// Parses "p", "-p" or "p/q" exactly. Anything else, including a zero denominator, is a ParseError.
inline Rational parse_rational(std::string_view text, const std::string& location = {}) {
  auto fail = [&](const char* why) -> Rational {
    throw ParseError(location, std::string(why) + " in rational '" + std::string(text) + "'");
  };
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
  const std::size_t num_begin = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == num_begin) return fail("missing numerator");
  std::string normalized(text.substr(text[0] == '+' ? 1 : 0, pos - (text[0] == '+' ? 1 : 0)));
  if (pos < text.size()) {
    if (text[pos] != '/') return fail("unexpected character");
    ++pos;
    const std::size_t den_begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == den_begin || pos != text.size()) return fail("malformed denominator");
    std::string den(text.substr(den_begin));
    if (den.find_first_not_of('0') == std::string::npos) return fail("zero denominator");
    normalized += "/" + den;
  }
  Rational q(normalized, 10);
  q.canonicalize();
  return q;
}

/// Canonical text form: "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline double to_double(const Rational& q) { return q.get_d(); }

inline std::vector<double> to_double(const Vector& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.get_d());
  return out;
}

inline std::string to_string(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += to_string(v[i]);
  }
  return s + ")";
}

inline Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n, Rational(0));
  v[i] = 1;
  return v;
}

inline Vector operator+(const Vector& a, const Vector& b) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vector operator-(const Vector& a, const Vector& b) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vector operator*(const Rational& s, const Vector& a) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

}  // namespace flatlie
