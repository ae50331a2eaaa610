#pragma once

#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "flatlie/metric.hpp"

namespace flatlie {

using Json = nlohmann::json;

inline Json to_json(const Rational& q) { return to_string(q); }

inline Json to_json(const Vector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

inline Json to_json(const QMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

inline Json to_json(const Subspace& s) {
  Json a = Json::array();
  for (const auto& v : s.basis()) a.push_back(to_json(v));
  return a;
}

namespace detail {

inline Rational rational_field(const Json& j, const std::string& where) {
  if (j.is_string()) return parse_rational(j.get<std::string>(), where);
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  if (j.is_number_unsigned()) return Rational(std::to_string(j.get<unsigned long long>()));
  throw ParseError(where, "expected a rational written as a string (\"p\" or \"p/q\")");
}

inline const Json& require(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(where, std::string("missing field '") + key + "'");
  return obj.at(key);
}

}  // namespace detail

/// Parses an input document:
///   {"dim": n, "labels": [...], "brackets": [{"i": 1, "j": 2, "coeffs": ["0", "1/2", ...]}],
///    "metric": [["1", "0"], ...]}
/// Indices are 1-based with i < j; rationals are strings. Validation errors
/// (antisymmetry, Jacobi, symmetric and nondegenerate metric) propagate as typed errors.
inline MetricLieAlgebra parse_document(const Json& doc) {
  const Json& dim_field = detail::require(doc, "dim", "document");
  if (!dim_field.is_number_integer() || dim_field.get<long long>() <= 0)
    throw ParseError("dim", "must be a positive integer");
  const std::size_t n = dim_field.get<std::size_t>();

  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    const Json& l = doc.at("labels");
    if (!l.is_array() || l.size() != n) throw ParseError("labels", "must be an array of dim strings");
    for (std::size_t i = 0; i < n; ++i) {
      if (!l[i].is_string()) throw ParseError("labels[" + std::to_string(i) + "]", "must be a string");
      labels.push_back(l[i].get<std::string>());
    }
  }

  std::vector<Bracket> brackets;
  if (doc.contains("brackets")) {
    const Json& bs = doc.at("brackets");
    if (!bs.is_array()) throw ParseError("brackets", "must be an array");
    for (std::size_t b = 0; b < bs.size(); ++b) {
      const std::string where = "brackets[" + std::to_string(b) + "]";
      const Json& i = detail::require(bs[b], "i", where);
      const Json& j = detail::require(bs[b], "j", where);
      const Json& c = detail::require(bs[b], "coeffs", where);
      if (!i.is_number_integer() || !j.is_number_integer()) throw ParseError(where, "i and j must be integers");
      const long long ii = i.get<long long>(), jj = j.get<long long>();
      if (ii < 1 || jj < 1 || ii >= jj || static_cast<std::size_t>(jj) > n)
        throw ParseError(where, "indices must satisfy 1 <= i < j <= dim");
      if (!c.is_array() || c.size() != n) throw ParseError(where + ".coeffs", "must hold dim rationals");
      Vector coeffs;
      for (std::size_t k = 0; k < n; ++k)
        coeffs.push_back(detail::rational_field(c[k], where + ".coeffs[" + std::to_string(k) + "]"));
      for (const auto& prev : brackets)
        if (prev.i + 1 == static_cast<std::size_t>(ii) && prev.j + 1 == static_cast<std::size_t>(jj))
          throw ParseError(where, "duplicate bracket");
      brackets.push_back({static_cast<std::size_t>(ii - 1), static_cast<std::size_t>(jj - 1), std::move(coeffs)});
    }
  }

  const Json& mj = detail::require(doc, "metric", "document");
  if (!mj.is_array() || mj.size() != n) throw ParseError("metric", "must be a dim x dim array");
  QMatrix g(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!mj[r].is_array() || mj[r].size() != n) throw ParseError("metric[" + std::to_string(r) + "]", "must hold dim rationals");
    for (std::size_t c = 0; c < n; ++c)
      g(r, c) = detail::rational_field(mj[r][c], "metric[" + std::to_string(r) + "][" + std::to_string(c) + "]");
  }
  if (!g.is_symmetric()) throw NonSymmetric();
  return MetricLieAlgebra(LieAlgebra::from_brackets(n, brackets, labels), g);
}

inline MetricLieAlgebra parse_document(std::istream& in) {
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), "malformed JSON");
  }
  return parse_document(doc);
}

inline MetricLieAlgebra parse_document(const std::string& text) {
  std::istringstream in(text);
  return parse_document(in);
}

inline MetricLieAlgebra parse_document(const char* text) { return parse_document(std::string(text)); }

/// Inverse of parse_document; only nonzero upper-triangle brackets are written.
inline Json to_document(const MetricLieAlgebra& m) {
  const std::size_t n = m.dim();
  Json doc;
  doc["dim"] = n;
  if (!m.algebra().labels().empty()) doc["labels"] = m.algebra().labels();
  Json brackets = Json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector c = m.algebra().bracket_basis(i, j);
      if (is_zero(c)) continue;
      brackets.push_back({{"i", i + 1}, {"j", j + 1}, {"coeffs", to_json(c)}});
    }
  doc["brackets"] = brackets;
  doc["metric"] = to_json(m.gram());
  return doc;
}

}  // namespace flatlie
