#pragma once

#include <string>
#include <vector>

#include "flatlie/metric.hpp"

namespace flatlie {

struct CatalogEntry {
  std::string name;
  std::string description;
  MetricLieAlgebra metric;
};

namespace detail {

inline Vector coeffs(std::initializer_list<int> xs) {
  Vector v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

inline QMatrix int_matrix(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<Vector> r;
  for (const auto& row : rows) r.push_back(coeffs(row));
  return QMatrix::from_rows(r.front().size(), r);
}

}  // namespace detail

/// Built-in examples. Indices in brackets are 0-based.
inline std::vector<CatalogEntry> catalog() {
  using detail::coeffs;
  using detail::int_matrix;
  std::vector<CatalogEntry> out;

  out.push_back({"abelian_minkowski", "abelian R^3 with the Minkowski metric diag(-1,1,1)",
                 MetricLieAlgebra(LieAlgebra::from_brackets(3, {}, {"e1", "e2", "e3"}),
                                  int_matrix({{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}}))});

  const auto rot3 = LieAlgebra::from_brackets(3, {{0, 1, coeffs({0, 0, 1})}, {0, 2, coeffs({0, -1, 0})}},
                                              {"s", "e1", "e2"});
  out.push_back({"rot3", "s rotates the Euclidean plane span{e1,e2}; s timelike: flat Lorentzian with timelike Killing field",
                 MetricLieAlgebra(rot3, int_matrix({{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}}))});
  out.push_back({"rot3_euclidean", "rot3 algebra with the identity metric: flat Riemannian",
                 MetricLieAlgebra(rot3, QMatrix::identity(3))});

  const auto rot5 = LieAlgebra::from_brackets(
      5,
      {{0, 1, coeffs({0, 0, 1, 0, 0})},
       {0, 2, coeffs({0, -1, 0, 0, 0})},
       {0, 3, coeffs({0, 0, 0, 0, 2})},
       {0, 4, coeffs({0, 0, 0, -2, 0})}},
      {"s", "e1", "e2", "e3", "e4"});
  out.push_back({"rot5", "s rotates two Euclidean planes with frequencies 1 and 2; s timelike",
                 MetricLieAlgebra(rot5, QMatrix::diagonal(coeffs({-1, 1, 1, 1, 1})))});

  const auto boost3 = LieAlgebra::from_brackets(3, {{0, 1, coeffs({0, 0, 1})}, {0, 2, coeffs({0, 1, 0})}},
                                                {"s", "x", "y"});
  out.push_back({"boost3", "s boosts the Lorentzian plane span{x,y}; flat Lorentzian without timelike Killing field",
                 MetricLieAlgebra(boost3, QMatrix::diagonal(coeffs({1, -1, 1})))});

  const auto c2 = LieAlgebra::from_brackets(2, {{0, 1, coeffs({0, 1})}}, {"d", "e"});
  out.push_back({"classc2_flat", "[d,e] = e with <d,e> = 1, <d,d> = <e,e> = 0: flat, [g,g] null",
                 MetricLieAlgebra(c2, int_matrix({{0, 1}, {1, 0}}))});
  out.push_back({"classc2_nonflat", "[d,e] = e with the identity metric: non-flat",
                 MetricLieAlgebra(c2, QMatrix::identity(2))});

  const auto c3 = LieAlgebra::from_brackets(3, {{0, 1, coeffs({0, 1, 0})}, {0, 2, coeffs({0, 0, 1})}},
                                            {"d", "e", "u"});
  out.push_back({"classc3_flat", "[d,e] = e, [d,u] = u with <d,e> = 1, <u,u> = 1: metric on [g,g] degenerate, flat",
                 MetricLieAlgebra(c3, int_matrix({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}))});

  const auto heis = LieAlgebra::from_brackets(3, {{0, 1, coeffs({0, 0, 1})}}, {"x", "y", "z"});
  out.push_back({"heisenberg_euclidean", "Heisenberg algebra [x,y] = z with the identity metric: non-flat",
                 MetricLieAlgebra(heis, QMatrix::identity(3))});
  out.push_back({"heisenberg_lorentz_null", "Heisenberg algebra with null center: <x,z> = 1, <y,y> = 1",
                 MetricLieAlgebra(heis, int_matrix({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}))});
  return out;
}

inline std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& e : catalog()) names.push_back(e.name);
  return names;
}

inline CatalogEntry catalog_entry(const std::string& name) {
  for (auto& e : catalog())
    if (e.name == name) return e;
  throw UnknownExample(name);
}

}  // namespace flatlie
