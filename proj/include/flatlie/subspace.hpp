#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "flatlie/matrix.hpp"

namespace flatlie {

/// Linear subspace of Q^n stored by its reduced row-echelon basis, so that
/// two subspaces are equal exactly when their stored bases are equal.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }

  static Subspace whole(std::size_t ambient_dim) {
    std::vector<Vector> basis;
    for (std::size_t i = 0; i < ambient_dim; ++i) basis.push_back(unit_vector(ambient_dim, i));
    return span(ambient_dim, basis);
  }

  /// Span of arbitrary (possibly dependent) vectors.
  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
    Subspace s(ambient_dim);
    if (vectors.empty()) return s;
    const RowEchelon e = row_echelon(QMatrix::from_rows(ambient_dim, vectors));
    for (std::size_t r = 0; r < e.pivots.size(); ++r) s.basis_.push_back(e.reduced.row(r));
    s.pivots_ = e.pivots;
    return s;
  }

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  bool is_zero() const noexcept { return basis_.empty(); }
  const std::vector<Vector>& basis() const noexcept { return basis_; }

  /// Basis vectors as rows.
  QMatrix basis_matrix() const { return QMatrix::from_rows(ambient_dim_, basis_); }

  /// Coordinates of v in the stored basis, or nullopt when v is not in the subspace.
  /// With an echelon basis the coordinates are the entries of v at the pivot columns.
  std::optional<Vector> coordinates(const Vector& v) const {
    Vector c(dim());
    Vector rest = v;
    for (std::size_t r = 0; r < dim(); ++r) {
      c[r] = v[pivots_[r]];
      for (std::size_t j = 0; j < ambient_dim_; ++j) rest[j] -= c[r] * basis_[r][j];
    }
    if (!flatlie::is_zero(rest)) return std::nullopt;
    return c;
  }

  bool contains(const Vector& v) const { return coordinates(v).has_value(); }

  bool contains(const Subspace& other) const {
    for (const auto& v : other.basis_)
      if (!contains(v)) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
  }

 private:
  explicit Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

  std::size_t ambient_dim_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

inline Subspace kernel(const QMatrix& a) { return Subspace::span(a.cols(), kernel_basis(a)); }

inline Subspace sum(const Subspace& a, const Subspace& b) {
  std::vector<Vector> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient_dim(), all);
}

inline Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.is_zero() || b.is_zero()) return Subspace::zero(a.ambient_dim());
  const std::size_t n = a.ambient_dim();
  // Solve sum_i x_i a_i - sum_j y_j b_j = 0.
  QMatrix m(n, a.dim() + b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t r = 0; r < n; ++r) m(r, i) = a.basis()[i][r];
  for (std::size_t j = 0; j < b.dim(); ++j)
    for (std::size_t r = 0; r < n; ++r) m(r, a.dim() + j) = -b.basis()[j][r];
  std::vector<Vector> common;
  for (const auto& k : kernel_basis(m)) {
    Vector v(n, Rational(0));
    for (std::size_t i = 0; i < a.dim(); ++i) v = v + k[i] * a.basis()[i];
    common.push_back(std::move(v));
  }
  return Subspace::span(n, common);
}

/// Image of a linear map given by its matrix.
inline Subspace image(const QMatrix& a) {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < a.cols(); ++j) cols.push_back(a.col(j));
  return Subspace::span(a.rows(), cols);
}

}  // namespace flatlie
