#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "flatlie/forms.hpp"

namespace flatlie {

/// One upper-triangle bracket [e_i, e_j] = sum_k coeffs[k] e_k with i < j (0-based).
struct Bracket {
  std::size_t i = 0;
  std::size_t j = 0;
  Vector coeffs;
};

/// Finite-dimensional real Lie algebra given by rational structure constants
/// c(i,j,k), with [e_i, e_j] = sum_k c(i,j,k) e_k. Antisymmetry and the Jacobi
/// identity are verified exactly on construction.
class LieAlgebra {
 public:
  /// Builds from the strictly upper triangle; the lower triangle is filled in by antisymmetry.
  static LieAlgebra from_brackets(std::size_t dim, const std::vector<Bracket>& brackets,
                                  std::vector<std::string> labels = {}) {
    if (dim == 0) throw DimensionMismatch("Lie algebra dimension must be positive");
    std::vector<Rational> c(dim * dim * dim, Rational(0));
    std::vector<bool> seen(dim * dim, false);
    for (const auto& b : brackets) {
      if (b.i >= b.j || b.j >= dim) throw DimensionMismatch("bracket indices must satisfy i < j < dim");
      if (b.coeffs.size() != dim) throw DimensionMismatch("bracket coefficient vector has wrong length");
      if (seen[b.i * dim + b.j])
        throw DimensionMismatch("bracket [" + std::to_string(b.i + 1) + "," + std::to_string(b.j + 1) +
                                "] given twice");
      seen[b.i * dim + b.j] = true;
      for (std::size_t k = 0; k < dim; ++k) {
        c[(b.i * dim + b.j) * dim + k] = b.coeffs[k];
        c[(b.j * dim + b.i) * dim + k] = -b.coeffs[k];
      }
    }
    return validate(dim, std::move(c), std::move(labels));
  }

  /// Validates a full structure-constant tensor indexed (i*dim + j)*dim + k.
  static LieAlgebra validate(std::size_t dim, std::vector<Rational> constants, std::vector<std::string> labels = {}) {
    if (dim == 0 || constants.size() != dim * dim * dim)
      throw DimensionMismatch("structure constant tensor has wrong size");
    if (!labels.empty() && labels.size() != dim) throw DimensionMismatch("label count differs from dimension");
    LieAlgebra a(dim, std::move(constants), std::move(labels));
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = i; j < dim; ++j)
        for (std::size_t k = 0; k < dim; ++k)
          if (a.c(i, j, k) != -a.c(j, i, k)) throw AntisymmetryViolation(i, j, k);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = i + 1; j < dim; ++j)
        for (std::size_t k = j + 1; k < dim; ++k) {
          const Vector r = a.jacobi_residual(i, j, k);
          if (!is_zero(r)) throw JacobiViolation(i, j, k, to_string(r));
        }
    return a;
  }

  static LieAlgebra abelian(std::size_t dim) { return from_brackets(dim, {}); }

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<Rational>& constants() const noexcept { return c_; }

  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim_ + j) * dim_ + k]; }

  Vector bracket_basis(std::size_t i, std::size_t j) const {
    return Vector(c_.begin() + (i * dim_ + j) * dim_, c_.begin() + (i * dim_ + j + 1) * dim_);
  }

  Vector bracket(const Vector& x, const Vector& y) const {
    Vector r(dim_, Rational(0));
    for (std::size_t i = 0; i < dim_; ++i) {
      if (is_zero(x[i])) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (is_zero(y[j])) continue;
        const Rational xy = x[i] * y[j];
        for (std::size_t k = 0; k < dim_; ++k) r[k] += xy * c(i, j, k);
      }
    }
    return r;
  }

  /// [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]].
  Vector jacobi_residual(std::size_t i, std::size_t j, std::size_t k) const {
    const Vector ei = unit_vector(dim_, i), ej = unit_vector(dim_, j), ek = unit_vector(dim_, k);
    return bracket(ei, bracket_basis(j, k)) + bracket(ej, bracket_basis(k, i)) + bracket(ek, bracket_basis(i, j));
  }

  /// Matrix of v -> [x, v].
  QMatrix ad(const Vector& x) const {
    QMatrix m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (is_zero(x[i])) continue;
      for (std::size_t v = 0; v < dim_; ++v)
        for (std::size_t k = 0; k < dim_; ++k) m(k, v) += x[i] * c(i, v, k);
    }
    return m;
  }

  QMatrix ad_basis(std::size_t i) const { return ad(unit_vector(dim_, i)); }

  Subspace derived_subalgebra() const {
    std::vector<Vector> images;
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j) images.push_back(bracket_basis(i, j));
    return Subspace::span(dim_, images);
  }

  /// {x : [x, e_i] = 0 for all i}; row (i,k) of the constraint matrix is sum_j x_j c(j,i,k).
  Subspace center() const {
    QMatrix m(dim_ * dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t k = 0; k < dim_; ++k)
        for (std::size_t j = 0; j < dim_; ++j) m(i * dim_ + k, j) = c(j, i, k);
    return kernel(m);
  }

  bool is_abelian() const { return is_zero(c_); }

  /// Pairwise brackets of V's basis vanish.
  bool is_abelian(const Subspace& v) const {
    const auto& b = v.basis();
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j)
        if (!is_zero(bracket(b[i], b[j]))) return false;
    return true;
  }

  bool is_unimodular() const {
    for (std::size_t i = 0; i < dim_; ++i)
      if (!is_zero(ad_basis(i).trace())) return false;
    return true;
  }

  bool is_2_solvable() const { return is_abelian(derived_subalgebra()); }

  /// Transports the bracket to the basis f_a = sum_i P(i,a) e_i (the columns of P).
  LieAlgebra change_basis(const QMatrix& p) const {
    if (p.rows() != dim_ || !p.is_square()) throw DimensionMismatch("change of basis has wrong shape");
    const QMatrix pinv = inverse(p);
    std::vector<Rational> nc(dim_ * dim_ * dim_, Rational(0));
    std::vector<Vector> f;
    for (std::size_t a = 0; a < dim_; ++a) f.push_back(p.col(a));
    for (std::size_t a = 0; a < dim_; ++a)
      for (std::size_t b = a + 1; b < dim_; ++b) {
        const Vector coords = pinv * bracket(f[a], f[b]);
        for (std::size_t k = 0; k < dim_; ++k) {
          nc[(a * dim_ + b) * dim_ + k] = coords[k];
          nc[(b * dim_ + a) * dim_ + k] = -coords[k];
        }
      }
    return validate(dim_, std::move(nc));
  }

  /// Labels do not take part in equality.
  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) { return a.dim_ == b.dim_ && a.c_ == b.c_; }

 private:
  LieAlgebra(std::size_t dim, std::vector<Rational> c, std::vector<std::string> labels)
      : dim_(dim), c_(std::move(c)), labels_(std::move(labels)) {}

  std::size_t dim_ = 0;
  std::vector<Rational> c_;
  std::vector<std::string> labels_;
};

}  // namespace flatlie
