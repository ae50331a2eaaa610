#pragma once

#include <cstddef>
#include <string>
#include <utility>

#include "flatlie/subspace.hpp"

namespace flatlie {

/// Inertia (n_plus, n_minus, n_zero) of a symmetric bilinear form.
struct Signature {
  std::size_t n_plus = 0;
  std::size_t n_minus = 0;
  std::size_t n_zero = 0;

  std::size_t dim() const noexcept { return n_plus + n_minus + n_zero; }
  bool nondegenerate() const noexcept { return n_zero == 0; }
  bool lorentzian() const noexcept { return n_minus == 1 && n_zero == 0 && dim() >= 1; }
  bool riemannian() const noexcept { return n_minus == 0 && n_zero == 0; }

  friend bool operator==(const Signature&, const Signature&) = default;
};

inline std::string to_string(const Signature& s) {
  return "(" + std::to_string(s.n_plus) + "," + std::to_string(s.n_minus) + "," + std::to_string(s.n_zero) + ")";
}

/// Result of congruence diagonalization: transform^T * S * transform == diag(diagonal).
struct CongruenceDiagonalization {
  QMatrix transform;
  Vector diagonal;
};

/// Symmetric Gaussian reduction. Row and column operations are applied in pairs, so
/// only congruences are used and no eigenvalues are needed. When every remaining
/// diagonal entry is zero but an off-diagonal entry S(i,j) is not, column j is added to
/// column i (and row j to row i), which puts 2*S(i,j) on the diagonal.
inline CongruenceDiagonalization diagonalize_congruence(const QMatrix& s) {
  if (!s.is_symmetric()) throw NonSymmetric();
  const std::size_t n = s.rows();
  QMatrix a = s;
  QMatrix p = QMatrix::identity(n);

  auto swap_index = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < n; ++k) std::swap(a(i, k), a(j, k));
    for (std::size_t k = 0; k < n; ++k) std::swap(a(k, i), a(k, j));
    for (std::size_t k = 0; k < n; ++k) std::swap(p(k, i), p(k, j));
  };
  // Basis change f_i <- f_i + f_j.
  auto add_index = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < n; ++k) a(i, k) += a(j, k);
    for (std::size_t k = 0; k < n; ++k) a(k, i) += a(k, j);
    for (std::size_t k = 0; k < n; ++k) p(k, i) += p(k, j);
  };

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && is_zero(a(piv, piv))) ++piv;
    if (piv == n) {
      std::size_t oi = n, oj = n;
      for (std::size_t i = k; i < n && oi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (!is_zero(a(i, j))) {
            oi = i;
            oj = j;
            break;
          }
      if (oi == n) break;  // remaining block is zero
      add_index(oi, oj);
      piv = oi;
    }
    swap_index(k, piv);
    const Rational pivot = a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (is_zero(a(i, k))) continue;
      const Rational f = a(i, k) / pivot;
      // f_i <- f_i - f * f_k
      for (std::size_t c = 0; c < n; ++c) a(i, c) -= f * a(k, c);
      for (std::size_t r = 0; r < n; ++r) a(r, i) -= f * a(r, k);
      for (std::size_t r = 0; r < n; ++r) p(r, i) -= f * p(r, k);
    }
  }

  Vector d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = a(i, i);
  return {std::move(p), std::move(d)};
}

inline Signature signature(const QMatrix& s) {
  Signature sig;
  for (const auto& x : diagonalize_congruence(s).diagonal) {
    const int sg = sgn(x);
    if (sg > 0)
      ++sig.n_plus;
    else if (sg < 0)
      ++sig.n_minus;
    else
      ++sig.n_zero;
  }
  return sig;
}

/// Adjoint of M with respect to the form G: G^{-1} M^T G, so that <Mx,y> = <x,M*y>.
inline QMatrix adjoint(const QMatrix& m, const QMatrix& gram) {
  if (!gram.is_symmetric()) throw NonSymmetric();
  if (is_zero(determinant(gram))) throw DegenerateForm();
  return solve(gram, m.transpose() * gram);
}

/// Gram matrix of the form restricted to V, in V's stored basis.
inline QMatrix restrict_form(const QMatrix& gram, const Subspace& v) {
  const QMatrix b = v.basis_matrix();
  return b * gram * b.transpose();
}

/// Radical of the restricted form, in ambient coordinates.
inline Subspace radical(const QMatrix& form_restricted, const Subspace& on) {
  std::vector<Vector> out;
  if (on.is_zero()) return Subspace::zero(on.ambient_dim());
  for (const auto& k : kernel_basis(form_restricted)) {
    Vector v(on.ambient_dim(), Rational(0));
    for (std::size_t i = 0; i < on.dim(); ++i) v = v + k[i] * on.basis()[i];
    out.push_back(std::move(v));
  }
  return Subspace::span(on.ambient_dim(), out);
}

inline Subspace radical_of_restriction(const QMatrix& gram, const Subspace& on) {
  return radical(restrict_form(gram, on), on);
}

/// V^perp with respect to a nondegenerate form.
inline Subspace orthogonal_complement(const Subspace& v, const QMatrix& gram) {
  if (!gram.is_symmetric()) throw NonSymmetric();
  if (is_zero(determinant(gram))) throw DegenerateForm();
  if (v.is_zero()) return Subspace::whole(v.ambient_dim());
  return kernel(v.basis_matrix() * gram);
}

}  // namespace flatlie
