#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "flatlie/lie_algebra.hpp"

namespace flatlie {

/// Lie algebra together with a nondegenerate symmetric inner product.
class MetricLieAlgebra {
 public:
  MetricLieAlgebra(LieAlgebra algebra, QMatrix gram) : algebra_(std::move(algebra)), gram_(std::move(gram)) {
    if (gram_.rows() != algebra_.dim() || !gram_.is_square())
      throw DimensionMismatch("metric size differs from algebra dimension");
    if (!gram_.is_symmetric()) throw NonSymmetric();
    signature_ = signature(gram_);
    if (!signature_.nondegenerate()) throw DegenerateForm();
  }

  const LieAlgebra& algebra() const noexcept { return algebra_; }
  const QMatrix& gram() const noexcept { return gram_; }
  const Signature& sig() const noexcept { return signature_; }
  std::size_t dim() const noexcept { return algebra_.dim(); }
  bool is_lorentzian() const noexcept { return signature_.lorentzian(); }
  bool is_riemannian() const noexcept { return signature_.riemannian(); }

  Rational inner(const Vector& x, const Vector& y) const { return bilinear(gram_, x, y); }

  /// Same metric Lie algebra written in the basis given by the columns of P.
  MetricLieAlgebra change_basis(const QMatrix& p) const {
    return MetricLieAlgebra(algebra_.change_basis(p), p.transpose() * gram_ * p);
  }

  MetricLieAlgebra with_gram(QMatrix gram) const { return MetricLieAlgebra(algebra_, std::move(gram)); }

 private:
  LieAlgebra algebra_;
  QMatrix gram_;
  Signature signature_;
};

/// Bilinear product e_i e_j = sum_k p(i,j,k) e_k encoding a torsion-free connection.
class LeviCivitaProduct {
 public:
  LeviCivitaProduct(std::size_t dim, std::vector<Rational> constants) : dim_(dim), p_(std::move(constants)) {
    if (p_.size() != dim * dim * dim) throw DimensionMismatch("product tensor has wrong size");
  }

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Rational>& constants() const noexcept { return p_; }
  const Rational& p(std::size_t i, std::size_t j, std::size_t k) const { return p_[(i * dim_ + j) * dim_ + k]; }

  Vector product_basis(std::size_t i, std::size_t j) const {
    return Vector(p_.begin() + (i * dim_ + j) * dim_, p_.begin() + (i * dim_ + j + 1) * dim_);
  }

  Vector product(const Vector& u, const Vector& v) const {
    Vector r(dim_, Rational(0));
    for (std::size_t i = 0; i < dim_; ++i) {
      if (is_zero(u[i])) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (is_zero(v[j])) continue;
        const Rational uv = u[i] * v[j];
        for (std::size_t k = 0; k < dim_; ++k) r[k] += uv * p(i, j, k);
      }
    }
    return r;
  }

  /// L_u : v -> uv
  QMatrix left_mult(const Vector& u) const {
    QMatrix m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (is_zero(u[i])) continue;
      for (std::size_t v = 0; v < dim_; ++v)
        for (std::size_t k = 0; k < dim_; ++k) m(k, v) += u[i] * p(i, v, k);
    }
    return m;
  }

  /// R_u : v -> vu
  QMatrix right_mult(const Vector& u) const {
    QMatrix m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (is_zero(u[i])) continue;
      for (std::size_t v = 0; v < dim_; ++v)
        for (std::size_t k = 0; k < dim_; ++k) m(k, v) += u[i] * p(v, i, k);
    }
    return m;
  }

  friend bool operator==(const LeviCivitaProduct& a, const LeviCivitaProduct& b) {
    return a.dim_ == b.dim_ && a.p_ == b.p_;
  }

 private:
  std::size_t dim_;
  std::vector<Rational> p_;
};

/// Levi-Civita product from the Koszul-type identity
///   2<e_i e_j, e_k> = <[e_i,e_j],e_k> - <[e_j,e_k],e_i> + <[e_k,e_i],e_j>,
/// solved pair by pair against the Gram matrix.
inline LeviCivitaProduct levi_civita(const MetricLieAlgebra& m) {
  const std::size_t n = m.dim();
  const auto& a = m.algebra();
  const auto& g = m.gram();
  // bg(i,j,k) = <[e_i,e_j], e_k>
  std::vector<Rational> bg(n * n * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Rational s(0);
        for (std::size_t l = 0; l < n; ++l) s += a.c(i, j, l) * g(l, k);
        bg[(i * n + j) * n + k] = s;
      }
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> const Rational& { return bg[(i * n + j) * n + k]; };

  std::vector<Rational> p(n * n * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector rhs(n);
      for (std::size_t k = 0; k < n; ++k) rhs[k] = (at(i, j, k) - at(j, k, i) + at(k, i, j)) / 2;
      if (is_zero(rhs)) continue;
      const Vector x = solve(g, rhs);
      for (std::size_t k = 0; k < n; ++k) p[(i * n + j) * n + k] = x[k];
    }
  return LeviCivitaProduct(n, std::move(p));
}

/// K(u,v) = L_{[u,v]} - [L_u, L_v]. The bracket is recovered as uv - vu, which is
/// exact for any torsion-free product, so the table alone determines the curvature.
inline QMatrix curvature(const LeviCivitaProduct& p, const Vector& u, const Vector& v) {
  const QMatrix lu = p.left_mult(u);
  const QMatrix lv = p.left_mult(v);
  const Vector uv = p.product(u, v) - p.product(v, u);
  return p.left_mult(uv) - (lu * lv - lv * lu);
}

struct CurvatureWitness {
  std::size_t i;
  std::size_t j;
  QMatrix k;
};

struct CurvatureVerdict {
  bool flat = true;
  std::optional<CurvatureWitness> witness;
};

/// K is bilinear and antisymmetric, so it vanishes identically iff K(e_i,e_j) = 0 for all i < j.
inline CurvatureVerdict is_flat(const LeviCivitaProduct& p) {
  const std::size_t n = p.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      QMatrix k = curvature(p, unit_vector(n, i), unit_vector(n, j));
      if (!k.is_zero()) return {false, CurvatureWitness{i, j, std::move(k)}};
    }
  return {};
}

inline CurvatureVerdict is_flat(const MetricLieAlgebra& m) { return is_flat(levi_civita(m)); }

/// S(g) = {u : ad_u + ad_u^* = 0}. The condition is linear in u, so it is the kernel
/// of the n^2 x n matrix whose l-th column is vec(ad_{e_l} + ad_{e_l}^*).
inline Subspace killing_subalgebra(const MetricLieAlgebra& m) {
  const std::size_t n = m.dim();
  const QMatrix ginv = inverse(m.gram());
  QMatrix constraints(n * n, n);
  for (std::size_t l = 0; l < n; ++l) {
    const QMatrix ad = m.algebra().ad_basis(l);
    const QMatrix skew_part = ad + ginv * ad.transpose() * m.gram();
    const Vector col = vectorize(skew_part);
    for (std::size_t r = 0; r < n * n; ++r) constraints(r, l) = col[r];
  }
  return kernel(constraints);
}

/// True iff some vector of V has negative norm, i.e. the restricted form has n_minus >= 1.
/// Works for degenerate restrictions as well.
inline bool has_timelike_vector(const MetricLieAlgebra& m, const Subspace& v) {
  if (v.is_zero()) return false;
  return signature(restrict_form(m.gram(), v)).n_minus >= 1;
}

/// Some vector of V with negative norm, if any.
inline std::optional<Vector> timelike_vector(const MetricLieAlgebra& m, const Subspace& v) {
  if (v.is_zero()) return std::nullopt;
  const auto diag = diagonalize_congruence(restrict_form(m.gram(), v));
  for (std::size_t i = 0; i < diag.diagonal.size(); ++i) {
    if (sgn(diag.diagonal[i]) >= 0) continue;
    Vector w(m.dim(), Rational(0));
    for (std::size_t r = 0; r < v.dim(); ++r) w = w + diag.transform(r, i) * v.basis()[r];
    return w;
  }
  return std::nullopt;
}

/// span{e_i e_j}.
inline Subspace product_span(const LeviCivitaProduct& p) {
  std::vector<Vector> images;
  for (std::size_t i = 0; i < p.dim(); ++i)
    for (std::size_t j = 0; j < p.dim(); ++j) images.push_back(p.product_basis(i, j));
  return Subspace::span(p.dim(), images);
}

/// {u : R_u = 0}.
inline Subspace right_null_space(const LeviCivitaProduct& p) {
  const std::size_t n = p.dim();
  QMatrix constraints(n * n, n);
  for (std::size_t l = 0; l < n; ++l) {
    const Vector col = vectorize(p.right_mult(unit_vector(n, l)));
    for (std::size_t r = 0; r < n * n; ++r) constraints(r, l) = col[r];
  }
  return kernel(constraints);
}

struct KillingTripleReport {
  Subspace killing;         // ker(u -> ad_u + ad_u^*)
  Subspace product_perp;    // (g.g)^perp
  Subspace right_null;      // ker(u -> R_u)
  bool all_equal = false;
  bool killing_abelian = false;
};

/// On a flat Riemannian or Lorentzian metric Lie algebra, S(g), (g.g)^perp and
/// {u : R_u = 0} coincide and S(g) is abelian. Each subspace is computed on its own.
inline KillingTripleReport verify_killing_triple_identity(const MetricLieAlgebra& m) {
  if (!m.is_riemannian() && !m.is_lorentzian())
    throw HypothesisNotMet("triple identity needs a Riemannian or Lorentzian metric");
  const LeviCivitaProduct p = levi_civita(m);
  if (!is_flat(p).flat) throw HypothesisNotMet("triple identity needs a flat metric");
  KillingTripleReport r{killing_subalgebra(m), orthogonal_complement(product_span(p), m.gram()),
                        right_null_space(p)};
  r.all_equal = r.killing == r.product_perp && r.killing == r.right_null;
  r.killing_abelian = m.algebra().is_abelian(r.killing);
  return r;
}

}  // namespace flatlie
