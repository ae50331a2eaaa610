#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "flatlie/metric.hpp"

namespace flatlie {

/// Abelian algebra span{s_1..s_k} acting on an abelian ideal V by the given commuting
/// matrices: [s_a, v] = actions[a] v. Basis order is s_1..s_k followed by V.
inline LieAlgebra semidirect(const std::vector<QMatrix>& actions, std::size_t ideal_dim) {
  const std::size_t k = actions.size();
  const std::size_t n = k + ideal_dim;
  std::vector<Bracket> brackets;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t v = 0; v < ideal_dim; ++v) {
      Vector c(n, Rational(0));
      for (std::size_t r = 0; r < ideal_dim; ++r) c[k + r] = actions[a](r, v);
      if (!is_zero(c)) brackets.push_back({a, k + v, std::move(c)});
    }
  return LieAlgebra::from_brackets(n, brackets);
}

inline LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const std::size_t n = a.dim() + b.dim();
  std::vector<Bracket> brackets;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      Vector c(n, Rational(0));
      for (std::size_t k = 0; k < a.dim(); ++k) c[k] = a.c(i, j, k);
      if (!is_zero(c)) brackets.push_back({i, j, std::move(c)});
    }
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = i + 1; j < b.dim(); ++j) {
      Vector c(n, Rational(0));
      for (std::size_t k = 0; k < b.dim(); ++k) c[a.dim() + k] = b.c(i, j, k);
      if (!is_zero(c)) brackets.push_back({a.dim() + i, a.dim() + j, std::move(c)});
    }
  return LieAlgebra::from_brackets(n, brackets);
}

inline QMatrix block_diagonal(const QMatrix& a, const QMatrix& b) {
  QMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

/// Seeded generator of random metric Lie algebras. Constructions start from a
/// structured frame and are then rewritten in a random rational basis.
class InstanceGenerator {
 public:
  explicit InstanceGenerator(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational rational(int max_num = 4, int max_den = 3) {
    Rational q(uniform(-max_num, max_num), uniform(1, max_den));
    q.canonicalize();
    return q;
  }

  Rational nonzero_rational(int max_num = 4, int max_den = 3) {
    Rational q = rational(max_num, max_den);
    while (is_zero(q)) q = rational(max_num, max_den);
    return q;
  }

  Rational positive_rational(int max_num = 4, int max_den = 3) {
    Rational q(uniform(1, max_num), uniform(1, max_den));
    q.canonicalize();
    return q;
  }

  /// Integer matrix with small entries, resampled until invertible.
  QMatrix invertible(std::size_t n, int range = 2) {
    while (true) {
      QMatrix p(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) p(i, j) = uniform(-range, range);
      if (!is_zero(determinant(p))) return p;
    }
  }

  /// P^T diag(signs * magnitudes) P with a random invertible P.
  QMatrix gram_with_signature(std::size_t n_plus, std::size_t n_minus, std::size_t n_zero = 0) {
    Vector d;
    for (std::size_t i = 0; i < n_plus; ++i) d.push_back(positive_rational());
    for (std::size_t i = 0; i < n_minus; ++i) d.push_back(-positive_rational());
    for (std::size_t i = 0; i < n_zero; ++i) d.emplace_back(0);
    std::shuffle(d.begin(), d.end(), rng_);
    const QMatrix p = invertible(d.size());
    return p.transpose() * QMatrix::diagonal(d) * p;
  }

  QMatrix random_gram(std::size_t n) {
    const std::size_t minus = static_cast<std::size_t>(uniform(0, static_cast<int>(n)));
    return gram_with_signature(n - minus, minus);
  }

  QMatrix lorentzian_gram(std::size_t n) { return gram_with_signature(n - 1, 1); }

  QMatrix random_matrix(std::size_t r, std::size_t c, double zero_prob = 0.3) {
    QMatrix m(r, c);
    std::bernoulli_distribution zero(zero_prob);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (!zero(rng_)) m(i, j) = rational(3, 2);
    return m;
  }

  /// Rewrites an algebra with metric in a random basis.
  MetricLieAlgebra scramble(const LieAlgebra& a, const QMatrix& gram) {
    const QMatrix p = invertible(a.dim());
    return MetricLieAlgebra(a, gram).change_basis(p);
  }

  /// Abelian S of dimension k acting on planes by rotations or boosts with random
  /// rational frequencies; ad_s is skew for the returned block metric whatever the
  /// signature chosen on S. boost_planes of the planes carry a Lorentzian metric.
  std::pair<LieAlgebra, QMatrix> rotation_frame(std::size_t k, std::size_t planes, std::size_t boost_planes,
                                                 const QMatrix& s_gram) {
    const std::size_t m = 2 * planes;
    std::vector<QMatrix> actions(k, QMatrix(m, m));
    QMatrix plane_gram(m, m);
    for (std::size_t i = 0; i < planes; ++i) {
      const bool boost = i < boost_planes;
      const Rational c = positive_rational();
      plane_gram(2 * i, 2 * i) = boost ? Rational(-c) : c;
      plane_gram(2 * i + 1, 2 * i + 1) = c;
      bool any = false;
      for (std::size_t a = 0; a < k; ++a) {
        Rational lam = rational(3, 2);
        if (a + 1 == k && !any && is_zero(lam)) lam = 1;
        any = any || !is_zero(lam);
        actions[a](2 * i + 1, 2 * i) = lam;                   // x -> lam y
        actions[a](2 * i, 2 * i + 1) = boost ? lam : Rational(-lam);  // y -> -+lam x
      }
    }
    return {semidirect(actions, m), block_diagonal(s_gram, plane_gram)};
  }

  /// Lorentzian instance that satisfies the orthogonal-split characterization.
  MetricLieAlgebra lorentzian_split_instance(std::size_t n) {
    const std::size_t planes = static_cast<std::size_t>(uniform(0, static_cast<int>((n - 1) / 2)));
    const std::size_t k = n - 2 * planes;
    const auto [a, g] = rotation_frame(k, planes, 0, lorentzian_gram(k));
    return scramble(a, g);
  }

  /// Flat Lorentzian instance whose Lorentzian direction lies in a boosted plane.
  MetricLieAlgebra lorentzian_boost_instance(std::size_t n) {
    const std::size_t planes = std::max<std::size_t>(1, static_cast<std::size_t>(uniform(1, static_cast<int>((n - 1) / 2))));
    const std::size_t k = n - 2 * planes;
    const auto [a, g] = rotation_frame(k, planes, 1, gram_with_signature(k, 0));
    return scramble(a, g);
  }

  /// Random Lie algebra from a mixture of families (no metric).
  LieAlgebra random_algebra(std::size_t n) {
    switch (uniform(0, n >= 3 ? 4 : 2)) {
      case 0:
        return LieAlgebra::abelian(n);
      case 1:
        return semidirect({random_matrix(n - 1, n - 1)}, n - 1);
      case 2: {
        QMatrix a = QMatrix::identity(n - 1);
        a *= nonzero_rational();
        return semidirect({a}, n - 1);
      }
      case 3: {
        const auto heis = LieAlgebra::from_brackets(3, {{0, 1, Vector{0, 0, 1}}});
        return n == 3 ? heis : direct_sum(heis, LieAlgebra::abelian(n - 3));
      }
      default: {
        // so(3) or sl(2), plus an abelian factor
        const bool compact = uniform(0, 1) == 0;
        const auto s = LieAlgebra::from_brackets(
            3, {{0, 1, Vector{0, 0, 1}}, {1, 2, Vector{1, 0, 0}}, {0, 2, Vector{0, compact ? -1 : 1, 0}}});
        return n == 3 ? s : direct_sum(s, LieAlgebra::abelian(n - 3));
      }
    }
  }

  /// Mixed population: arbitrary algebras with arbitrary nondegenerate metrics, plus
  /// split-type flat instances of several signatures.
  MetricLieAlgebra random_metric_algebra(std::size_t n) {
    switch (uniform(0, 3)) {
      case 0:
        return lorentzian_split_instance(n);
      case 1: {
        const std::size_t planes = static_cast<std::size_t>(uniform(0, static_cast<int>((n - 1) / 2)));
        const std::size_t k = n - 2 * planes;
        const std::size_t minus = static_cast<std::size_t>(uniform(0, static_cast<int>(k)));
        const auto [a, g] = rotation_frame(k, planes, 0, gram_with_signature(k - minus, minus));
        return scramble(a, g);
      }
      default:
        return scramble(random_algebra(n), random_gram(n));
    }
  }

  /// Lorentzian population: split instances, boosted instances, perturbations of those,
  /// and arbitrary algebras with random Lorentzian metrics.
  MetricLieAlgebra random_lorentzian(std::size_t n) {
    switch (uniform(0, 4)) {
      case 0:
        return lorentzian_split_instance(n);
      case 1:
        if (n >= 3) return lorentzian_boost_instance(n);
        return lorentzian_split_instance(n);
      case 2: {
        const MetricLieAlgebra base = lorentzian_split_instance(n);
        while (true) {
          QMatrix g = base.gram();
          const std::size_t i = static_cast<std::size_t>(uniform(0, static_cast<int>(n) - 1));
          const std::size_t j = static_cast<std::size_t>(uniform(0, static_cast<int>(n) - 1));
          const Rational eps(1, uniform(2, 9));
          g(i, j) += eps;
          if (i != j) g(j, i) += eps;
          if (signature(g).lorentzian()) return base.with_gram(g);
        }
      }
      default:
        return scramble(random_algebra(n), lorentzian_gram(n));
    }
  }

  /// Class-C algebra [b, x] = alpha x on U with a metric whose restriction to U is
  /// degenerate or not, as requested; rewritten in a random basis.
  MetricLieAlgebra random_class_c(std::size_t n, bool degenerate) {
    QMatrix act = QMatrix::identity(n - 1);
    act *= nonzero_rational();
    const LieAlgebra a = semidirect({act}, n - 1);
    while (true) {
      Vector d;
      for (std::size_t i = 0; i + 1 < n; ++i) d.push_back(nonzero_rational());
      if (degenerate) d[static_cast<std::size_t>(uniform(0, static_cast<int>(n) - 2))] = 0;
      const QMatrix r = invertible(n - 1);
      const QMatrix guu = r.transpose() * QMatrix::diagonal(d) * r;
      QMatrix g(n, n);
      g(0, 0) = rational();
      for (std::size_t i = 1; i < n; ++i) {
        g(0, i) = g(i, 0) = rational();
        for (std::size_t j = 1; j < n; ++j) g(i, j) = guu(i - 1, j - 1);
      }
      if (is_zero(determinant(g))) continue;
      return scramble(a, g);
    }
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace flatlie
