#include <random>

#include <gtest/gtest.h>

#include "flatlie/forms.hpp"
#include "flatlie/random_instances.hpp"

using namespace flatlie;

namespace {

QMatrix q(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<Vector> r;
  for (const auto& row : rows) {
    Vector v;
    for (int x : row) v.emplace_back(x);
    r.push_back(v);
  }
  return QMatrix::from_rows(r.front().size(), r);
}

Signature signature_of_diagonal(const QMatrix& d) {
  Signature s;
  for (std::size_t i = 0; i < d.rows(); ++i) {
    const int sg = sgn(d(i, i));
    (sg > 0 ? s.n_plus : sg < 0 ? s.n_minus : s.n_zero)++;
  }
  return s;
}

}  // namespace

TEST(Rational, ParsesCanonicalForms) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_EQ(to_string(parse_rational("10/4")), "5/2");
  EXPECT_EQ(to_string(parse_rational("-0/7")), "0");
}

TEST(Rational, RejectsMalformed) {
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("1.5"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
  EXPECT_THROW(parse_rational("1/"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
}

TEST(Rational, ArithmeticRoundTrips) {
  InstanceGenerator gen(7);
  for (int i = 0; i < 500; ++i) {
    const Rational a = gen.rational(1000, 997);
    const Rational b = gen.nonzero_rational(1000, 997);
    EXPECT_EQ(Rational(Rational(a + b) - b), a);
    EXPECT_EQ(Rational(Rational(a * b) / b), a);
    const Rational s = a + b;
    EXPECT_EQ(gcd(s.get_num(), s.get_den()), 1);  // lowest terms
    EXPECT_GT(sgn(s.get_den()), 0);
  }
}

TEST(Kernel, Identity) { EXPECT_TRUE(kernel(QMatrix::identity(2)).is_zero()); }

TEST(Kernel, ZeroMatrix) { EXPECT_EQ(kernel(QMatrix(3, 3)).dim(), 3u); }

TEST(Kernel, RankOneTwoByTwo) {
  const QMatrix a = q({{1, 1}, {2, 2}});
  const Subspace k = kernel(a);
  ASSERT_EQ(k.dim(), 1u);
  EXPECT_TRUE(is_zero(a * k.basis()[0]));
  EXPECT_TRUE(k.contains(Vector{1, -1}));
}

TEST(Kernel, RankNullity) {
  InstanceGenerator gen(11);
  for (int t = 0; t < 100; ++t) {
    const auto r = static_cast<std::size_t>(gen.uniform(1, 6));
    const auto c = static_cast<std::size_t>(gen.uniform(1, 6));
    const QMatrix a = gen.random_matrix(r, c, 0.5);
    const Subspace k = kernel(a);
    EXPECT_EQ(k.dim() + rank(a), c);
    for (const auto& v : k.basis()) EXPECT_TRUE(is_zero(a * v));
  }
}

TEST(Signature, Diagonal) { EXPECT_EQ(signature(q({{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}})), (Signature{2, 1, 0})); }

TEST(Signature, HyperbolicPlaneMatchesChangeOfBasisOracle) {
  const QMatrix s = q({{0, 1}, {1, 0}});
  // x = (a+b), y = (a-b) diagonalizes the form.
  const QMatrix p = q({{1, 1}, {1, -1}});
  const QMatrix d = p.transpose() * s * p;
  ASSERT_EQ(d, q({{2, 0}, {0, -2}}));
  EXPECT_EQ(signature(s), signature_of_diagonal(d));
  EXPECT_EQ(signature(s), (Signature{1, 1, 0}));
}

TEST(Signature, Zero) { EXPECT_EQ(signature(QMatrix(2, 2)), (Signature{0, 0, 2})); }

TEST(Signature, RejectsNonSymmetric) { EXPECT_THROW(signature(q({{1, 2}, {0, 1}})), NonSymmetric); }

TEST(Signature, CongruenceDiagonalizationIsExact) {
  InstanceGenerator gen(5);
  for (int t = 0; t < 50; ++t) {
    const auto n = static_cast<std::size_t>(gen.uniform(1, 6));
    QMatrix s = gen.random_matrix(n, n, 0.5);
    s = s + s.transpose();
    const auto diag = diagonalize_congruence(s);
    EXPECT_EQ(diag.transform.transpose() * s * diag.transform, QMatrix::diagonal(diag.diagonal));
    EXPECT_FALSE(is_zero(determinant(diag.transform)));
  }
}

// Sylvester's law of inertia on dims 2..6.
TEST(Signature, InvariantUnderCongruence) {
  InstanceGenerator gen(3);
  for (int t = 0; t < 100; ++t) {
    const auto n = static_cast<std::size_t>(gen.uniform(2, 6));
    const auto zeros = static_cast<std::size_t>(gen.uniform(0, 2));
    const auto minus = static_cast<std::size_t>(gen.uniform(0, static_cast<int>(n - std::min(n, zeros))));
    const std::size_t plus = n - std::min(n, zeros) - minus;
    const QMatrix s = gen.gram_with_signature(plus, minus, n - plus - minus);
    const Signature expected{plus, minus, n - plus - minus};
    ASSERT_EQ(signature(s), expected);
    const QMatrix p = gen.invertible(n, 3);
    EXPECT_EQ(signature(p.transpose() * s * p), expected);
  }
}

TEST(Adjoint, IdentityFormGivesTranspose) {
  const QMatrix m = q({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}});
  EXPECT_EQ(adjoint(m, QMatrix::identity(3)), m.transpose());
}

TEST(Adjoint, SkewOperatorIsMinusItself) {
  const QMatrix g = QMatrix::diagonal(Vector{-1, 1, 1});
  // Boost in the (0,1) plane, rotation-free: skew for Minkowski.
  const QMatrix m = q({{0, 1, 0}, {1, 0, 0}, {0, 0, 0}});
  EXPECT_EQ(adjoint(m, g), -m);
}

TEST(Adjoint, BilinearOracleOnBasisPairs) {
  InstanceGenerator gen(19);
  const QMatrix g = QMatrix::diagonal(Vector{-1, 1, 1});
  for (int t = 0; t < 20; ++t) {
    const QMatrix m = gen.random_matrix(3, 3, 0.2);
    const QMatrix ms = adjoint(m, g);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        const Vector x = unit_vector(3, i), y = unit_vector(3, j);
        EXPECT_EQ(bilinear(g, m * x, y), bilinear(g, x, ms * y));
      }
    EXPECT_EQ(adjoint(ms, g), m);  // involution
  }
}

TEST(Adjoint, DegenerateFormRejected) {
  EXPECT_THROW(adjoint(QMatrix::identity(2), q({{1, 0}, {0, 0}})), DegenerateForm);
}

TEST(Radical, NondegenerateRestriction) {
  const Subspace v = Subspace::whole(2);
  EXPECT_TRUE(radical(QMatrix::identity(2), v).is_zero());
}

TEST(Radical, ZeroRestriction) {
  const Subspace v = Subspace::span(3, {Vector{1, 0, 0}, Vector{0, 1, 0}});
  EXPECT_EQ(radical(QMatrix(2, 2), v), v);
}

TEST(Radical, PartiallyDegenerate) {
  const Subspace v = Subspace::span(2, {Vector{1, 0}, Vector{0, 1}});
  const Subspace r = radical(q({{0, 0}, {0, 1}}), v);
  EXPECT_EQ(r, Subspace::span(2, {Vector{1, 0}}));
}

TEST(Radical, QuotientIsNondegenerate) {
  InstanceGenerator gen(23);
  for (int t = 0; t < 60; ++t) {
    const auto n = static_cast<std::size_t>(gen.uniform(2, 6));
    const auto zeros = static_cast<std::size_t>(gen.uniform(0, static_cast<int>(n) - 1));
    const std::size_t minus = std::min(n / 3, n - zeros);
    const QMatrix form = gen.gram_with_signature(n - zeros - minus, minus, zeros);
    std::vector<Vector> gens;
    for (int k = 0; k < gen.uniform(1, static_cast<int>(n)); ++k) {
      Vector v(n);
      for (auto& x : v) x = gen.rational();
      gens.push_back(v);
    }
    const Subspace v = Subspace::span(n, gens);
    if (v.is_zero()) continue;
    const Subspace rad = radical_of_restriction(form, v);
    EXPECT_TRUE(v.contains(rad));
    for (const auto& r : rad.basis())
      for (const auto& x : v.basis()) EXPECT_TRUE(is_zero(bilinear(form, r, x)));
    // Extend the radical basis to a basis of v; the added part carries a nondegenerate form.
    std::vector<Vector> extension;
    Subspace acc = rad;
    for (const auto& x : v.basis()) {
      if (acc.contains(x)) continue;
      extension.push_back(x);
      acc = sum(acc, Subspace::span(n, {x}));
    }
    if (extension.empty()) continue;
    const QMatrix e = QMatrix::from_rows(n, extension);
    EXPECT_EQ(signature(e * form * e.transpose()).n_zero, 0u);
  }
}

TEST(OrthogonalComplement, WholeSpace) {
  EXPECT_TRUE(orthogonal_complement(Subspace::whole(3), QMatrix::identity(3)).is_zero());
}

TEST(OrthogonalComplement, MinkowskiLine) {
  const QMatrix g = QMatrix::diagonal(Vector{-1, 1, 1});
  EXPECT_EQ(orthogonal_complement(Subspace::span(3, {Vector{1, 0, 0}}), g),
            Subspace::span(3, {Vector{0, 1, 0}, Vector{0, 0, 1}}));
}

TEST(OrthogonalComplement, DimensionIdentity) {
  InstanceGenerator gen(29);
  for (int t = 0; t < 60; ++t) {
    const auto n = static_cast<std::size_t>(gen.uniform(2, 6));
    const QMatrix g = gen.random_gram(n);
    std::vector<Vector> gens;
    for (int k = 0; k < gen.uniform(0, static_cast<int>(n)); ++k) {
      Vector v(n);
      for (auto& x : v) x = gen.rational();
      gens.push_back(v);
    }
    const Subspace v = Subspace::span(n, gens);
    const Subspace perp = orthogonal_complement(v, g);
    EXPECT_EQ(v.dim() + perp.dim(), n);
    for (const auto& a : v.basis())
      for (const auto& b : perp.basis()) EXPECT_TRUE(is_zero(bilinear(g, a, b)));
  }
}

TEST(OrthogonalComplement, DegenerateFormRejected) {
  EXPECT_THROW(orthogonal_complement(Subspace::whole(2), q({{0, 0}, {0, 1}})), DegenerateForm);
}

TEST(Subspace, CanonicalEquality) {
  const Subspace a = Subspace::span(3, {Vector{1, 1, 0}, Vector{1, -1, 0}});
  const Subspace b = Subspace::span(3, {Vector{2, 0, 0}, Vector{0, 3, 0}, Vector{1, 1, 0}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(intersect(a, Subspace::span(3, {Vector{1, 0, 1}, Vector{0, 0, 1}})), Subspace::span(3, {Vector{1, 0, 0}}));
}
