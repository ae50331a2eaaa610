#include <gtest/gtest.h>

#include "flatlie/random_instances.hpp"

using namespace flatlie;

namespace {

LieAlgebra affine2() { return LieAlgebra::from_brackets(2, {{0, 1, Vector{0, 1}}}); }
LieAlgebra heisenberg() { return LieAlgebra::from_brackets(3, {{0, 1, Vector{0, 0, 1}}}); }

// Independent Jacobi oracle: evaluates the cyclic sum directly from the raw bracket table.
Vector jacobi_oracle(const std::vector<std::vector<Vector>>& table, std::size_t i, std::size_t j, std::size_t k) {
  const std::size_t n = table.size();
  auto br = [&](const Vector& x, const Vector& y) {
    Vector r(n, Rational(0));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) r[c] += x[a] * y[b] * table[a][b][c];
    return r;
  };
  const Vector ei = unit_vector(n, i), ej = unit_vector(n, j), ek = unit_vector(n, k);
  return br(ei, br(ej, ek)) + br(ej, br(ek, ei)) + br(ek, br(ei, ej));
}

}  // namespace

TEST(Validate, AbelianIsValid) { EXPECT_TRUE(LieAlgebra::abelian(4).is_abelian()); }

TEST(Validate, Affine2IsValid) { EXPECT_NO_THROW(affine2()); }

TEST(Validate, Dim3ExampleAgreesWithBruteForce) {
  // [e1,e2] = e3, [e1,e3] = e2, [e2,e3] = 0
  std::vector<std::vector<Vector>> table(3, std::vector<Vector>(3, Vector(3, Rational(0))));
  table[0][1] = Vector{0, 0, 1};
  table[1][0] = Vector{0, 0, -1};
  table[0][2] = Vector{0, 1, 0};
  table[2][0] = Vector{0, -1, 0};
  const bool oracle_valid = is_zero(jacobi_oracle(table, 0, 1, 2));
  EXPECT_TRUE(oracle_valid);
  const auto build = [] {
    return LieAlgebra::from_brackets(3, {{0, 1, Vector{0, 0, 1}}, {0, 2, Vector{0, 1, 0}}});
  };
  if (oracle_valid)
    EXPECT_NO_THROW(build());
  else
    EXPECT_THROW(build(), JacobiViolation);
}

TEST(Validate, JacobiViolationReportsTriple) {
  // [e1,e2] = e2, [e2,e3] = e3: residual -e3 on (1,2,3).
  std::vector<std::vector<Vector>> table(3, std::vector<Vector>(3, Vector(3, Rational(0))));
  table[0][1] = Vector{0, 1, 0};
  table[1][0] = Vector{0, -1, 0};
  table[1][2] = Vector{0, 0, 1};
  table[2][1] = Vector{0, 0, -1};
  const Vector residual = jacobi_oracle(table, 0, 1, 2);
  ASSERT_EQ(residual, (Vector{0, 0, -1}));
  try {
    LieAlgebra::from_brackets(3, {{0, 1, Vector{0, 1, 0}}, {1, 2, Vector{0, 0, 1}}});
    FAIL() << "expected JacobiViolation";
  } catch (const JacobiViolation& e) {
    EXPECT_EQ(e.i, 0u);
    EXPECT_EQ(e.j, 1u);
    EXPECT_EQ(e.k, 2u);
    EXPECT_EQ(e.residual, to_string(residual));
  }
}

TEST(Validate, AntisymmetryViolation) {
  std::vector<Rational> c(8, Rational(0));
  c[(0 * 2 + 1) * 2 + 1] = 1;  // [e1,e2] = e2 but [e2,e1] = 0
  EXPECT_THROW(LieAlgebra::validate(2, c), AntisymmetryViolation);
}

TEST(Validate, RejectsLowerTriangleInput) {
  EXPECT_THROW(LieAlgebra::from_brackets(2, {{1, 0, Vector{0, 1}}}), DimensionMismatch);
}

TEST(Ad, AbelianIsZero) { EXPECT_TRUE(LieAlgebra::abelian(3).ad(Vector{1, 2, 3}).is_zero()); }

TEST(Ad, Affine2) {
  const QMatrix ad1 = affine2().ad_basis(0);
  EXPECT_EQ(ad1 * (Vector{1, 0}), (Vector{0, 0}));
  EXPECT_EQ(ad1 * (Vector{0, 1}), (Vector{0, 1}));
}

TEST(Ad, AntisymmetryAndSelfBracket) {
  InstanceGenerator gen(2);
  for (int t = 0; t < 50; ++t) {
    const auto n = static_cast<std::size_t>(gen.uniform(2, 5));
    const LieAlgebra a = gen.scramble(gen.random_algebra(n), QMatrix::identity(n)).algebra();
    Vector x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = gen.rational();
      y[i] = gen.rational();
    }
    EXPECT_TRUE(is_zero(a.ad(x) * x));
    EXPECT_EQ(a.ad(x) * y, Rational(-1) * (a.ad(y) * x));
  }
}

TEST(Derived, Examples) {
  EXPECT_TRUE(LieAlgebra::abelian(3).derived_subalgebra().is_zero());
  EXPECT_EQ(affine2().derived_subalgebra(), Subspace::span(2, {Vector{0, 1}}));
  const LieAlgebra c4 = semidirect({QMatrix::identity(3)}, 3);
  EXPECT_EQ(c4.derived_subalgebra().dim(), 3u);  // codimension one
}

TEST(Derived, IsAnIdeal) {
  InstanceGenerator gen(4);
  for (int t = 0; t < 40; ++t) {
    const auto n = static_cast<std::size_t>(gen.uniform(2, 5));
    const LieAlgebra a = gen.scramble(gen.random_algebra(n), QMatrix::identity(n)).algebra();
    const Subspace d = a.derived_subalgebra();
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& v : d.basis()) EXPECT_TRUE(d.contains(a.bracket(unit_vector(n, i), v)));
  }
}

TEST(Center, Examples) {
  EXPECT_EQ(LieAlgebra::abelian(2).center().dim(), 2u);
  EXPECT_TRUE(affine2().center().is_zero());
  EXPECT_EQ(heisenberg().center(), Subspace::span(3, {Vector{0, 0, 1}}));
}

TEST(Unimodular, Examples) {
  EXPECT_TRUE(LieAlgebra::abelian(3).is_unimodular());
  EXPECT_FALSE(affine2().is_unimodular());
  EXPECT_EQ(affine2().ad_basis(0).trace(), Rational(1));
  EXPECT_TRUE(heisenberg().is_unimodular());
}

TEST(TwoSolvable, Examples) {
  EXPECT_TRUE(LieAlgebra::abelian(2).is_2_solvable());
  EXPECT_TRUE(heisenberg().is_2_solvable());
  const LieAlgebra so3 =
      LieAlgebra::from_brackets(3, {{0, 1, Vector{0, 0, 1}}, {1, 2, Vector{1, 0, 0}}, {0, 2, Vector{0, -1, 0}}});
  EXPECT_FALSE(so3.is_2_solvable());
}

TEST(IsAbelian, Subspaces) {
  EXPECT_TRUE(LieAlgebra::abelian(3).is_abelian(Subspace::whole(3)));
  EXPECT_FALSE(affine2().is_abelian(Subspace::whole(2)));
}

TEST(ChangeBasis, IdentityAndPermutation) {
  const LieAlgebra h = heisenberg();
  EXPECT_EQ(h.change_basis(QMatrix::identity(3)), h);
  // New basis (e3, e1, e2): [f2, f3] = [e1, e2] = e3 = f1.
  QMatrix p(3, 3);
  p(2, 0) = 1;
  p(0, 1) = 1;
  p(1, 2) = 1;
  const LieAlgebra hp = h.change_basis(p);
  EXPECT_EQ(hp.bracket_basis(1, 2), (Vector{1, 0, 0}));
  EXPECT_TRUE(is_zero(hp.bracket_basis(0, 1)));
  EXPECT_TRUE(is_zero(hp.bracket_basis(0, 2)));
  EXPECT_EQ(hp.change_basis(inverse(p)), h);
}

TEST(ChangeBasis, SingularRejected) { EXPECT_THROW(heisenberg().change_basis(QMatrix(3, 3)), SingularMatrix); }

TEST(ChangeBasis, PreservesInvariants) {
  InstanceGenerator gen(6);
  for (int t = 0; t < 60; ++t) {
    const auto n = static_cast<std::size_t>(gen.uniform(2, 5));
    const LieAlgebra a = gen.random_algebra(n);
    const QMatrix p = gen.invertible(n, 3);
    const LieAlgebra b = a.change_basis(p);
    EXPECT_EQ(a.is_abelian(), b.is_abelian());
    EXPECT_EQ(a.is_unimodular(), b.is_unimodular());
    EXPECT_EQ(a.is_2_solvable(), b.is_2_solvable());
    EXPECT_EQ(a.derived_subalgebra().dim(), b.derived_subalgebra().dim());
    EXPECT_EQ(a.center().dim(), b.center().dim());
    EXPECT_EQ(b.change_basis(inverse(p)), a);
  }
}
