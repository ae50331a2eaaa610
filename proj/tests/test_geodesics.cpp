#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "flatlie/flatlie.hpp"

using namespace flatlie;

namespace {

MetricLieAlgebra example(const std::string& name) { return catalog_entry(name).metric; }

// [d,e] = alpha e with <d,e> = 1 in basis (d, e).
MetricLieAlgebra classc2(const Rational& alpha) {
  return MetricLieAlgebra(LieAlgebra::from_brackets(2, {{0, 1, Vector{0, alpha}}}), QMatrix{{0, 1}, {1, 0}});
}

double energy_bound(const MetricLieAlgebra& m, const std::vector<double>& v0) {
  double e = 0;
  for (std::size_t i = 0; i < v0.size(); ++i)
    for (std::size_t j = 0; j < v0.size(); ++j) e += v0[i] * to_double(m.gram()(i, j)) * v0[j];
  return 1e-6 * (1 + std::abs(e));
}

}  // namespace

TEST(Rhs, AbelianIsZero) {
  const FloatProduct p(levi_civita(example("abelian_minkowski")));
  for (const auto& v : {std::vector<double>{1, 2, 3}, std::vector<double>{-0.5, 0, 7}})
    for (double x : euler_arnold_rhs(p, v)) EXPECT_EQ(x, 0.0);
}

TEST(Rhs, ClassCWitnessDirection) {
  // v = d: -dd = alpha d
  const FloatProduct p(levi_civita(classc2(2)));
  const auto r = euler_arnold_rhs(p, {1, 0});
  EXPECT_DOUBLE_EQ(r[0], 2.0);
  EXPECT_DOUBLE_EQ(r[1], 0.0);
}

TEST(Rhs, SplitAlgebraIsMinusBracket) {
  // v = s + h: -v.v = -[s,h]
  const MetricLieAlgebra m = example("rot3");
  const FloatProduct p(levi_civita(m));
  const Vector v{1, 2, -3};
  const auto r = euler_arnold_rhs(p, to_double(v));
  const Vector expected = Rational(-1) * m.algebra().bracket(Vector{1, 0, 0}, Vector{0, 2, -3});
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(r[i], to_double(expected[i]), 1e-15);
}

TEST(Integrate, ClassC2UnitBlowUp) {
  const auto tr = integrate(example("classc2_flat"), {1, 0}, 2.0, 1e-10);
  EXPECT_EQ(tr.outcome, GeodesicOutcome::BlowUpDetected);
  ASSERT_TRUE(tr.blowup_time.has_value());
  EXPECT_LE(std::abs(*tr.blowup_time - 1.0), 1e-3);
}

TEST(Integrate, BlowUpTimesAcrossAlpha) {
  for (const Rational& alpha : {Rational(1, 2), Rational(1), Rational(2), Rational(5)}) {
    const MetricLieAlgebra m = classc2(alpha);
    const auto w = construct_witness(m);
    const double predicted = blowup_time_classc(w.alpha, 1);
    // Riccati oracle: f' = alpha f^2, f(0) = 1 blows up at 1/alpha.
    EXPECT_NEAR(predicted, 1.0 / to_double(w.alpha), 1e-15);
    const auto tr = integrate(m, to_double(w.d), 2 * predicted, 1e-10);
    ASSERT_EQ(tr.outcome, GeodesicOutcome::BlowUpDetected) << to_string(alpha);
    EXPECT_LE(std::abs(*tr.blowup_time - predicted), 1e-3 * predicted) << to_string(alpha);
  }
}

TEST(Integrate, OppositeRayStaysBounded) {
  const auto tr = integrate(example("classc2_flat"), {-1, 0}, 50.0, 1e-10);
  EXPECT_EQ(tr.outcome, GeodesicOutcome::ReachedHorizon);
  EXPECT_LE(tr.max_speed(), 1.0 + 1e-9);
}

TEST(Integrate, Rot3ReachesHorizon) {
  const MetricLieAlgebra m = example("rot3");
  const std::vector<double> v0{1, 1, 0};
  const auto tr = integrate(m, v0, 100.0, 1e-10);
  EXPECT_EQ(tr.outcome, GeodesicOutcome::ReachedHorizon);
  EXPECT_DOUBLE_EQ(tr.final_time(), 100.0);
  EXPECT_LE(tr.energy_drift(), energy_bound(m, v0));
  // s-component constant, h-component rotates at unit speed: h(t) = (cos t, -sin t).
  const auto& last = tr.samples.back();
  EXPECT_NEAR(last.v[0], 1.0, 1e-6);
  EXPECT_NEAR(last.v[1], std::cos(100.0), 1e-6);
  EXPECT_NEAR(last.v[2], -std::sin(100.0), 1e-6);
}

TEST(Integrate, AbelianConstantVelocity) {
  const auto tr = integrate(example("abelian_minkowski"), {0.3, -1, 2}, 10.0, 1e-10);
  EXPECT_EQ(tr.outcome, GeodesicOutcome::ReachedHorizon);
  for (const auto& s : tr.samples) {
    EXPECT_DOUBLE_EQ(s.v[0], 0.3);
    EXPECT_DOUBLE_EQ(s.v[1], -1.0);
    EXPECT_DOUBLE_EQ(s.v[2], 2.0);
  }
}

TEST(Integrate, EnergyConservedOnBoundedTrajectories) {
  InstanceGenerator gen(401);
  for (int t = 0; t < 20; ++t) {
    const MetricLieAlgebra m = gen.lorentzian_split_instance(static_cast<std::size_t>(gen.uniform(2, 5)));
    std::vector<double> v0(m.dim());
    for (auto& x : v0) x = gen.uniform(-3, 3) / 2.0;
    const auto tr = integrate(m, v0, 10.0, 1e-10);
    if (tr.outcome != GeodesicOutcome::ReachedHorizon) continue;
    EXPECT_LE(tr.energy_drift(), energy_bound(m, v0));
  }
}

TEST(Integrate, HalvingToleranceKeepsOutcomes) {
  struct Case {
    const char* name;
    std::vector<double> v0;
  };
  const std::vector<Case> cases{{"abelian_minkowski", {1, 1, 1}}, {"rot3", {1, 1, 0}},
                                {"rot5", {1, 1, 0, 1, 0}},       {"boost3", {1, 0.5, 0}},
                                {"classc2_flat", {1, 0}},        {"classc2_flat", {-1, 0}},
                                {"classc3_flat", {1, 0, 0}},     {"heisenberg_lorentz_null", {1, 0, 0}}};
  for (const auto& c : cases) {
    const MetricLieAlgebra m = example(c.name);
    const auto a = integrate(m, c.v0, 5.0, 1e-8);
    const auto b = integrate(m, c.v0, 5.0, 5e-9);
    EXPECT_EQ(a.outcome, b.outcome) << c.name;
  }
}

TEST(Integrate, InvalidArguments) {
  const MetricLieAlgebra m = example("rot3");
  EXPECT_THROW(integrate(m, {1, 0, 0}, 1.0, 0.0), InvalidTolerance);
  EXPECT_THROW(integrate(m, {1, 0, 0}, 1.0, 0.5), InvalidTolerance);
  EXPECT_THROW(integrate(m, {1, 0, 0}, 0.0, 1e-8), InvalidTolerance);
  EXPECT_THROW(integrate(m, {1, 0}, 1.0, 1e-8), DimensionMismatch);
}

TEST(BlowupTime, ClosedForm) {
  EXPECT_DOUBLE_EQ(blowup_time_classc(1, 1), 1.0);
  EXPECT_DOUBLE_EQ(blowup_time_classc(2, 1), 0.5);
  EXPECT_DOUBLE_EQ(blowup_time_classc(Rational(1, 2), 3), 2.0 / 3.0);
  EXPECT_THROW(blowup_time_classc(1, -1), NonPositiveProduct);
  EXPECT_THROW(blowup_time_classc(0, 1), NonPositiveProduct);
}

TEST(Csv, Columns) {
  const auto tr = integrate(example("rot3"), {1, 1, 0}, 0.1, 1e-8);
  std::ostringstream os;
  write_csv(os, tr);
  std::istringstream in(os.str());
  std::string header, row;
  std::getline(in, header);
  EXPECT_EQ(header, "t,v_1,v_2,v_3,norm");
  std::size_t rows = 0;
  while (std::getline(in, row)) {
    EXPECT_EQ(std::count(row.begin(), row.end(), ','), 4);
    ++rows;
  }
  EXPECT_EQ(rows, tr.samples.size());
}
