#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "flatlie/geodesics.hpp"
#include "flatlie/metric.hpp"

namespace flatlie {

/// Structural form of a class-C algebra: an abelian codimension-one ideal U = [g,g]
/// and an element b outside U with [b, x] = x for every x in U.
struct ClassCStructure {
  Subspace ideal;
  Vector b;
  Vector transversal;  // the basis vector used to find b
  Rational alpha;      // ad_transversal restricted to U equals alpha * id
};

/// If ad_t maps U into U as a multiple of the identity, returns that multiple.
inline std::optional<Rational> scalar_action(const LieAlgebra& a, const Subspace& ideal, const Vector& t) {
  if (ideal.is_zero()) return std::nullopt;
  std::optional<Rational> alpha;
  for (std::size_t r = 0; r < ideal.dim(); ++r) {
    const auto coords = ideal.coordinates(a.bracket(t, ideal.basis()[r]));
    if (!coords) return std::nullopt;
    if (!alpha) alpha = (*coords)[r];  // read off one entry, then verify the whole matrix
    for (std::size_t c = 0; c < ideal.dim(); ++c)
      if ((*coords)[c] != (c == r ? *alpha : Rational(0))) return std::nullopt;
  }
  return alpha;
}

/// Class-C detection through the structural characterization. Absent when any
/// condition fails.
inline std::optional<ClassCStructure> detect_class_c(const LieAlgebra& a) {
  if (a.is_abelian()) throw AbelianInput();
  const std::size_t n = a.dim();
  Subspace u = a.derived_subalgebra();
  if (u.dim() + 1 != n || !a.is_abelian(u)) return std::nullopt;
  std::size_t t_index = 0;
  while (t_index < n && u.contains(unit_vector(n, t_index))) ++t_index;
  const Vector t = unit_vector(n, t_index);
  const auto alpha = scalar_action(a, u, t);
  if (!alpha || is_zero(*alpha)) return std::nullopt;
  ClassCStructure s{std::move(u), Rational(1 / *alpha) * t, t, *alpha};
  if (scalar_action(a, s.ideal, s.b) != Rational(1)) return std::nullopt;
  return s;
}

/// Samples the defining property [x,y] in span{x,y} on random rational pairs.
inline bool sampled_span_property(const LieAlgebra& a, std::mt19937_64& rng, std::size_t samples = 50) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  const std::size_t n = a.dim();
  for (std::size_t s = 0; s < samples; ++s) {
    Vector x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = Rational(num(rng), den(rng));
      y[i] = Rational(num(rng), den(rng));
      x[i].canonicalize();
      y[i].canonicalize();
    }
    if (rank(QMatrix::from_columns(n, {x, y, a.bracket(x, y)})) > 2) return false;
  }
  return true;
}

struct Theorem2Report {
  ClassCStructure structure;
  QMatrix restricted_gram;  // metric on [g,g] in its stored basis
  Subspace radical;
  bool degenerate_restriction = false;
  CurvatureVerdict curvature;

  bool flat() const noexcept { return curvature.flat; }
  bool consistent() const noexcept { return degenerate_restriction == curvature.flat; }
};

/// Flatness against degeneracy of the metric on [g,g], computed independently.
inline Theorem2Report theorem2_check(const MetricLieAlgebra& m) {
  if (m.algebra().is_abelian()) throw NotClassC();
  auto structure = detect_class_c(m.algebra());
  if (!structure) throw NotClassC();
  Theorem2Report r;
  r.structure = *structure;
  r.restricted_gram = restrict_form(m.gram(), structure->ideal);
  r.radical = radical(r.restricted_gram, r.structure.ideal);
  r.degenerate_restriction = !r.radical.is_zero();
  r.curvature = is_flat(m);
  return r;
}

/// Frame g = span{e} + B + span{d} for a flat class-C metric: e spans the radical of the
/// metric on [g,g], <d,e> = 1, <d,d> = 0, B = span{e,d}^perp, and [g,g] = span{e} + B.
struct WitnessBasis {
  Vector e;
  Vector y;
  Vector d;
  Subspace complement;  // B
  Rational alpha;       // ad_d restricted to [g,g] equals alpha * id
  QMatrix frame;        // columns e, B basis, d
  QMatrix frame_gram;   // metric in the frame
};

inline WitnessBasis construct_witness(const MetricLieAlgebra& m) {
  const Theorem2Report t2 = theorem2_check(m);
  if (!t2.degenerate_restriction) throw NotDegenerate();
  if (t2.radical.dim() != 1) throw RadicalDimensionUnsupported(t2.radical.dim());
  const std::size_t n = m.dim();

  WitnessBasis w;
  w.e = t2.radical.basis()[0];  // echelon form: first nonzero coordinate is 1
  std::size_t yi = 0;
  while (yi < n && is_zero(m.inner(unit_vector(n, yi), w.e))) ++yi;
  if (yi == n) throw InvalidWitness("no basis vector pairs nontrivially with e");
  w.y = unit_vector(n, yi);
  const Rational ye = m.inner(w.y, w.e);
  const Rational yy = m.inner(w.y, w.y);
  const Rational c_y = 1 / ye;
  const Rational c_e = -yy / (2 * ye * ye);
  w.d = c_y * w.y + c_e * w.e;
  w.complement = orthogonal_complement(Subspace::span(n, {w.e, w.d}), m.gram());

  const auto alpha = scalar_action(m.algebra(), t2.structure.ideal, w.d);
  if (!alpha || is_zero(*alpha)) throw InvalidWitness("d does not act on [g,g] as a nonzero scalar");
  w.alpha = *alpha;

  std::vector<Vector> cols{w.e};
  for (const auto& u : w.complement.basis()) cols.push_back(u);
  cols.push_back(w.d);
  w.frame = QMatrix::from_columns(n, cols);
  w.frame_gram = w.frame.transpose() * m.gram() * w.frame;

  if (m.inner(w.d, w.e) != 1) throw InvalidWitness("<d,e> != 1");
  if (!is_zero(m.inner(w.d, w.d))) throw InvalidWitness("<d,d> != 0");
  for (const auto& x : t2.structure.ideal.basis())
    if (!is_zero(m.inner(w.e, x))) throw InvalidWitness("e is not orthogonal to [g,g]");
  if (rank(w.frame) != n) throw InvalidWitness("e, B, d do not span g");
  std::vector<Vector> eb{w.e};
  for (const auto& u : w.complement.basis()) eb.push_back(u);
  if (!(Subspace::span(n, eb) == t2.structure.ideal)) throw InvalidWitness("span{e} + B differs from [g,g]");
  return w;
}

/// The metric Lie algebra rewritten in the witness frame.
inline MetricLieAlgebra witness_frame(const MetricLieAlgebra& m, const WitnessBasis& w) {
  return m.change_basis(w.frame);
}

/// In frame coordinates the only nonzero brackets are [d,e] = alpha e and [d,u] = alpha u.
inline bool witness_brackets_hold(const LieAlgebra& frame_algebra, const Rational& alpha) {
  const std::size_t n = frame_algebra.dim();
  const std::size_t d = n - 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector expected(n, Rational(0));
      if (j == d) expected[i] = -alpha;  // [e_i, d] = -alpha e_i
      if (!(frame_algebra.bracket_basis(i, j) == expected)) return false;
    }
  return true;
}

/// Product table in frame coordinates (index 0 = e, 1..m = B, m+1 = d) assembled from
///   L_e = 0, de = alpha e, dd = -alpha d, du = ue = 0, ud = -alpha u, uu' = alpha <u,u'> e.
inline LeviCivitaProduct closed_form_products(const WitnessBasis& w, const Rational& alpha) {
  const QMatrix& g = w.frame_gram;
  const std::size_t n = g.rows();
  if (n < 2) throw InvalidWitness("witness frame needs dimension at least 2");
  const std::size_t d = n - 1;
  if (!is_zero(g(0, 0)) || g(0, d) != 1 || !is_zero(g(d, d))) throw InvalidWitness("frame fails <e,e>=0, <d,e>=1, <d,d>=0");
  for (std::size_t u = 1; u < d; ++u)
    if (!is_zero(g(0, u)) || !is_zero(g(d, u))) throw InvalidWitness("B is not orthogonal to e and d");

  std::vector<Rational> p(n * n * n, Rational(0));
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Rational& { return p[(i * n + j) * n + k]; };
  at(d, 0, 0) = alpha;
  at(d, d, d) = -alpha;
  for (std::size_t u = 1; u < d; ++u) {
    at(u, d, u) = -alpha;
    for (std::size_t v = 1; v < d; ++v) at(u, v, 0) = alpha * g(u, v);
  }
  return LeviCivitaProduct(n, std::move(p));
}

enum class CompletenessVerdict { Incomplete, CriterionInapplicable };

inline std::string to_string(CompletenessVerdict v) {
  return v == CompletenessVerdict::Incomplete ? "incomplete" : "criterion_inapplicable";
}

struct BlowupDemo {
  Vector initial_velocity;  // the witness vector d
  double predicted_time = 0.0;
  GeodesicOutcome outcome = GeodesicOutcome::ReachedHorizon;
  std::optional<double> estimated_time;
};

struct IncompletenessReport {
  Rational trace_ad_b;
  bool unimodular = true;
  bool flat = false;
  CompletenessVerdict verdict = CompletenessVerdict::CriterionInapplicable;
  std::optional<BlowupDemo> demo;
};

/// Class-C algebras are never unimodular (trace ad_b = n - 1); a flat metric on one is
/// therefore geodesically incomplete. Non-flat metrics fall outside the criterion.
inline IncompletenessReport incompleteness_verdict(const MetricLieAlgebra& m, bool with_demo = false,
                                                   double rel_tol = 1e-10) {
  const Theorem2Report t2 = theorem2_check(m);
  IncompletenessReport r;
  r.trace_ad_b = m.algebra().ad(t2.structure.b).trace();
  r.unimodular = m.algebra().is_unimodular();
  r.flat = t2.flat();
  r.verdict = (r.flat && !r.unimodular) ? CompletenessVerdict::Incomplete : CompletenessVerdict::CriterionInapplicable;
  if (with_demo && r.flat && t2.radical.dim() == 1) {
    const WitnessBasis w = construct_witness(m);
    BlowupDemo demo;
    // Flip d when alpha < 0 so the ray blows up forward in time.
    const Rational scale = sgn(w.alpha) > 0 ? Rational(1) : Rational(-1);
    demo.initial_velocity = scale * w.d;
    demo.predicted_time = blowup_time_classc(w.alpha, scale);
    const auto tr = integrate(m, to_double(demo.initial_velocity), 2.0 * demo.predicted_time, rel_tol);
    demo.outcome = tr.outcome;
    demo.estimated_time = tr.blowup_time;
    r.demo = demo;
  }
  return r;
}

}  // namespace flatlie
