#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "flatlie/class_c.hpp"
#include "flatlie/document.hpp"
#include "flatlie/random_instances.hpp"
#include "flatlie/structure.hpp"

namespace flatlie {

inline std::string metric_type(const Signature& s) {
  if (s.riemannian()) return "riemannian";
  if (s.lorentzian()) return "lorentzian";
  return "pseudo_riemannian";
}

inline Json signature_json(const Signature& s) {
  return {{"n_plus", s.n_plus}, {"n_minus", s.n_minus}, {"n_zero", s.n_zero}, {"type", metric_type(s)}};
}

inline Json curvature_json(const CurvatureVerdict& v) {
  Json j{{"flat", v.flat}};
  if (v.witness) j["witness"] = {{"i", v.witness->i + 1}, {"j", v.witness->j + 1}, {"K", to_json(v.witness->k)}};
  return j;
}

inline Json split_json(const SplitAnalysis& s) {
  return {{"spans", s.spans},
          {"trivial_intersection", s.trivial_intersection},
          {"orthogonal", s.orthogonal},
          {"killing_abelian", s.killing_abelian},
          {"derived_abelian", s.derived_abelian},
          {"holds", s.holds()}};
}

inline Json theorem1_json(const Theorem1Report& r) {
  Json j{{"direct_side", r.direct_side},
         {"structural_side", r.structural_side},
         {"consistent", r.consistent()},
         {"flat", r.curvature.flat},
         {"killing_has_timelike", r.killing_has_timelike},
         {"split", split_json(r.split)},
         {"derived_dim", r.derived.dim()},
         {"even_dim_derived", r.even_dim_derived},
         {"eq2_verified", r.eq2_verified}};
  if (r.timelike_killing_vector) j["timelike_killing_vector"] = to_json(*r.timelike_killing_vector);
  return j;
}

inline Json riemannian_flat_json(const RiemannianFlatReport& r) {
  return {{"direct_side", r.direct_side},
          {"structural_side", r.structural_side},
          {"consistent", r.consistent()},
          {"split", split_json(r.split)},
          {"derived_dim", r.derived.dim()},
          {"even_dim_derived", r.even_dim_derived},
          {"eq2_verified", r.eq2_verified}};
}

inline Json rotation_json(const RotationForm& f) {
  Json planes = Json::array();
  for (const auto& p : f.planes) planes.push_back({{"u", p.u}, {"v", p.v}, {"frequencies", p.frequencies}});
  return {{"planes", planes}, {"max_residual_below_tolerance", f.max_residual < RotationForm::kTolerance},
          {"tolerance", RotationForm::kTolerance}};
}

inline Json triple_json(const KillingTripleReport& r) {
  return {{"killing", to_json(r.killing)},
          {"product_perp", to_json(r.product_perp)},
          {"right_null", to_json(r.right_null)},
          {"all_equal", r.all_equal},
          {"killing_abelian", r.killing_abelian}};
}

inline Json corollary2_json(const Corollary2Report& r) {
  Json j{{"timelike_killing", r.timelike_killing},
         {"riemannian_same_connection", to_string(r.companion)},
         {"consistent", r.consistent()},
         {"certificate", r.certificate}};
  if (r.companion_gram) j["companion_gram"] = to_json(*r.companion_gram);
  return j;
}

inline Json theorem2_json(const Theorem2Report& r) {
  return {{"restricted_gram", to_json(r.restricted_gram)},
          {"radical", to_json(r.radical)},
          {"degenerate_restriction", r.degenerate_restriction},
          {"flat", r.flat()},
          {"consistent", r.consistent()}};
}

inline Json witness_json(const WitnessBasis& w) {
  return {{"e", to_json(w.e)},       {"y", to_json(w.y)},
          {"d", to_json(w.d)},       {"B", to_json(w.complement)},
          {"alpha", to_json(w.alpha)}, {"frame_gram", to_json(w.frame_gram)}};
}

/// Witness frame plus its two independent checks against the Levi-Civita computation.
inline Json witness_section(const MetricLieAlgebra& m) {
  try {
    const WitnessBasis w = construct_witness(m);
    Json j = witness_json(w);
    const MetricLieAlgebra frame = witness_frame(m, w);
    const LeviCivitaProduct table = closed_form_products(w, w.alpha);
    j["brackets_in_frame_hold"] = witness_brackets_hold(frame.algebra(), w.alpha);
    j["closed_form_matches_levi_civita"] = table == levi_civita(frame);
    j["closed_form_flat"] = is_flat(table).flat;
    return j;
  } catch (const RadicalDimensionUnsupported& e) {
    return {{"unsupported", e.what()}};
  }
}

inline Json incompleteness_json(const IncompletenessReport& r) {
  Json j{{"trace_ad_b", to_json(r.trace_ad_b)},
         {"unimodular", r.unimodular},
         {"flat", r.flat},
         {"verdict", to_string(r.verdict)}};
  if (r.demo) {
    Json d{{"initial_velocity", to_json(r.demo->initial_velocity)},
           {"predicted_blowup_time", r.demo->predicted_time},
           {"outcome", to_string(r.demo->outcome)}};
    if (r.demo->estimated_time) d["estimated_blowup_time"] = *r.demo->estimated_time;
    j["blowup_demo"] = d;
  }
  return j;
}

inline Json class_c_section(const MetricLieAlgebra& m, std::uint64_t seed) {
  const LieAlgebra& a = m.algebra();
  if (a.is_abelian()) return {{"detected", false}, {"reason", "abelian"}};
  const auto s = detect_class_c(a);
  if (!s) return {{"detected", false}};
  std::mt19937_64 rng(seed);
  Json j{{"detected", true},
         {"ideal", to_json(s->ideal)},
         {"b", to_json(s->b)},
         {"span_property_sampled", sampled_span_property(a, rng)}};
  const Theorem2Report t2 = theorem2_check(m);
  j["theorem2"] = theorem2_json(t2);
  if (t2.flat() && t2.degenerate_restriction) j["witness"] = witness_section(m);
  j["incompleteness"] = incompleteness_json(incompleteness_verdict(m, true));
  return j;
}

/// Seeded equivalence sweeps over random instances.
inline Json sweep_section(std::uint64_t seed, std::size_t count) {
  InstanceGenerator gen(seed);
  std::size_t t1_disc = 0, t1_pos = 0, t2_disc = 0, t2_flat = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const auto n = static_cast<std::size_t>(gen.uniform(2, 5));
    const auto t1 = theorem1_check(gen.random_lorentzian(n));
    if (!t1.consistent()) ++t1_disc;
    if (t1.direct_side) ++t1_pos;
    const auto t2 = theorem2_check(gen.random_class_c(static_cast<std::size_t>(gen.uniform(2, 6)), i % 2 == 0));
    if (!t2.consistent()) ++t2_disc;
    if (t2.flat()) ++t2_flat;
  }
  return {{"seed", seed},
          {"instances", count},
          {"theorem1_discrepancies", t1_disc},
          {"theorem1_positive", t1_pos},
          {"theorem2_discrepancies", t2_disc},
          {"theorem2_flat", t2_flat}};
}

/// Full analysis. Everything in the report is a deterministic function of the input and the seed.
inline Json analyze(const MetricLieAlgebra& m, std::uint64_t seed, std::size_t sweep = 0) {
  const LieAlgebra& a = m.algebra();
  Json r;
  r["input"] = to_document(m);
  r["validation"] = {{"antisymmetric", true}, {"jacobi", true}, {"metric_nondegenerate", true}};
  r["signature"] = signature_json(m.sig());
  r["algebra"] = {{"abelian", a.is_abelian()},
                  {"unimodular", a.is_unimodular()},
                  {"two_solvable", a.is_2_solvable()},
                  {"derived", to_json(a.derived_subalgebra())},
                  {"center", to_json(a.center())}};
  const LeviCivitaProduct p = levi_civita(m);
  const CurvatureVerdict flat = is_flat(p);
  r["flatness"] = curvature_json(flat);
  const Subspace s = killing_subalgebra(m);
  r["killing_subalgebra"] = {{"dim", s.dim()}, {"basis", to_json(s)}, {"has_timelike", has_timelike_vector(m, s)},
                             {"abelian", a.is_abelian(s)}};

  if (m.is_lorentzian()) {
    const Theorem1Report t1 = theorem1_check(m);
    r["theorem1"] = theorem1_json(t1);
    if (t1.direct_side) {
      const Corollary1Report c1 = corollary1_check(m);
      r["corollary1"] = {{"two_solvable", c1.two_solvable}, {"unimodular", c1.unimodular}, {"complete", c1.complete}};
      r["companion"] = {{"gram", to_json(riemannian_companion(m).gram())}, {"same_connection", true}};
    }
    if (t1.split_data && !t1.derived.is_zero() &&
        signature(restrict_form(m.gram(), t1.derived)) == Signature{t1.derived.dim(), 0, 0})
      r["rotation_form"] = rotation_json(rotation_form(m, *t1.split_data));
    if (flat.flat) r["corollary2"] = corollary2_json(corollary2_forward_check(m));
  }
  if (m.is_riemannian()) {
    const RiemannianFlatReport rf = riemannian_flat_check(m);
    r["riemannian_flat"] = riemannian_flat_json(rf);
    if (rf.structural_side && !rf.derived.is_zero() && rf.derived.dim() % 2 == 0)
      r["rotation_form"] = rotation_json(rotation_form(m, canonical_split(m)));
  }
  if (flat.flat && (m.is_lorentzian() || m.is_riemannian()))
    r["killing_triple_identity"] = triple_json(verify_killing_triple_identity(m));
  r["class_c"] = class_c_section(m, seed);
  if (sweep > 0) r["sweep"] = sweep_section(seed, sweep);
  return r;
}

}  // namespace flatlie
