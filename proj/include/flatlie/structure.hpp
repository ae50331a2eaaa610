#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "flatlie/metric.hpp"

namespace flatlie {

/// Candidate decomposition g = S(g) + [g,g].
struct Split {
  Subspace killing;
  Subspace derived;
};

/// Each structural condition of the orthogonal-split characterization, evaluated separately.
struct SplitAnalysis {
  bool spans = false;             // S(g) + [g,g] = g
  bool trivial_intersection = false;
  bool orthogonal = false;        // <S(g), [g,g]> = 0
  bool killing_abelian = false;
  bool derived_abelian = false;

  bool holds() const noexcept {
    return spans && trivial_intersection && orthogonal && killing_abelian && derived_abelian;
  }
};

inline bool mutually_orthogonal(const QMatrix& gram, const Subspace& a, const Subspace& b) {
  if (a.is_zero() || b.is_zero()) return true;
  return (a.basis_matrix() * gram * b.basis_matrix().transpose()).is_zero();
}

inline SplitAnalysis analyze_split(const MetricLieAlgebra& m, const Split& s) {
  SplitAnalysis r;
  r.spans = sum(s.killing, s.derived).dim() == m.dim();
  r.trivial_intersection = intersect(s.killing, s.derived).is_zero();
  r.orthogonal = mutually_orthogonal(m.gram(), s.killing, s.derived);
  r.killing_abelian = m.algebra().is_abelian(s.killing);
  r.derived_abelian = m.algebra().is_abelian(s.derived);
  return r;
}

inline Split canonical_split(const MetricLieAlgebra& m) {
  return {killing_subalgebra(m), m.algebra().derived_subalgebra()};
}

/// L_s = ad_s on S(g) and L_h = 0 on [g,g], checked exactly against the Levi-Civita product.
inline bool verify_eq2(const MetricLieAlgebra& m, const Split& split) {
  const SplitAnalysis a = analyze_split(m, split);
  if (!a.holds()) throw InvalidSplit("S(g) + [g,g] is not an orthogonal direct sum of abelian subalgebras");
  const LeviCivitaProduct p = levi_civita(m);
  for (const auto& s : split.killing.basis())
    if (!(p.left_mult(s) == m.algebra().ad(s))) return false;
  for (const auto& h : split.derived.basis())
    if (!p.left_mult(h).is_zero()) return false;
  return true;
}

/// Both sides of the characterization of flat Lorentzian Lie algebras carrying a
/// timelike left-invariant Killing field, computed independently.
struct Theorem1Report {
  CurvatureVerdict curvature;
  Subspace killing;
  Subspace derived;
  bool killing_has_timelike = false;
  std::optional<Vector> timelike_killing_vector;
  SplitAnalysis split;

  bool direct_side = false;      // flat and S(g) contains a timelike vector
  bool structural_side = false;  // orthogonal abelian split and S(g) contains a timelike vector
  std::optional<Split> split_data;
  bool even_dim_derived = false;
  bool eq2_verified = false;

  bool consistent() const noexcept { return direct_side == structural_side; }
};

inline Theorem1Report theorem1_check(const MetricLieAlgebra& m) {
  if (!m.is_lorentzian()) throw NotLorentzian();
  Theorem1Report r;
  r.curvature = is_flat(m);
  const Split s = canonical_split(m);
  r.killing = s.killing;
  r.derived = s.derived;
  r.timelike_killing_vector = timelike_vector(m, s.killing);
  r.killing_has_timelike = has_timelike_vector(m, s.killing);
  r.direct_side = r.curvature.flat && r.killing_has_timelike;
  r.split = analyze_split(m, s);
  r.structural_side = r.split.holds() && r.killing_has_timelike;
  r.even_dim_derived = s.derived.dim() % 2 == 0;
  if (r.split.holds()) {
    r.split_data = s;
    r.eq2_verified = verify_eq2(m, s);
  }
  return r;
}

/// Riemannian counterpart: flat iff g = S(g) + [g,g] orthogonally with both summands abelian.
struct RiemannianFlatReport {
  CurvatureVerdict curvature;
  Subspace killing;
  Subspace derived;
  SplitAnalysis split;
  bool direct_side = false;
  bool structural_side = false;
  bool even_dim_derived = false;
  bool eq2_verified = false;

  bool consistent() const noexcept { return direct_side == structural_side; }
};

inline RiemannianFlatReport riemannian_flat_check(const MetricLieAlgebra& m) {
  if (!m.is_riemannian()) throw NotRiemannian();
  RiemannianFlatReport r;
  r.curvature = is_flat(m);
  const Split s = canonical_split(m);
  r.killing = s.killing;
  r.derived = s.derived;
  r.split = analyze_split(m, s);
  r.direct_side = r.curvature.flat;
  r.structural_side = r.split.holds();
  r.even_dim_derived = s.derived.dim() % 2 == 0;
  if (r.split.holds()) r.eq2_verified = verify_eq2(m, s);
  return r;
}

/// Floating-point normal form of the commuting skew family {ad_s restricted to [g,g]}:
/// an orthonormal basis of [g,g] grouped into planes (u_i, v_i) with
/// ad_s u_i = lambda_i(s) v_i and ad_s v_i = -lambda_i(s) u_i. Reporting only.
struct RotationPlane {
  std::vector<double> u;
  std::vector<double> v;
  std::vector<double> frequencies;  // lambda_i(s_k) for each basis vector s_k of S(g)
};

struct RotationForm {
  std::vector<RotationPlane> planes;
  double max_residual = 0.0;
  static constexpr double kTolerance = 1e-9;
};

inline RotationForm rotation_form(const MetricLieAlgebra& m, const Split& split) {
  if (!analyze_split(m, split).holds()) throw InvalidSplit("rotation form needs a valid split");
  const std::size_t n = m.dim();
  const std::size_t p = split.derived.dim();
  if (p % 2 != 0) throw OddDimension("derived algebra has odd dimension " + std::to_string(p));
  RotationForm out;
  if (p == 0) return out;
  if (signature(restrict_form(m.gram(), split.derived)) != Signature{p, 0, 0})
    throw InvalidSplit("metric restricted to [g,g] is not positive definite");

  using Mat = Eigen::MatrixXd;
  auto to_eigen = [](const QMatrix& q) {
    Mat r(q.rows(), q.cols());
    for (std::size_t i = 0; i < q.rows(); ++i)
      for (std::size_t j = 0; j < q.cols(); ++j) r(i, j) = to_double(q(i, j));
    return r;
  };
  const Mat basis = to_eigen(split.derived.basis_matrix()).transpose();  // n x p
  const Mat g = to_eigen(m.gram());
  // Orthonormalize [g,g] with respect to the metric: columns of basis * chol^{-T}.
  const Mat local_gram = basis.transpose() * g * basis;
  const Eigen::LLT<Mat> llt(local_gram);
  const Mat frame = basis * llt.matrixU().solve(Mat::Identity(p, p));  // n x p, metric-orthonormal

  // Operator matrices in the orthonormal frame: A_k = frame^T G ad_{s_k} frame.
  std::vector<Mat> ops;
  for (const auto& s : split.killing.basis()) ops.push_back(frame.transpose() * g * to_eigen(m.algebra().ad(s)) * frame);
  if (ops.empty()) throw InvalidSplit("S(g) is zero");

  double scale = 1.0;
  for (const auto& a : ops) scale = std::max(scale, a.norm());
  for (std::size_t k = 0; k < ops.size(); ++k)
    for (std::size_t l = k + 1; l < ops.size(); ++l)
      if ((ops[k] * ops[l] - ops[l] * ops[k]).norm() > 1e-9 * scale * scale)
        throw NonCommutingFamily("ad_s restricted to [g,g] do not commute");

  // A generic combination separates the distinct joint frequencies; its real Schur
  // form is block diagonal with 2x2 rotation blocks because it is skew.
  Mat combo = Mat::Zero(p, p);
  for (std::size_t k = 0; k < ops.size(); ++k) combo += std::sqrt(2.0 + 1.618 * static_cast<double>(k)) * ops[k];
  const Eigen::RealSchur<Mat> schur(combo);
  const Mat q = schur.matrixU();
  const Mat t = schur.matrixT();

  // 2x2 blocks give the planes; 1x1 (zero) blocks are paired up afterwards.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::size_t> singles;
  for (std::size_t i = 0; i < p;) {
    if (i + 1 < p && std::abs(t(i + 1, i)) > 0.0) {
      pairs.emplace_back(i, i + 1);
      i += 2;
    } else {
      singles.push_back(i++);
    }
  }
  for (std::size_t i = 0; i + 1 < singles.size(); i += 2) pairs.emplace_back(singles[i], singles[i + 1]);

  for (const auto& [iu, iv] : pairs) {
    Eigen::VectorXd u = q.col(iu), v = q.col(iv);
    RotationPlane plane;
    for (const auto& a : ops) plane.frequencies.push_back(v.dot(a * u));
    // Orientation: first nonzero frequency is positive.
    for (double f : plane.frequencies) {
      if (std::abs(f) < RotationForm::kTolerance) continue;
      if (f < 0) {
        std::swap(u, v);
        for (auto& x : plane.frequencies) x = -x;
      }
      break;
    }
    for (std::size_t k = 0; k < ops.size(); ++k) {
      const double lam = plane.frequencies[k];
      out.max_residual = std::max(out.max_residual, (ops[k] * u - lam * v).norm());
      out.max_residual = std::max(out.max_residual, (ops[k] * v + lam * u).norm());
    }
    const Eigen::VectorXd uu = frame * u, vv = frame * v;
    plane.u.assign(uu.data(), uu.data() + n);
    plane.v.assign(vv.data(), vv.data() + n);
    out.planes.push_back(std::move(plane));
  }
  std::sort(out.planes.begin(), out.planes.end(), [](const RotationPlane& a, const RotationPlane& b) {
    return a.frequencies < b.frequencies;
  });
  return out;
}

struct Corollary1Report {
  bool two_solvable = false;
  bool unimodular = false;
  bool complete = false;  // flat and unimodular
};

inline Corollary1Report corollary1_check(const MetricLieAlgebra& m) {
  const Theorem1Report t = theorem1_check(m);
  if (!t.direct_side) throw HypothesisNotMet("no timelike left-invariant Killing field on a flat Lorentzian metric");
  Corollary1Report r;
  r.two_solvable = m.algebra().is_2_solvable();
  r.unimodular = m.algebra().is_unimodular();
  r.complete = r.unimodular;
  return r;
}

inline bool same_connection(const MetricLieAlgebra& a, const MetricLieAlgebra& b) {
  if (!(a.algebra() == b.algebra())) throw MismatchedAlgebras();
  return levi_civita(a) == levi_civita(b);
}

/// Riemannian metric with the same Levi-Civita product: the metric restricted to S(g)
/// is diagonalized by congruence and every diagonal entry replaced by its absolute
/// value; on [g,g] the original metric is kept, and the two summands stay orthogonal.
/// Accepts Lorentzian inputs with a timelike Killing field on a flat metric, and flat
/// Riemannian inputs (for which it reproduces the metric up to the diagonal choice).
inline MetricLieAlgebra riemannian_companion(const MetricLieAlgebra& m) {
  if (m.is_lorentzian()) {
    if (!theorem1_check(m).direct_side)
      throw HypothesisNotMet("companion needs a flat Lorentzian metric with a timelike Killing field");
  } else if (m.is_riemannian()) {
    if (!riemannian_flat_check(m).structural_side) throw HypothesisNotMet("companion needs a flat metric");
  } else {
    throw HypothesisNotMet("companion needs a Lorentzian or Riemannian metric");
  }
  const std::size_t n = m.dim();
  const Split s = canonical_split(m);
  const auto diag = diagonalize_congruence(restrict_form(m.gram(), s.killing));

  // Columns: diagonalizing basis of S(g), then the basis of [g,g].
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < s.killing.dim(); ++i) {
    Vector f(n, Rational(0));
    for (std::size_t r = 0; r < s.killing.dim(); ++r) f = f + diag.transform(r, i) * s.killing.basis()[r];
    cols.push_back(std::move(f));
  }
  for (const auto& h : s.derived.basis()) cols.push_back(h);
  const QMatrix q = QMatrix::from_columns(n, cols);

  QMatrix local(n, n);
  for (std::size_t i = 0; i < s.killing.dim(); ++i) local(i, i) = abs(diag.diagonal[i]);
  const QMatrix derived_gram = restrict_form(m.gram(), s.derived);
  const std::size_t off = s.killing.dim();
  for (std::size_t i = 0; i < s.derived.dim(); ++i)
    for (std::size_t j = 0; j < s.derived.dim(); ++j) local(off + i, off + j) = derived_gram(i, j);

  const QMatrix qinv = inverse(q);
  MetricLieAlgebra companion(m.algebra(), qinv.transpose() * local * qinv);
  if (!companion.is_riemannian() || !same_connection(m, companion))
    throw HypothesisNotMet("constructed companion does not reproduce the connection");
  return companion;
}

/// Symmetric forms X with L_u^T X + X L_u = 0 for every u: exactly the metrics (when
/// nondegenerate) whose Levi-Civita product is the given torsion-free product.
inline std::vector<QMatrix> compatible_forms(const LeviCivitaProduct& p) {
  const std::size_t n = p.dim();
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) slots.emplace_back(i, j);
  auto sym_unit = [&](std::size_t s) {
    QMatrix e(n, n);
    e(slots[s].first, slots[s].second) = 1;
    e(slots[s].second, slots[s].first) = 1;
    return e;
  };
  QMatrix constraints(n * n * n, slots.size());
  for (std::size_t u = 0; u < n; ++u) {
    const QMatrix l = p.left_mult(unit_vector(n, u));
    for (std::size_t s = 0; s < slots.size(); ++s) {
      const QMatrix e = sym_unit(s);
      const Vector col = vectorize(l.transpose() * e + e * l);
      for (std::size_t r = 0; r < n * n; ++r) constraints(u * n * n + r, s) = col[r];
    }
  }
  std::vector<QMatrix> forms;
  for (const auto& k : kernel_basis(constraints)) {
    QMatrix x(n, n);
    for (std::size_t s = 0; s < slots.size(); ++s) x += k[s] * sym_unit(s);
    forms.push_back(std::move(x));
  }
  return forms;
}

enum class CompanionStatus { Exists, DoesNotExist, Undetermined };

inline std::string to_string(CompanionStatus s) {
  switch (s) {
    case CompanionStatus::Exists: return "exists";
    case CompanionStatus::DoesNotExist: return "does_not_exist";
    case CompanionStatus::Undetermined: return "undetermined";
  }
  return "undetermined";
}

struct Corollary2Report {
  bool timelike_killing = false;
  CompanionStatus companion = CompanionStatus::Undetermined;
  std::optional<QMatrix> companion_gram;
  std::string certificate;

  /// Both sides agree whenever the companion question was decided.
  bool consistent() const noexcept {
    if (companion == CompanionStatus::Undetermined) return true;
    return timelike_killing == (companion == CompanionStatus::Exists);
  }
};

/// Decides, independently of S(g), whether some Riemannian metric shares the Levi-Civita
/// product of a flat Lorentzian metric, and compares with the existence of a timelike
/// Killing vector. Existence is shown by an explicit positive-definite compatible form;
/// non-existence by non-unimodularity (a flat incomplete connection cannot be Riemannian)
/// or by a nonzero vector isotropic for every compatible form.
inline Corollary2Report corollary2_forward_check(const MetricLieAlgebra& m) {
  if (!m.is_lorentzian()) throw NotLorentzian();
  const LeviCivitaProduct p = levi_civita(m);
  if (!is_flat(p).flat) throw HypothesisNotMet("companion decision needs a flat metric");
  const std::size_t n = m.dim();
  Corollary2Report r;
  r.timelike_killing = has_timelike_vector(m, killing_subalgebra(m));

  if (!m.algebra().is_unimodular()) {
    r.companion = CompanionStatus::DoesNotExist;
    r.certificate = "non-unimodular: the flat connection is incomplete, every left-invariant Riemannian metric is complete";
    return r;
  }
  const std::vector<QMatrix> forms = compatible_forms(p);
  auto accept = [&](const QMatrix& x) {
    if (signature(x) != Signature{n, 0, 0}) return false;
    r.companion = CompanionStatus::Exists;
    r.companion_gram = x;
    r.certificate = "explicit positive-definite metric with the same connection";
    return true;
  };
  if (r.timelike_killing) {
    try {
      if (accept(riemannian_companion(m).gram())) return r;
    } catch (const HypothesisNotMet&) {
    }
  }
  // Small integer combinations of the compatible forms.
  if (!forms.empty() && forms.size() <= 6) {
    std::vector<int> coef(forms.size(), -2);
    while (true) {
      QMatrix x(n, n);
      for (std::size_t i = 0; i < forms.size(); ++i) x += Rational(coef[i]) * forms[i];
      if (accept(x)) return r;
      std::size_t i = 0;
      while (i < coef.size() && coef[i] == 2) coef[i++] = -2;
      if (i == coef.size()) break;
      ++coef[i];
    }
  }
  // Common isotropic vector with entries in {-1,0,1}.
  std::vector<int> v(n, -1);
  while (true) {
    Vector w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = v[i];
    if (!is_zero(w)) {
      bool isotropic = true;
      for (const auto& x : forms)
        if (!is_zero(bilinear(x, w, w))) {
          isotropic = false;
          break;
        }
      if (isotropic) {
        r.companion = CompanionStatus::DoesNotExist;
        r.certificate = "vector " + to_string(w) + " is isotropic for every metric with the same connection";
        return r;
      }
    }
    std::size_t i = 0;
    while (i < n && v[i] == 1) v[i++] = -1;
    if (i == n) break;
    ++v[i];
  }
  r.certificate = "no positive-definite compatible form found and no obstruction certified";
  return r;
}

}  // namespace flatlie
