#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "flatlie/metric.hpp"

namespace flatlie {

/// Levi-Civita product converted to double once, for the integrator.
class FloatProduct {
 public:
  explicit FloatProduct(const LeviCivitaProduct& p) : n_(p.dim()), p_(p.constants().size()) {
    for (std::size_t i = 0; i < p_.size(); ++i) p_[i] = p.constants()[i].get_d();
  }

  std::size_t dim() const noexcept { return n_; }

  std::vector<double> product(const std::vector<double>& u, const std::vector<double>& v) const {
    std::vector<double> r(n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        const double uv = u[i] * v[j];
        if (uv == 0.0) continue;
        const double* row = &p_[(i * n_ + j) * n_];
        for (std::size_t k = 0; k < n_; ++k) r[k] += uv * row[k];
      }
    return r;
  }

 private:
  std::size_t n_;
  std::vector<double> p_;
};

/// Left-invariant geodesic equation in velocity space: dv/dt = -v.v
inline std::vector<double> euler_arnold_rhs(const FloatProduct& p, const std::vector<double>& v) {
  std::vector<double> r = p.product(v, v);
  for (auto& x : r) x = -x;
  return r;
}

enum class GeodesicOutcome { ReachedHorizon, BlowUpDetected, StepUnderflow };

inline std::string to_string(GeodesicOutcome o) {
  switch (o) {
    case GeodesicOutcome::ReachedHorizon: return "reached_horizon";
    case GeodesicOutcome::BlowUpDetected: return "blow_up_detected";
    case GeodesicOutcome::StepUnderflow: return "step_underflow";
  }
  return "unknown";
}

struct GeodesicSample {
  double t = 0.0;
  std::vector<double> v;
  double speed_norm = 0.0;  // Euclidean norm of the coordinate vector
  double energy = 0.0;      // <v, v> in the metric
};

struct GeodesicTrajectory {
  std::vector<GeodesicSample> samples;
  GeodesicOutcome outcome = GeodesicOutcome::ReachedHorizon;
  std::optional<double> blowup_time;  // final accepted time when blow-up was declared

  double final_time() const { return samples.empty() ? 0.0 : samples.back().t; }

  /// Largest |<v(t),v(t)> - <v0,v0>| along the trajectory.
  double energy_drift() const {
    double d = 0.0;
    for (const auto& s : samples) d = std::max(d, std::abs(s.energy - samples.front().energy));
    return d;
  }

  double max_speed() const {
    double m = 0.0;
    for (const auto& s : samples) m = std::max(m, s.speed_norm);
    return m;
  }
};

struct GeodesicLimits {
  static constexpr double kNormLimit = 1e12;
  static constexpr double kMinStep = 1e-14;
  /// Below this norm a collapsing step size is reported as a numerical failure, not a blow-up.
  static constexpr double kUnderflowBlowupNorm = 1e6;
};

namespace detail {

inline double euclidean_norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

inline double energy(const std::vector<double>& gram, const std::vector<double>& v) {
  const std::size_t n = v.size();
  double e = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e += v[i] * gram[i * n + j] * v[j];
  return e;
}

}  // namespace detail

/// Adaptive Dormand-Prince 5(4) integration of dv/dt = -v.v from v0 up to t_max.
/// Blow-up is declared when the coordinate norm exceeds 1e12, or when the step size
/// drops below 1e-14 while the norm is already above 1e6.
inline GeodesicTrajectory integrate(const MetricLieAlgebra& m, const std::vector<double>& v0, double t_max,
                                    double rel_tol) {
  if (!(rel_tol > 1e-14 && rel_tol < 1e-2)) throw InvalidTolerance("rel_tol must lie in (1e-14, 1e-2)");
  if (!(t_max > 0.0)) throw InvalidTolerance("t_max must be positive");
  if (v0.size() != m.dim()) throw DimensionMismatch("initial velocity has wrong dimension");

  const FloatProduct prod(levi_civita(m));
  std::vector<double> gram(m.dim() * m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) gram[i * m.dim() + j] = m.gram()(i, j).get_d();

  // Autonomous system, so the nodes c_i are not needed.
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                          a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                          e6 = 22.0 / 525, e7 = -1.0 / 40;

  const std::size_t n = m.dim();
  auto f = [&](const std::vector<double>& v) { return euler_arnold_rhs(prod, v); };
  auto combo = [&](const std::vector<double>& y, double h, std::initializer_list<std::pair<double, const std::vector<double>*>> terms) {
    std::vector<double> r = y;
    for (const auto& [c, k] : terms)
      for (std::size_t i = 0; i < n; ++i) r[i] += h * c * (*k)[i];
    return r;
  };

  GeodesicTrajectory out;
  auto record = [&](double t, const std::vector<double>& v) {
    out.samples.push_back({t, v, detail::euclidean_norm(v), detail::energy(gram, v)});
  };

  double t = 0.0;
  std::vector<double> y = v0;
  record(t, y);
  double h = std::min(t_max, 1e-2);
  std::vector<double> k1 = f(y);

  while (t < t_max) {
    if (t + h > t_max) h = t_max - t;
    const auto k2 = f(combo(y, h, {{a21, &k1}}));
    const auto k3 = f(combo(y, h, {{a31, &k1}, {a32, &k2}}));
    const auto k4 = f(combo(y, h, {{a41, &k1}, {a42, &k2}, {a43, &k3}}));
    const auto k5 = f(combo(y, h, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
    const auto k6 = f(combo(y, h, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
    const auto y_new = combo(y, h, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
    const auto k7 = f(y_new);

    double err = 0.0;
    bool finite = true;
    for (std::size_t i = 0; i < n; ++i) {
      const double ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
      const double sc = rel_tol + rel_tol * std::max(std::abs(y[i]), std::abs(y_new[i]));
      if (!std::isfinite(y_new[i]) || !std::isfinite(ei)) finite = false;
      err = std::max(err, std::abs(ei) / sc);
    }
    if (!finite) err = 1e10;

    if (err <= 1.0) {
      t = (t + h >= t_max) ? t_max : t + h;
      y = y_new;
      k1 = k7;
      record(t, y);
      if (detail::euclidean_norm(y) > GeodesicLimits::kNormLimit) {
        out.outcome = GeodesicOutcome::BlowUpDetected;
        out.blowup_time = t;
        return out;
      }
    }
    const double factor = err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
    h *= factor;
    if (h < GeodesicLimits::kMinStep && t < t_max) {
      if (detail::euclidean_norm(y) >= GeodesicLimits::kUnderflowBlowupNorm) {
        out.outcome = GeodesicOutcome::BlowUpDetected;
        out.blowup_time = t;
      } else {
        out.outcome = GeodesicOutcome::StepUnderflow;
      }
      return out;
    }
  }
  out.outcome = GeodesicOutcome::ReachedHorizon;
  return out;
}

/// Blow-up time 1/(alpha*scale) of f' = alpha f^2, f(0) = scale, which governs the
/// geodesic with initial velocity scale*d in the flat class-C witness frame.
inline double blowup_time_classc(const Rational& alpha, const Rational& scale) {
  const Rational prod = alpha * scale;
  if (sgn(prod) <= 0) throw NonPositiveProduct();
  return to_double(Rational(1 / prod));
}

/// CSV with columns t, v_1..v_n, norm.
inline void write_csv(std::ostream& os, const GeodesicTrajectory& tr) {
  const std::size_t n = tr.samples.empty() ? 0 : tr.samples.front().v.size();
  os << "t";
  for (std::size_t i = 1; i <= n; ++i) os << ",v_" << i;
  os << ",norm\n";
  os.precision(17);
  for (const auto& s : tr.samples) {
    os << s.t;
    for (double x : s.v) os << ',' << x;
    os << ',' << s.speed_norm << '\n';
  }
}

}  // namespace flatlie
