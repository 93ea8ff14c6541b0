#pragma once

#include <cmath>
#include <cstddef>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace cesaro {

struct QuadConfig {
  int gauss_order = 32;
  int geometric_refine_levels = 20;  // dyadic bands on a piece touching zero
  int log_grid_points = 400;         // t-samples per decade for curve grids
  double rel_tol = 1e-9;
};

/// Gauss-Legendre nodes/weights on [-1, 1], nodes found by Newton iteration
/// on the Legendre recurrence.
class GaussRule {
 public:
  explicit GaussRule(int n) : nodes_(n), weights_(n) {
    if (n < 2) throw std::invalid_argument("GaussRule: order must be >= 2");
    for (int i = 0; i < (n + 1) / 2; ++i) {
      double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
          double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-16) break;
      }
      nodes_[i] = -x;
      nodes_[n - 1 - i] = x;
      double w = 2.0 / ((1.0 - x * x) * dp * dp);
      weights_[i] = w;
      weights_[n - 1 - i] = w;
    }
    if (n % 2 == 1) nodes_[n / 2] = 0.0;
  }

  int order() const { return static_cast<int>(nodes_.size()); }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<double> nodes_, weights_;
};

inline const GaussRule& gauss_rule(int n) {
  static std::map<int, GaussRule> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, GaussRule(n)).first;
  return it->second;
}

template <class F>
double gauss_segment(F&& f, double a, double b, int order) {
  if (!(b > a)) return 0.0;
  const GaussRule& r = gauss_rule(order);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double s = 0.0;
  for (int i = 0; i < r.order(); ++i) s += r.weights()[i] * f(mid + half * r.nodes()[i]);
  return half * s;
}

/// Integrate over [a, b], a > 0, splitting so each sub-segment spans at most
/// one octave. Keeps Gauss accurate for integrands shaped like powers of 1/x
/// and log(1/x).
template <class F>
double gauss_log_split(F&& f, double a, double b, int order) {
  if (!(b > a)) return 0.0;
  if (!(a > 0.0)) throw std::invalid_argument("gauss_log_split: left end must be positive");
  double acc = 0.0, lo = a;
  while (lo < b) {
    double hi = std::min(b, 2.0 * lo);
    if (hi <= lo) hi = b;
    acc += gauss_segment(f, lo, hi, order);
    lo = hi;
  }
  return acc;
}

/// Integral of f over (0, b] where f may blow up like x^{q-1} log^k(1/x),
/// q > 0, toward zero. Dyadic bands down to b * 2^-levels, then the core is
/// integrated in u = log(1/x), where the transformed integrand decays
/// exponentially.
template <class F>
double integrate_to_zero(F&& f, double b, const QuadConfig& q) {
  if (!(b > 0.0)) return 0.0;
  double acc = 0.0, hi = b;
  for (int k = 0; k < q.geometric_refine_levels; ++k) {
    double lo = 0.5 * hi;
    acc += gauss_segment(f, lo, hi, q.gauss_order);
    hi = lo;
  }
  double u = -std::log(hi);
  const double step = 2.0;
  for (int k = 0; k < 400; ++k) {
    double seg = gauss_segment(
        [&](double uu) {
          double x = std::exp(-uu);
          return x > 0.0 ? f(x) * x : 0.0;
        },
        u, u + step, 16);
    acc += seg;
    u += step;
    if (std::abs(seg) <= 1e-3 * q.rel_tol * std::abs(acc) || u > 700.0) break;
  }
  return acc;
}

/// x^{alpha} integrated over [a, b] as closed form; alpha == 0 gives log(b/a).
inline double power_integral(double a, double b, double alpha_minus_1) {
  const double alpha = alpha_minus_1 + 1.0;
  if (b <= a) return 0.0;
  if (alpha == 0.0) return std::log(b / a);
  return (std::pow(b, alpha) - std::pow(a, alpha)) / alpha;
}

}  // namespace cesaro
