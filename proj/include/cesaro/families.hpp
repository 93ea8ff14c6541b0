#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "cesaro/domain.hpp"
#include "cesaro/norms.hpp"
#include "cesaro/quadrature.hpp"

namespace cesaro {

/// f(t) = (1-t)^{-1/2} on [h, 1), 0 < h < 1. The Cesaro and Copson images
/// have closed forms, which this class evaluates directly; the family drives
/// the Cop_p / Ces_p ratio to infinity as h -> 1.
struct TailSingularFamily {
  double h;

  explicit TailSingularFamily(double h_) : h(h_) {
    if (!(h > 0.0 && h < 1.0)) throw std::invalid_argument("TailSingularFamily: h in (0,1)");
  }

  double value(double t) const {
    return (t >= h && t < 1.0) ? 1.0 / std::sqrt(1.0 - t) : 0.0;
  }

  /// C f (t): 0 below h, (2/t)(sqrt(1-h) - sqrt(1-t)) on [h, 1].
  double cesaro_value(double t) const {
    if (t <= h) return 0.0;
    double tt = std::min(t, 1.0);
    return 2.0 / tt * (std::sqrt(1.0 - h) - std::sqrt(1.0 - tt));
  }

  /// C* f (t) = 2 atanh(sqrt(1 - max(t, h))).
  double copson_value(double t) const {
    double m = std::max(t, h);
    if (m >= 1.0) return 0.0;
    return 2.0 * std::atanh(std::sqrt(1.0 - m));
  }

  /// ||f_h||_{Cop(p)}: the sqrt substitution u = sqrt(1-t) removes the
  /// endpoint singularity of the integrand's derivative, then plain Gauss.
  double cop_norm(double p, const QuadConfig& q = {}) const {
    double head = h * std::pow(copson_value(h), p);
    double u_max = std::sqrt(1.0 - h);
    auto g = [&](double u) { return std::pow(2.0 * std::atanh(u), p) * 2.0 * u; };
    return std::pow(head + gauss_segment(g, 0.0, u_max, std::max(q.gauss_order, 64)), 1.0 / p);
  }

  double ces_norm(double p, const QuadConfig& q = {}) const {
    double u_max = std::sqrt(1.0 - h);
    auto g = [&](double u) {
      double t = 1.0 - u * u;
      return std::pow(2.0 * (u_max - u) / t, p) * 2.0 * u;
    };
    return std::pow(gauss_segment(g, 0.0, u_max, std::max(q.gauss_order, 64)), 1.0 / p);
  }

  /// Certified lower bound for (Cop/Ces ratio)^p: (p-1) h^p / (1 - h^{p-1}).
  double ratio_lower_bound(double p) const {
    return (p - 1.0) * std::pow(h, p) / (1.0 - std::pow(h, p - 1.0));
  }

  /// ||f_h||_{Cop(p)}^p >= 2^p h (1-h)^{p/2}.
  double cop_pth_lower(double p) const {
    return std::pow(2.0, p) * h * std::pow(1.0 - h, 0.5 * p);
  }

  /// ||f_h||_{Ces(p)}^p <= 2^p (1-h)^{p/2} (1-h^{p-1}) / ((p-1) h^{p-1}).
  double ces_pth_upper(double p) const {
    return std::pow(2.0, p) * std::pow(1.0 - h, 0.5 * p) * (1.0 - std::pow(h, p - 1.0)) /
           ((p - 1.0) * std::pow(h, p - 1.0));
  }
};

/// f(t) = indicator of [0, s]. Exact Cesaro norm in closed form; the family
/// separates the (1-1/p, inf) interpolation norm from Ces_p.
struct PrefixIndicatorFamily {
  double s;

  explicit PrefixIndicatorFamily(double s_) : s(s_) {
    if (!(s > 0.0 && s <= 1.0)) throw std::invalid_argument("PrefixIndicatorFamily: s in (0,1]");
  }

  StepFunction step() const {
    return StepFunction::indicator(0.0, s, Domain::unit());
  }

  double ces_norm(double p) const {
    double pp = p / (p - 1.0);
    return std::pow(pp * s - std::pow(s, p) / (p - 1.0), 1.0 / p);
  }

  /// Ratio bound (1/(6 p')) (ln e/s)^{1/p}, valid for s < 1/e.
  double ratio_bound(double p) const {
    double pp = p / (p - 1.0);
    return std::pow(1.0 - std::log(s), 1.0 / p) / (6.0 * pp);
  }
};

}  // namespace cesaro
