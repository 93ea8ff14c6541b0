#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "cesaro/domain.hpp"

namespace cesaro {

/// One closed-form piece: x -> alpha + beta/x + gamma * ln(1/x).
struct PiecePoly {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;

  double eval(double x) const { return alpha + beta / x + gamma * std::log(1.0 / x); }
};

enum class TailForm {
  None,      // undefined beyond the mesh (unit interval)
  Zero,      // vanishes beyond the mesh
  InverseX,  // coeff / x beyond the mesh (Cesaro average of compact support)
};

/// Piecewise closed-form function on the mesh of a step function. Carries
/// Cesaro / Copson images exactly: for step input the primitive is piecewise
/// linear, so each piece of Cf is a/x + b and each piece of C*f is
/// a + b ln(1/x).
class PiecewiseSmooth {
 public:
  PiecewiseSmooth(Domain dom, std::vector<double> breaks, std::vector<PiecePoly> pieces,
                  TailForm tail = TailForm::None, double tail_coeff = 0.0)
      : domain_(dom),
        breaks_(std::move(breaks)),
        pieces_(std::move(pieces)),
        tail_(tail),
        tail_coeff_(tail_coeff) {
    if (pieces_.empty() || breaks_.size() != pieces_.size() + 1)
      throw std::invalid_argument("PiecewiseSmooth: need n+1 breaks for n pieces");
  }

  const Domain& domain() const { return domain_; }
  std::span<const double> breaks() const { return breaks_; }
  std::span<const PiecePoly> pieces() const { return pieces_; }
  TailForm tail() const { return tail_; }
  double tail_coeff() const { return tail_coeff_; }

  double operator()(double x) const {
    if (!(x > 0.0)) throw std::invalid_argument("PiecewiseSmooth: evaluate at x > 0");
    if (x > breaks_.back()) {
      switch (tail_) {
        case TailForm::None:
          throw std::invalid_argument("PiecewiseSmooth: point beyond the mesh");
        case TailForm::Zero:
          return 0.0;
        case TailForm::InverseX:
          return tail_coeff_ / x;
      }
    }
    return pieces_[piece_index(x)].eval(x);
  }

  /// Exact integral over [a, b]; closed-form tail part when b exceeds the mesh.
  double integral(double a, double b) const {
    if (b <= a) return 0.0;
    double acc = 0.0;
    if (b > breaks_.back()) {
      if (tail_ == TailForm::InverseX)
        acc += tail_coeff_ * std::log(b / std::max(a, breaks_.back()));
      else if (tail_ == TailForm::None)
        throw std::invalid_argument("integral: range beyond the mesh");
    }
    const double lo = std::max(a, 0.0), hi = std::min(b, breaks_.back());
    for (std::size_t i = 0; i < pieces_.size() && breaks_[i] < hi; ++i) {
      double pa = std::max(lo, breaks_[i]);
      double pb = std::min(hi, breaks_[i + 1]);
      if (pb > pa) acc += piece_integral(pieces_[i], pa, pb);
    }
    return acc;
  }

  /// Exact integral of G(t)/t over [a, b], a > 0. Pass b = inf to include the
  /// closed-form tail on the half-line.
  double integral_div_x(double a, double b) const {
    if (!(a > 0.0)) throw std::invalid_argument("integral_div_x: need a > 0");
    if (b <= a) return 0.0;
    double acc = 0.0;
    const double hi = std::min(b, breaks_.back());
    for (std::size_t i = 0; i < pieces_.size() && breaks_[i] < hi; ++i) {
      double pa = std::max(a, breaks_[i]);
      double pb = std::min(hi, breaks_[i + 1]);
      if (pb > pa) acc += piece_integral_div_x(pieces_[i], pa, pb);
    }
    if (b > breaks_.back() && tail_ == TailForm::InverseX) {
      double from = std::max(a, breaks_.back());
      acc += tail_coeff_ * (1.0 / from - (std::isfinite(b) ? 1.0 / b : 0.0));
    }
    return acc;
  }

  /// Essential sup of |G| over the mesh and tail. Infinite when a singular
  /// piece touches zero.
  double sup_abs() const {
    double best = 0.0;
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
      const PiecePoly& p = pieces_[i];
      double a = breaks_[i], b = breaks_[i + 1];
      if (a == 0.0) {
        if (p.beta != 0.0 || p.gamma != 0.0) return std::numeric_limits<double>::infinity();
        best = std::max(best, std::abs(p.alpha));
      } else {
        best = std::max(best, std::abs(p.eval(a)));
      }
      best = std::max(best, std::abs(p.eval(b)));
      if (p.gamma != 0.0) {
        double xs = -p.beta / p.gamma;  // where -(beta + gamma x)/x^2 vanishes
        if (xs > a && xs < b) best = std::max(best, std::abs(p.eval(xs)));
      }
    }
    if (tail_ == TailForm::InverseX)
      best = std::max(best, std::abs(tail_coeff_) / breaks_.back());
    return best;
  }

  std::size_t piece_index(double x) const {
    if (x <= breaks_[1]) return 0;
    auto it = std::lower_bound(breaks_.begin(), breaks_.end(), x);
    return static_cast<std::size_t>(it - breaks_.begin()) - 1;
  }

  static double piece_integral(const PiecePoly& p, double a, double b) {
    double acc = p.alpha * (b - a);
    if (p.beta != 0.0) {
      if (a <= 0.0) throw DivergenceError("piecewise integral: beta/x piece touches 0");
      acc += p.beta * std::log(b / a);
    }
    if (p.gamma != 0.0) acc += p.gamma * (log_inv_primitive(b) - log_inv_primitive(a));
    return acc;
  }

  static double piece_integral_div_x(const PiecePoly& p, double a, double b) {
    double acc = p.alpha * std::log(b / a) + p.beta * (1.0 / a - 1.0 / b);
    if (p.gamma != 0.0) {
      double la = std::log(a), lb = std::log(b);
      acc += p.gamma * 0.5 * (la * la - lb * lb);
    }
    return acc;
  }

 private:
  static double log_inv_primitive(double x) { return x > 0.0 ? x * (1.0 - std::log(x)) : 0.0; }

  Domain domain_;
  std::vector<double> breaks_;
  std::vector<PiecePoly> pieces_;
  TailForm tail_;
  double tail_coeff_;
};

/// Cesaro average Cf(x) = F(x)/x with F the exact primitive of f. On the
/// half-line the mesh is followed by the tail mass(f)/x.
inline PiecewiseSmooth cesaro_transform(const StepFunction& f) {
  std::vector<PiecePoly> pieces(f.pieces());
  for (std::size_t i = 0; i < f.pieces(); ++i) {
    double x0 = f.breaks()[i];
    double f0 = f.mass_up_to(x0);
    pieces[i] = {f.vals()[i], f0 - f.vals()[i] * x0, 0.0};
  }
  TailForm tail = f.domain().is_half_line() ? TailForm::InverseX : TailForm::None;
  return PiecewiseSmooth(f.domain(), {f.breaks().begin(), f.breaks().end()}, std::move(pieces),
                         tail, f.mass());
}

/// Copson transform C*f(x) = integral of f(t)/t over (x, right end]; on the
/// half-line the integrand vanishes beyond the support, so the value is exact
/// with no truncation.
inline PiecewiseSmooth copson_transform(const StepFunction& f) {
  const std::size_t n = f.pieces();
  std::vector<PiecePoly> pieces(n);
  double upper_sum = 0.0;  // integral of f/t over pieces strictly to the right
  for (std::size_t i = n; i-- > 0;) {
    double a = f.breaks()[i], b = f.breaks()[i + 1];
    // on piece i: C*f(x) = upper_sum + v_i * ln(b/x)
    pieces[i] = {upper_sum + f.vals()[i] * std::log(b), 0.0, f.vals()[i]};
    if (i > 0) upper_sum += f.vals()[i] * std::log(b / a);
  }
  TailForm tail = f.domain().is_half_line() ? TailForm::Zero : TailForm::None;
  return PiecewiseSmooth(f.domain(), {f.breaks().begin(), f.breaks().end()}, std::move(pieces),
                         tail, 0.0);
}

/// C applied to a piecewise image, evaluated exactly at one point.
inline double cesaro_of(const PiecewiseSmooth& g, double x) {
  if (!(x > 0.0)) throw std::invalid_argument("cesaro_of: x > 0 required");
  return g.integral(0.0, x) / x;
}

/// C* applied to a piecewise image, evaluated exactly at one point. Uses the
/// analytic tail of half-line Cesaro images.
inline double copson_of(const PiecewiseSmooth& g, double x) {
  double upper = g.domain().is_half_line() ? std::numeric_limits<double>::infinity()
                                           : g.domain().length;
  return g.integral_div_x(x, upper);
}

inline Seq discrete_cesaro(const Seq& x, int m) {
  if (m < 1) throw std::invalid_argument("discrete_cesaro: output length must be >= 1");
  std::vector<double> out(static_cast<std::size_t>(m));
  double run = 0.0;
  for (int n = 1; n <= m; ++n) {
    if (n <= static_cast<int>(x.size())) run += x.vals[n - 1];
    out[n - 1] = run / n;
  }
  return Seq(std::move(out));
}

inline Seq discrete_copson(const Seq& x, int m) {
  if (m < 1) throw std::invalid_argument("discrete_copson: output length must be >= 1");
  std::vector<double> out(static_cast<std::size_t>(m), 0.0);
  double tail = 0.0;
  for (int k = static_cast<int>(x.size()); k >= 1; --k) {
    tail += x.vals[k - 1] / k;
    if (k <= m) out[k - 1] = tail;
  }
  return Seq(std::move(out));
}

/// Hardy-Littlewood maximal function of a step function at one point, exact.
/// The sup over intervals containing x is attained with both endpoints in
/// breaks(f) + {x}: the average is monotone in each endpoint between
/// breakpoints.
inline double maximal(const StepFunction& f, double x) {
  if (!(x > 0.0 && x < f.domain().length))
    throw std::invalid_argument("maximal: x must be interior to the domain");
  std::vector<double> cand(f.breaks().begin(), f.breaks().end());
  cand.push_back(x);
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  double best = 0.0;
  for (double a : cand) {
    if (a > x) break;
    for (double b : cand) {
      if (b <= a || b < x) continue;
      best = std::max(best, (f.mass_up_to(b) - f.mass_up_to(a)) / (b - a));
    }
  }
  return best;
}

}  // namespace cesaro
