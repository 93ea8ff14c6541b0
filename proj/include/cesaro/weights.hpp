#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include "cesaro/domain.hpp"

namespace cesaro {

enum class WeightKind { One, InvT, LogInv, LogE, OneMinusT, Step };

/// Named weight on the domain with exact pointwise values and exact
/// antiderivatives. LogInv is ln(1/t), LogE is ln(e/t); both are meant for
/// the unit interval, where their singularity at zero is integrable.
class Weight {
 public:
  static Weight one() { return Weight(WeightKind::One); }
  static Weight inv_t() { return Weight(WeightKind::InvT); }
  static Weight log_inv() { return Weight(WeightKind::LogInv); }
  static Weight log_e() { return Weight(WeightKind::LogE); }
  static Weight one_minus_t() { return Weight(WeightKind::OneMinusT); }
  static Weight step(StepFunction f) {
    Weight w(WeightKind::Step);
    w.step_ = std::move(f);
    return w;
  }

  WeightKind kind() const { return kind_; }
  const StepFunction& step_fn() const { return *step_; }

  double operator()(double x) const {
    switch (kind_) {
      case WeightKind::One: return 1.0;
      case WeightKind::InvT: return 1.0 / x;
      case WeightKind::LogInv: return std::log(1.0 / x);
      case WeightKind::LogE: return 1.0 - std::log(x);
      case WeightKind::OneMinusT: return 1.0 - x;
      case WeightKind::Step: return step_->value_at(x);
    }
    return 0.0;
  }

  /// Exact integral over [a, b], 0 <= a <= b. InvT with a == 0 diverges.
  double integral(double a, double b) const {
    if (b <= a) return 0.0;
    switch (kind_) {
      case WeightKind::One: return b - a;
      case WeightKind::InvT:
        if (a <= 0.0) throw DivergenceError("weight 1/t is not integrable at 0");
        return std::log(b / a);
      case WeightKind::LogInv: return log_inv_primitive(b) - log_inv_primitive(a);
      case WeightKind::LogE: return (b - a) + log_inv_primitive(b) - log_inv_primitive(a);
      case WeightKind::OneMinusT: return (b - a) - 0.5 * (b * b - a * a);
      case WeightKind::Step: return step_->mass_up_to(b) - step_->mass_up_to(a);
    }
    return 0.0;
  }

  /// True when the weight is nonincreasing on its domain (all named kinds are;
  /// step weights are checked).
  bool nonincreasing() const {
    if (kind_ != WeightKind::Step) return true;
    for (std::size_t i = 0; i + 1 < step_->pieces(); ++i)
      if (step_->vals()[i] < step_->vals()[i + 1]) return false;
    return true;
  }

  /// Weights defined only on [0, 1].
  bool unit_only() const {
    return kind_ == WeightKind::LogInv || kind_ == WeightKind::LogE ||
           kind_ == WeightKind::OneMinusT;
  }

  std::string name() const {
    switch (kind_) {
      case WeightKind::One: return "one";
      case WeightKind::InvT: return "inv_t";
      case WeightKind::LogInv: return "log_inv";
      case WeightKind::LogE: return "log_e";
      case WeightKind::OneMinusT: return "one_minus_t";
      case WeightKind::Step: return "step";
    }
    return "?";
  }

 private:
  explicit Weight(WeightKind k) : kind_(k) {}

  // antiderivative of ln(1/t): t (1 - ln t), continuous at 0 with value 0
  static double log_inv_primitive(double t) { return t > 0.0 ? t * (1.0 - std::log(t)) : 0.0; }

  WeightKind kind_;
  std::optional<StepFunction> step_;
};

/// Point where w0 = t * w1 for the weight pairs with a single analytic
/// crossover. Returns nothing when the minimum needs no splitting.
inline std::optional<double> weight_crossover(const Weight& w0, const Weight& w1, double t) {
  const WeightKind a = w0.kind(), b = w1.kind();
  if (a == WeightKind::One && b == WeightKind::InvT) return t;            // 1 = t/s
  if (a == WeightKind::LogInv && b == WeightKind::One) return std::exp(-t);  // ln(1/s) = t
  if (a == WeightKind::OneMinusT && b == WeightKind::One) return 1.0 - t;    // 1-s = t
  return std::nullopt;
}

}  // namespace cesaro
