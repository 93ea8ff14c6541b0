#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "cesaro/kfunctional.hpp"
#include "cesaro/norms.hpp"
#include "cesaro/operators.hpp"
#include "cesaro/quadrature.hpp"

namespace cesaro {

/// A value together with the certified enclosure it was taken from.
struct Enclosure {
  double value = 0.0;
  double lower = 0.0;
  double upper = 0.0;

  double width_rel() const { return value > 0.0 ? (upper - lower) / value : 0.0; }
};

namespace detail {

inline double pow_int(double a, double b, double alpha) {
  // integral of t^(alpha-1) over [a, b]
  if (b <= a) return 0.0;
  if (alpha == 0.0) return std::log(b / a);
  return (std::pow(b, alpha) - std::pow(a, alpha)) / alpha;
}

/// Kink positions of t -> K(t) for the closed-form couples.
inline std::vector<double> closed_form_kinks(const KCurve& kc) {
  std::vector<double> kinks;
  if (kc.x) {
    for (std::size_t k = 1; k <= kc.x->size(); ++k) kinks.push_back(static_cast<double>(k));
    return kinks;
  }
  const StepFunction& f = *kc.f;
  const CoupleSpec& c = kc.couple;
  if (c.kind == CoupleKind::L1Linf) {
    StepFunction r = rearrange(f);
    for (std::size_t i = 1; i < r.breaks().size(); ++i) kinks.push_back(r.breaks()[i]);
    return kinks;
  }
  const WeightKind a = c.w0.kind(), b = c.w1.kind();
  auto push = [&](double t) {
    if (t > 0.0 && std::isfinite(t)) kinks.push_back(t);
  };
  if (a == WeightKind::One && b == WeightKind::InvT) {
    for (std::size_t i = 1; i < f.breaks().size(); ++i) push(f.breaks()[i]);
  } else if (a == WeightKind::LogInv && b == WeightKind::One) {
    for (std::size_t i = 1; i + 1 < f.breaks().size(); ++i) push(-std::log(f.breaks()[i]));
  } else if (a == WeightKind::OneMinusT && b == WeightKind::One) {
    for (std::size_t i = 1; i + 1 < f.breaks().size(); ++i) push(1.0 - f.breaks()[i]);
  } else if (a == b && a != WeightKind::Step) {
    push(1.0);
  } else if (a == WeightKind::Step && b == WeightKind::Step) {
    StepFunction fr = f.refined(c.w0.step_fn().breaks());
    fr = fr.refined(c.w1.step_fn().breaks());
    for (std::size_t i = 0; i < fr.pieces(); ++i) {
      double m0 = c.w0.integral(fr.breaks()[i], fr.breaks()[i + 1]);
      double m1 = c.w1.integral(fr.breaks()[i], fr.breaks()[i + 1]);
      if (m1 > 0.0) push(m0 / m1);
    }
  } else {
    // no analytic kink map; a dense set keeps per-segment Gauss honest
    for (int i = 0; i <= 256; ++i) push(std::exp(-12.0 + 15.0 * i / 256.0));
  }
  return kinks;
}

}  // namespace detail

/// (theta, p) interpolation norm from a K-curve:
/// ( integral of [t^{-theta} K(t)]^p dt/t over (0, inf) )^(1/p).
///
/// Closed-form curves are re-integrated exactly: segments between the kinks
/// of K carry fixed-order Gauss, the head is integrated down to zero through
/// the log substitution, and the constant tail is closed form. Sampled LP
/// curves are bracketed between the monotone/concave envelopes of consecutive
/// samples (K nondecreasing, K/t nonincreasing), each integrable in closed
/// form; the reported value is the enclosure midpoint.
inline Enclosure theta_p_norm(const KCurve& kc, double theta, double p,
                              const QuadConfig& q = {}) {
  if (!(theta > 0.0 && theta < 1.0))
    throw std::invalid_argument("theta_p_norm: theta must lie in (0,1)");
  if (!(p >= 1.0) || p == kInfP)
    throw std::invalid_argument("theta_p_norm: p must lie in [1, inf)");
  if (kc.kvals.empty()) throw std::invalid_argument("theta_p_norm: empty curve");
  if (kc.tail.kind == KTail::Kind::Power && !(kc.tail.exponent < theta))
    throw DivergenceError("theta_p_norm: tail exponent makes the integral diverge");

  bool all_zero = true;
  for (double v : kc.kvals) all_zero &= (v == 0.0);
  if (all_zero) return {0.0, 0.0, 0.0};

  const double tN = kc.tgrid.back(), kN = kc.kvals.back();
  double tail = 0.0;
  if (kc.tail.kind == KTail::Kind::ConstantBeyond) {
    tail = std::pow(kN, p) * detail::pow_int(tN, std::numeric_limits<double>::infinity(),
                                             -theta * p);
  } else {
    tail = std::pow(kN, p) * std::pow(tN, -kc.tail.exponent * p) *
           detail::pow_int(tN, std::numeric_limits<double>::infinity(),
                           (kc.tail.exponent - theta) * p);
  }

  if (kc.method == KMethod::ClosedForm) {
    std::function<double(double)> K;
    if (kc.x) {
      K = [&](double t) { return k_discrete(t, *kc.x); };
    } else if (kc.couple.kind == CoupleKind::L1Linf) {
      K = [r = rearrange(*kc.f)](double t) { return r.mass_up_to(t); };
    } else {
      K = [&](double t) { return k_weighted_l1(t, *kc.f, kc.couple.w0, kc.couple.w1, q); };
    }
    auto integrand = [&](double t) { return std::pow(std::pow(t, -theta) * K(t), p) / t; };

    std::vector<double> kinks = detail::closed_form_kinks(kc);
    kinks.push_back(tN);
    std::sort(kinks.begin(), kinks.end());
    kinks.erase(std::unique(kinks.begin(), kinks.end()), kinks.end());
    kinks.erase(std::remove_if(kinks.begin(), kinks.end(),
                               [&](double t) { return !(t > 0.0) || t > tN; }),
                kinks.end());

    double acc = 0.0;
    double first = kinks.empty() ? tN : kinks.front();
    // K = slope * t holds exactly below the first kink for the discrete and
    // (L1, Linf) couples only; weighted pairs keep a t log(1/t) head
    const bool exact_linear_head = kc.x.has_value() || kc.couple.kind == CoupleKind::L1Linf;
    if (exact_linear_head) {
      acc += std::pow(kc.head.slope, p) * detail::pow_int(0.0, first, (1.0 - theta) * p);
    } else {
      acc += integrate_to_zero(integrand, first, q);
    }
    for (std::size_t i = 0; i + 1 < kinks.size(); ++i)
      acc += gauss_log_split(integrand, kinks[i], kinks[i + 1], q.gauss_order);
    acc += tail;
    double v = std::pow(acc, 1.0 / p);
    return {v, v * (1.0 - q.rel_tol), v * (1.0 + q.rel_tol)};
  }

  // sampled curve: envelope bracket
  if (!kc.head.linear)
    throw std::invalid_argument("theta_p_norm: sampled curve without a head slope");
  double lo_acc = tail, hi_acc = tail;
  {
    const double t0 = kc.tgrid.front(), k0 = kc.kvals.front();
    double chord = k0 / t0;
    double cap = std::max(kc.head.slope, chord);
    lo_acc += std::pow(chord, p) * detail::pow_int(0.0, t0, (1.0 - theta) * p);
    hi_acc += std::pow(cap, p) * detail::pow_int(0.0, t0, (1.0 - theta) * p);
  }
  for (std::size_t i = 0; i + 1 < kc.tgrid.size(); ++i) {
    double ta = kc.tgrid[i], tb = kc.tgrid[i + 1];
    double ka = kc.kvals[i], kb = kc.kvals[i + 1];
    if (kb <= 0.0) continue;
    if (ka <= 0.0) {  // degenerate sample: bracket between the chord and the plateau
      lo_acc += std::pow(kb / tb, p) * detail::pow_int(ta, tb, (1.0 - theta) * p);
      hi_acc += std::pow(kb, p) * detail::pow_int(ta, tb, -theta * p);
      continue;
    }
    ka = std::min(ka, kb);  // guard fp noise against the monotone invariant
    // lower envelope: ka on [ta, tl], then (kb/tb) t
    double tl = std::clamp(ka * tb / kb, ta, tb);
    lo_acc += std::pow(ka, p) * detail::pow_int(ta, tl, -theta * p) +
              std::pow(kb / tb, p) * detail::pow_int(tl, tb, (1.0 - theta) * p);
    // upper envelope: (ka/ta) t on [ta, tu], then kb
    double tu = std::clamp(kb * ta / ka, ta, tb);
    hi_acc += std::pow(ka / ta, p) * detail::pow_int(ta, tu, (1.0 - theta) * p) +
              std::pow(kb, p) * detail::pow_int(tu, tb, -theta * p);
  }
  double lo = std::pow(lo_acc, 1.0 / p), hi = std::pow(hi_acc, 1.0 / p);
  return {std::pow(0.5 * (lo_acc + hi_acc), 1.0 / p), lo, hi};
}

/// (theta, inf) norm: sup of t^{-theta} K(t). Evaluated over the samples plus
/// the closed-form head and tail; for sampled curves this is a certified
/// lower bound that is exact in the grid limit.
inline double theta_inf_norm(const KCurve& kc, double theta) {
  if (!(theta >= 0.0 && theta <= 1.0))
    throw std::invalid_argument("theta_inf_norm: theta must lie in [0,1]");
  double best = 0.0;
  for (std::size_t i = 0; i < kc.tgrid.size(); ++i)
    best = std::max(best, std::pow(kc.tgrid[i], -theta) * kc.kvals[i]);
  if (!kc.kvals.empty())
    best = std::max(best, std::pow(kc.tail.t_from, -theta) * kc.tail.value);
  if (theta == 1.0 && kc.head.linear) best = std::max(best, kc.head.slope);
  return best;
}

/// Sum Cf + C*f as one exact piecewise image (shared mesh, added tails).
inline PiecewiseSmooth cesaro_copson_sum(const StepFunction& f) {
  PiecewiseSmooth a = cesaro_transform(f);
  PiecewiseSmooth b = copson_transform(f);
  std::vector<PiecePoly> pieces(a.pieces().size());
  for (std::size_t i = 0; i < pieces.size(); ++i)
    pieces[i] = {a.pieces()[i].alpha + b.pieces()[i].alpha,
                 a.pieces()[i].beta + b.pieces()[i].beta,
                 a.pieces()[i].gamma + b.pieces()[i].gamma};
  TailForm tail = f.domain().is_half_line() ? TailForm::InverseX : TailForm::None;
  return PiecewiseSmooth(f.domain(), {f.breaks().begin(), f.breaks().end()}, std::move(pieces),
                         tail, f.mass());
}

/// The (1-1/p, p) norm for the couple (L1, L1(1/t)) computed through its
/// operator identity: ||Cf + C*f||_{L_p} on the half-line, and
/// (||Cf + C*f||_p^p + ||f||_1^p/(p-1))^(1/p) on [0,1].
inline double cesaro_copson_theta_norm(const StepFunction& f, double p,
                                       const QuadConfig& q = {}) {
  if (!(p > 1.0) || p == kInfP)
    throw std::invalid_argument("cesaro_copson_theta_norm: p must lie in (1, inf)");
  PiecewiseSmooth s = cesaro_copson_sum(f);
  double core = lp_weighted(s, p, Weight::one(), q);
  if (f.domain().is_half_line()) return core;
  return std::pow(std::pow(core, p) + std::pow(f.mass(), p) / (p - 1.0), 1.0 / p);
}

}  // namespace cesaro
