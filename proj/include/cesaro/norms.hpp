#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "cesaro/domain.hpp"
#include "cesaro/operators.hpp"
#include "cesaro/quadrature.hpp"
#include "cesaro/weights.hpp"

namespace cesaro {

inline constexpr double kInfP = std::numeric_limits<double>::infinity();

inline double conjugate_exponent(double p) { return p / (p - 1.0); }

/// Weighted L_p norm of a step function; exact (cell masses in closed form).
inline double lp_weighted(const StepFunction& g, double p, const Weight& w,
                          const QuadConfig& = {}) {
  if (!(p >= 1.0)) throw std::invalid_argument("lp_weighted: p must be >= 1");
  if (w.unit_only() && g.domain().is_half_line())
    throw std::invalid_argument("lp_weighted: weight defined on [0,1] only");
  if (p == kInfP) return g.max_value();
  double acc = 0.0;
  for (std::size_t i = 0; i < g.pieces(); ++i) {
    double v = g.vals()[i];
    if (v == 0.0) continue;
    acc += std::pow(v, p) * w.integral(g.breaks()[i], g.breaks()[i + 1]);
  }
  return std::pow(acc, 1.0 / p);
}

/// Weighted L_p norm of a piecewise image. Fixed-order Gauss per piece, one
/// octave at a time; the piece touching zero is handled by dyadic bands plus
/// a log-substituted core, which resolves log^p-type singularities. Half-line
/// tails (a/x beyond the mesh) are added in closed form.
inline double lp_weighted(const PiecewiseSmooth& g, double p, const Weight& w,
                          const QuadConfig& q = {}) {
  if (!(p >= 1.0)) throw std::invalid_argument("lp_weighted: p must be >= 1");
  if (w.unit_only() && g.domain().is_half_line())
    throw std::invalid_argument("lp_weighted: weight defined on [0,1] only");
  if (p == kInfP) return g.sup_abs();

  const PiecePoly& first = g.pieces()[0];
  const bool first_nonzero = first.alpha != 0.0 || first.beta != 0.0 || first.gamma != 0.0;
  if (first.beta != 0.0)
    throw DivergenceError("lp_weighted: 1/x singularity at 0 is not p-integrable");
  if (w.kind() == WeightKind::InvT && first_nonzero)
    throw DivergenceError("lp_weighted: weight 1/t makes the norm diverge at 0");

  double acc = 0.0;
  for (std::size_t i = 0; i < g.pieces().size(); ++i) {
    double a = g.breaks()[i], b = g.breaks()[i + 1];
    const PiecePoly& pc = g.pieces()[i];
    auto integrand = [&](double x) { return std::pow(std::abs(pc.eval(x)), p) * w(x); };
    acc += (a == 0.0) ? integrate_to_zero(integrand, b, q)
                      : gauss_log_split(integrand, a, b, q.gauss_order);
  }
  if (g.tail() == TailForm::InverseX && g.tail_coeff() != 0.0) {
    const double c = std::abs(g.tail_coeff()), left = g.breaks().back();
    switch (w.kind()) {
      case WeightKind::One:
        if (p == 1.0) throw DivergenceError("lp_weighted: a/x tail is not integrable");
        acc += std::pow(c, p) * std::pow(left, 1.0 - p) / (p - 1.0);
        break;
      case WeightKind::InvT:
        acc += std::pow(c, p) * std::pow(left, -p) / p;
        break;
      case WeightKind::Step:
        acc += 0.0;  // step weights vanish beyond their mesh
        break;
      default:
        throw std::invalid_argument("lp_weighted: unsupported weight for a half-line tail");
    }
  }
  return std::pow(acc, 1.0 / p);
}

/// Cesaro space norm ||Cf||_p. Exact special cases: p = 1 on [0,1] is the
/// L_1(ln 1/t) norm; p = inf is the max of F(x)/x over breakpoints (F/x is
/// monotone between them).
inline double ces_norm(const StepFunction& f, double p, const QuadConfig& q = {}) {
  if (!(p >= 1.0)) throw std::invalid_argument("ces_norm: p must be >= 1");
  if (p == 1.0) {
    if (f.domain().is_half_line()) {
      if (f.mass() > 0.0) throw DivergenceError("Ces_1 on the half-line contains only 0");
      return 0.0;
    }
    return lp_weighted(f, 1.0, Weight::log_inv(), q);
  }
  if (p == kInfP) {
    double best = 0.0;
    for (std::size_t j = 1; j < f.breaks().size(); ++j)
      best = std::max(best, f.mass_up_to(f.breaks()[j]) / f.breaks()[j]);
    return best;
  }
  return lp_weighted(cesaro_transform(f), p, Weight::one(), q);
}

/// Copson space norm ||C*f||_p, 1 <= p < inf.
inline double cop_norm(const StepFunction& f, double p, const QuadConfig& q = {}) {
  if (!(p >= 1.0) || p == kInfP)
    throw std::invalid_argument("cop_norm: p must lie in [1, inf)");
  return lp_weighted(copson_transform(f), p, Weight::one(), q);
}

/// Weighted Cesaro norm (integral of (Cf)^p ln(e/x) over [0,1])^(1/p).
inline double ces_log_norm(const StepFunction& f, double p, const QuadConfig& q = {}) {
  if (!(p > 1.0) || p == kInfP)
    throw std::invalid_argument("ces_log_norm: p must lie in (1, inf)");
  if (f.domain().is_half_line())
    throw std::invalid_argument("ces_log_norm: defined on [0,1] only");
  return lp_weighted(cesaro_transform(f), p, Weight::log_e(), q);
}

// ---- sequence space norms ----

struct SeqSpace {
  enum class Kind { Lp, LpInvK, Ces, CesInf, Cop } kind;
  double p = 2.0;

  static SeqSpace lp(double p) { return {Kind::Lp, p}; }
  static SeqSpace lp_inv_k(double p) { return {Kind::LpInvK, p}; }
  static SeqSpace ces(double p) { return {Kind::Ces, p}; }
  static SeqSpace ces_inf() { return {Kind::CesInf, kInfP}; }
  static SeqSpace cop(double p) { return {Kind::Cop, p}; }
};

/// Norm of a finitely supported sequence. ces(p) truncates at m terms and
/// encloses the tail sum of (S/n)^p between integral bounds; the reported
/// value is the bracket midpoint and the bracket must be narrower than
/// rel_tol, else the call fails.
inline double seq_norm(const Seq& x, const SeqSpace& sp, int m = 0, const QuadConfig& q = {}) {
  const int n = static_cast<int>(x.size());
  const double p = sp.p;
  switch (sp.kind) {
    case SeqSpace::Kind::Lp: {
      if (p == kInfP) return *std::max_element(x.vals.begin(), x.vals.end());
      double acc = 0.0;
      for (double v : x.vals) acc += std::pow(v, p);
      return std::pow(acc, 1.0 / p);
    }
    case SeqSpace::Kind::LpInvK: {
      double acc = 0.0;
      if (p == kInfP) {
        for (int k = 1; k <= n; ++k) acc = std::max(acc, x.vals[k - 1] / k);
        return acc;
      }
      for (int k = 1; k <= n; ++k) acc += std::pow(x.vals[k - 1] / k, p);
      return std::pow(acc, 1.0 / p);
    }
    case SeqSpace::Kind::CesInf: {
      double best = 0.0, run = 0.0;
      for (int k = 1; k <= n; ++k) {
        run += x.vals[k - 1];
        best = std::max(best, run / k);
      }
      return best;  // beyond the support the averages S/n only decrease
    }
    case SeqSpace::Kind::Cop: {
      if (!(p >= 1.0) || p == kInfP)
        throw std::invalid_argument("seq_norm: cop(p) needs finite p >= 1");
      Seq c = discrete_copson(x, n);  // exactly zero beyond the support
      double acc = 0.0;
      for (double v : c.vals) acc += std::pow(v, p);
      return std::pow(acc, 1.0 / p);
    }
    case SeqSpace::Kind::Ces: {
      const double s = x.sum();
      if (p == 1.0) {
        if (s > 0.0) throw DivergenceError("ces_1 contains only 0");
        return 0.0;
      }
      if (!(p > 1.0) || p == kInfP)
        throw std::invalid_argument("seq_norm: ces(p) needs finite p > 1");
      if (m < n) throw std::invalid_argument("seq_norm: truncation must cover the support");
      double acc = 0.0, run = 0.0;
      for (int k = 1; k <= m; ++k) {
        if (k <= n) run += x.vals[k - 1];
        acc += std::pow(run / k, p);
      }
      // bracket the tail sum of (S/n)^p, n > m, by integral bounds
      double lo = std::pow(s, p) * std::pow(m + 1.0, 1.0 - p) / (p - 1.0);
      double hi = std::pow(s, p) * std::pow(static_cast<double>(m), 1.0 - p) / (p - 1.0);
      double vlo = std::pow(acc + lo, 1.0 / p), vhi = std::pow(acc + hi, 1.0 / p);
      if (vhi - vlo > q.rel_tol * vhi)
        throw std::runtime_error("seq_norm: ces tail bracket wider than rel_tol; raise m");
      return 0.5 * (vlo + vhi);
    }
  }
  throw std::logic_error("seq_norm: unreachable");
}

/// ces(p) norm with the truncation grown until the tail bracket certifies.
inline double seq_norm_auto(const Seq& x, const SeqSpace& sp, const QuadConfig& q = {}) {
  if (sp.kind != SeqSpace::Kind::Ces) return seq_norm(x, sp, 0, q);
  int m = std::max<int>(static_cast<int>(x.size()), 64);
  for (; m <= (1 << 26); m *= 2) {
    try {
      return seq_norm(x, sp, m, q);
    } catch (const std::runtime_error&) {
    }
  }
  throw std::runtime_error("seq_norm_auto: bracket did not certify");
}

// ---- Muckenhoupt A_p expression ----

/// Grid maximum of avg(w) * avg(w^{-1/(p-1)})^{p-1} over subintervals of
/// [0,1] with endpoints on an equispaced grid enriched geometrically near 0.
/// A certified lower bound for the A_p constant.
inline double ap_constant(const Weight& w, double p, int grid_n, const QuadConfig& q = {}) {
  if (!(p > 1.0) || p == kInfP)
    throw std::invalid_argument("ap_constant: p must lie in (1, inf)");
  if (grid_n < 2) throw std::invalid_argument("ap_constant: grid too small");
  if (w.kind() == WeightKind::Step)
    for (double v : w.step_fn().vals())
      if (!(v > 0.0)) throw std::invalid_argument("ap_constant: weight must be positive");

  std::vector<double> g;
  for (int i = 0; i <= grid_n; ++i) g.push_back(static_cast<double>(i) / grid_n);
  for (double x = 0.5; x > 1e-14; x *= 0.5)
    if (x < 1.0 / grid_n) g.push_back(x);
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());

  const double alpha = 1.0 / (p - 1.0);
  auto sigma = [&](double x) { return std::pow(w(x), -alpha); };
  const std::size_t k = g.size();
  std::vector<double> cw(k, 0.0), cs(k, 0.0);
  for (std::size_t i = 1; i < k; ++i) {
    cw[i] = cw[i - 1] + w.integral(g[i - 1], g[i]);
    cs[i] = cs[i - 1] + (g[i - 1] == 0.0 ? integrate_to_zero(sigma, g[i], q)
                                         : gauss_log_split(sigma, g[i - 1], g[i], q.gauss_order));
  }
  double best = 0.0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      double len = g[j] - g[i];
      double val = ((cw[j] - cw[i]) / len) * std::pow((cs[j] - cs[i]) / len, p - 1.0);
      best = std::max(best, val);
    }
  return best;
}

/// ||Mf||_{L_p(w)} by per-piece quadrature of the exact maximal function.
inline double maximal_lp_weighted(const StepFunction& f, double p, const Weight& w,
                                  const QuadConfig& q = {}) {
  if (!(p >= 1.0) || p == kInfP)
    throw std::invalid_argument("maximal_lp_weighted: finite p >= 1 required");
  const double len = f.domain().length;
  auto integrand = [&](double x) {
    double xm = std::min(std::max(x, len * 1e-300), len * (1.0 - 1e-16));
    return std::pow(maximal(f, xm), p) * w(x);
  };
  double acc = 0.0;
  for (std::size_t i = 0; i < f.pieces(); ++i) {
    double a = f.breaks()[i], b = f.breaks()[i + 1];
    acc += (a == 0.0) ? integrate_to_zero(integrand, b, q)
                      : gauss_log_split(integrand, a, b, q.gauss_order);
  }
  return std::pow(acc, 1.0 / p);
}

}  // namespace cesaro
