#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cesaro/chain_lp.hpp"
#include "cesaro/domain.hpp"
#include "cesaro/norms.hpp"
#include "cesaro/operators.hpp"
#include "cesaro/weights.hpp"

namespace cesaro {

enum class CoupleKind {
  WeightedL1,          // (L1(w0), L1(w1)), closed form
  L1Linf,              // (L1, Linf), closed form via the rearrangement
  DiscreteL1InvK,      // (l1, l1(1/k)), closed form
  Ces1CesInfUnit,      // (Ces_1[0,1], Ces_inf[0,1]), variational
  L1wCesInf,           // (L1(w0)[0,1], Ces_inf[0,1]), variational
  L1CesInfHalfLine,    // (L1[0,inf), Ces_inf[0,inf)), variational
  RestrictedL1wCesInf  // (L1(w0)|[lo,hi], Ces_inf|[lo,hi]), variational
};

struct CoupleSpec {
  CoupleKind kind = CoupleKind::WeightedL1;
  Weight w0 = Weight::one();
  Weight w1 = Weight::one();
  double support_lo = 0.0;
  double support_hi = std::numeric_limits<double>::infinity();

  static CoupleSpec weighted_l1(Weight a, Weight b) {
    CoupleSpec c;
    c.kind = CoupleKind::WeightedL1;
    c.w0 = std::move(a);
    c.w1 = std::move(b);
    return c;
  }
  static CoupleSpec l1_linf() { return CoupleSpec{CoupleKind::L1Linf}; }
  static CoupleSpec discrete() { return CoupleSpec{CoupleKind::DiscreteL1InvK}; }
  static CoupleSpec ces1_cesinf() { return CoupleSpec{CoupleKind::Ces1CesInfUnit}; }
  static CoupleSpec l1w_cesinf(Weight a) {
    CoupleSpec c;
    c.kind = CoupleKind::L1wCesInf;
    c.w0 = std::move(a);
    return c;
  }
  static CoupleSpec l1_cesinf_halfline() { return CoupleSpec{CoupleKind::L1CesInfHalfLine}; }
  static CoupleSpec restricted(Weight a, double lo, double hi) {
    CoupleSpec c;
    c.kind = CoupleKind::RestrictedL1wCesInf;
    c.w0 = std::move(a);
    c.support_lo = lo;
    c.support_hi = hi;
    return c;
  }

  bool variational() const {
    return kind == CoupleKind::Ces1CesInfUnit || kind == CoupleKind::L1wCesInf ||
           kind == CoupleKind::L1CesInfHalfLine || kind == CoupleKind::RestrictedL1wCesInf;
  }

  Weight x0_weight() const {
    switch (kind) {
      case CoupleKind::WeightedL1:
      case CoupleKind::L1wCesInf:
      case CoupleKind::RestrictedL1wCesInf: return w0;
      case CoupleKind::Ces1CesInfUnit: return Weight::log_inv();
      case CoupleKind::L1Linf:
      case CoupleKind::L1CesInfHalfLine: return Weight::one();
      case CoupleKind::DiscreteL1InvK: break;
    }
    throw std::invalid_argument("x0_weight: discrete couple has no function weight");
  }

  std::string name() const {
    switch (kind) {
      case CoupleKind::WeightedL1: return "weighted_l1(" + w0.name() + "," + w1.name() + ")";
      case CoupleKind::L1Linf: return "l1_linf";
      case CoupleKind::DiscreteL1InvK: return "discrete";
      case CoupleKind::Ces1CesInfUnit: return "ces1_cesinf";
      case CoupleKind::L1wCesInf: return "l1w_cesinf(" + w0.name() + ")";
      case CoupleKind::L1CesInfHalfLine: return "l1_cesinf_halfline";
      case CoupleKind::RestrictedL1wCesInf: return "restricted(" + w0.name() + ")";
    }
    return "?";
  }
};

/// X0 norm of f under the couple (always a weighted L1-type norm).
inline double couple_x0_norm(const StepFunction& f, const CoupleSpec& c,
                             const QuadConfig& q = {}) {
  return lp_weighted(f, 1.0, c.x0_weight(), q);
}

/// X1 norm of f under the couple; +inf when f is outside X1.
inline double couple_x1_norm(const StepFunction& f, const CoupleSpec& c,
                             const QuadConfig& q = {}) {
  switch (c.kind) {
    case CoupleKind::WeightedL1:
      try {
        return lp_weighted(f, 1.0, c.w1, q);
      } catch (const DivergenceError&) {
        return std::numeric_limits<double>::infinity();
      }
    case CoupleKind::L1Linf: return f.max_value();
    case CoupleKind::Ces1CesInfUnit:
    case CoupleKind::L1wCesInf:
    case CoupleKind::L1CesInfHalfLine:
    case CoupleKind::RestrictedL1wCesInf: return ces_norm(f, kInfP, q);
    case CoupleKind::DiscreteL1InvK: break;
  }
  throw std::invalid_argument("couple_x1_norm: discrete couple takes sequences");
}

// ---- closed forms ----

/// K(t, f; L1(w0), L1(w1)) = || min(w0, t w1) f ||_{L1}. Exact when the
/// weight pair has a single analytic crossover (inserted as a breakpoint) or
/// both weights are step functions; otherwise a cellwise upper bound.
inline double k_weighted_l1(double t, const StepFunction& f, const Weight& w0, const Weight& w1,
                            const QuadConfig& = {}) {
  if (!(t > 0.0)) throw std::invalid_argument("k_weighted_l1: t must be positive");
  std::vector<double> extra;
  if (auto s = weight_crossover(w0, w1, t)) extra.push_back(*s);
  if (w0.kind() == WeightKind::Step)
    extra.insert(extra.end(), w0.step_fn().breaks().begin(), w0.step_fn().breaks().end());
  if (w1.kind() == WeightKind::Step)
    extra.insert(extra.end(), w1.step_fn().breaks().begin(), w1.step_fn().breaks().end());
  StepFunction fr = f.refined(extra);
  double acc = 0.0;
  for (std::size_t i = 0; i < fr.pieces(); ++i) {
    double v = fr.vals()[i];
    if (v == 0.0) continue;
    double a = fr.breaks()[i], b = fr.breaks()[i + 1];
    double m0, m1;
    try {
      m0 = w0.integral(a, b);
    } catch (const DivergenceError&) {
      m0 = std::numeric_limits<double>::infinity();
    }
    try {
      m1 = t * w1.integral(a, b);
    } catch (const DivergenceError&) {
      m1 = std::numeric_limits<double>::infinity();
    }
    double cell = std::min(m0, m1);
    if (!std::isfinite(cell)) throw DivergenceError("k_weighted_l1: f outside X0 + X1");
    acc += v * cell;
  }
  return acc;
}

/// K(t, f; L1, Linf): integral of the nonincreasing rearrangement up to t.
inline double k_l1_linf(double t, const StepFunction& f) {
  if (!(t > 0.0)) throw std::invalid_argument("k_l1_linf: t must be positive");
  return rearrange(f).mass_up_to(t);
}

/// K(t, x; l1, l1(1/k)) = sum |x_k| min(1, t/k); exact for finite support.
inline double k_discrete(double t, const Seq& x) {
  if (!(t > 0.0)) throw std::invalid_argument("k_discrete: t must be positive");
  double acc = 0.0;
  for (std::size_t k = 1; k <= x.size(); ++k)
    acc += x.vals[k - 1] * std::min(1.0, t / static_cast<double>(k));
  return acc;
}

// ---- the variational route ----

/// Certified decomposition f = g + h with value = ||g||_X0 + t ||h||_X1.
struct Decomposition {
  StepFunction g;
  StepFunction h;
  double value = 0.0;
  double t = 0.0;
  double bracket = 0.0;        // scalar-search bracket of the solver
  double feas_residual = 0.0;  // witness constraint violation (should be ~0)
};

namespace detail {

/// Couple-specific breakpoints that make the textbook near-optimal splits at
/// this t representable on the mesh.
inline std::vector<double> couple_split_points(const CoupleSpec& c, double t) {
  std::vector<double> pts;
  switch (c.kind) {
    case CoupleKind::WeightedL1:
      if (auto s = weight_crossover(c.w0, c.w1, t)) pts.push_back(*s);
      break;
    case CoupleKind::Ces1CesInfUnit:
      if (t < 1.0 && t > 0.0) {
        TauPair tp = tau_pair(t);
        pts.push_back(tp.tau1);
        pts.push_back(tp.tau2);
      }
      break;
    case CoupleKind::L1wCesInf:
    case CoupleKind::RestrictedL1wCesInf:
      if (auto s = weight_crossover(c.w0, Weight::one(), t)) pts.push_back(*s);
      break;
    default: break;
  }
  if (c.kind == CoupleKind::RestrictedL1wCesInf) {
    pts.push_back(c.support_lo);
    pts.push_back(c.support_hi);
  }
  return pts;
}

/// Refine f's mesh with the given points, geometric points toward zero, and
/// uniform splits until the cell count reaches target_cells.
inline StepFunction refine_for_lp(const StepFunction& f, std::vector<double> extra,
                                  int target_cells) {
  const double len = f.domain().length;
  double x1 = f.breaks()[1];
  for (auto p : extra) {
    if (p > 0.0 && p < x1) x1 = p;
  }
  for (int k = 1; k <= 24; ++k) extra.push_back(x1 * std::pow(0.5, k));
  StepFunction base = f.refined(extra);
  if (static_cast<int>(base.pieces()) >= target_cells) return base;

  std::vector<double> splits;
  const int missing = target_cells - static_cast<int>(base.pieces());
  for (std::size_t i = 0; i < base.pieces(); ++i) {
    double a = base.breaks()[i], b = base.breaks()[i + 1];
    int k = static_cast<int>(std::floor(missing * (b - a) / len));
    for (int j = 1; j <= k; ++j) splits.push_back(a + (b - a) * j / (k + 1.0));
  }
  return base.refined(splits);
}

inline ChainLP make_chain_lp(const StepFunction& fr, const CoupleSpec& c) {
  const std::size_t n = fr.pieces();
  ChainLP lp;
  lp.len.resize(n);
  lp.ub.resize(n);
  lp.cost.resize(n);
  const Weight w0 = c.x0_weight();
  for (std::size_t i = 0; i < n; ++i) {
    double a = fr.breaks()[i], b = fr.breaks()[i + 1];
    lp.len[i] = b - a;
    lp.ub[i] = fr.vals()[i] * lp.len[i];
    lp.cost[i] = w0.integral(a, b) / lp.len[i];
  }
  if (c.kind == CoupleKind::L1Linf) {
    lp.cellwise = true;
  } else {
    lp.pos.assign(fr.breaks().begin() + 1, fr.breaks().end());
  }
  return lp;
}

}  // namespace detail

/// Minimize ||g||_X0 + t ||f - g||_X1 over cellwise-constant 0 <= g <= f on
/// f's mesh refined to at least mesh_n cells. The max-of-linear X1 norms
/// (Ces_inf, L_inf at mesh breakpoints) enter through an epigraph variable;
/// the value is an upper bound on the true K-functional that converges under
/// mesh refinement. Weighted-L1 couples reduce to an exact cellwise minimum.
inline Decomposition k_variational(double t, const StepFunction& f, const CoupleSpec& c,
                                   int mesh_n = 256, double tol = 1e-8) {
  if (!(t > 0.0)) throw std::invalid_argument("k_variational: t must be positive");
  switch (c.kind) {
    case CoupleKind::DiscreteL1InvK:
      throw std::invalid_argument("k_variational: discrete couple takes sequences");
    case CoupleKind::Ces1CesInfUnit:
    case CoupleKind::L1wCesInf:
    case CoupleKind::RestrictedL1wCesInf:
      if (!f.domain().is_unit())
        throw std::invalid_argument("k_variational: couple lives on [0,1]");
      break;
    case CoupleKind::L1CesInfHalfLine:
      if (!f.domain().is_half_line())
        throw std::invalid_argument("k_variational: couple lives on the half-line");
      break;
    default: break;
  }
  if (c.kind == CoupleKind::RestrictedL1wCesInf) {
    double outside = f.mass() - (f.mass_up_to(c.support_hi) - f.mass_up_to(c.support_lo));
    if (outside > 1e-12 * std::max(1.0, f.mass()))
      throw std::invalid_argument("k_variational: f not supported in the restricted window");
  }

  StepFunction fr = detail::refine_for_lp(f, detail::couple_split_points(c, t), mesh_n);
  const std::size_t n = fr.pieces();

  if (c.kind == CoupleKind::WeightedL1) {
    std::vector<double> gv(n, 0.0), hv(n, 0.0);
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double v = fr.vals()[i];
      if (v == 0.0) continue;
      double a = fr.breaks()[i], b = fr.breaks()[i + 1];
      double m0, m1;
      try {
        m0 = c.w0.integral(a, b);
      } catch (const DivergenceError&) {
        m0 = std::numeric_limits<double>::infinity();
      }
      try {
        m1 = t * c.w1.integral(a, b);
      } catch (const DivergenceError&) {
        m1 = std::numeric_limits<double>::infinity();
      }
      if (!std::isfinite(std::min(m0, m1)))
        throw DivergenceError("k_variational: f outside X0 + X1");
      if (m0 <= m1) {
        gv[i] = v;
        acc += v * m0;
      } else {
        hv[i] = v;
        acc += v * m1;
      }
    }
    std::vector<double> br(fr.breaks().begin(), fr.breaks().end());
    Decomposition d{StepFunction(fr.domain(), br, std::move(gv)),
                    StepFunction(fr.domain(), br, std::move(hv)), acc, t, 0.0, 0.0};
    return d;
  }

  ChainLPSolver solver(detail::make_chain_lp(fr, c));
  ChainLPResult r = solver.solve(t, tol);
  if (r.bracket * (t + 1.0) > 10.0 * std::max(tol, 1e-14) * std::max(1.0, r.value))
    throw std::runtime_error("k_variational: scalar search missed the tolerance");
  std::vector<double> hv(n), gv(n);
  for (std::size_t i = 0; i < n; ++i) {
    double leni = fr.breaks()[i + 1] - fr.breaks()[i];
    hv[i] = std::max(0.0, r.mass[i] / leni);
    gv[i] = std::max(0.0, fr.vals()[i] - hv[i]);
  }
  std::vector<double> br(fr.breaks().begin(), fr.breaks().end());
  return Decomposition{StepFunction(fr.domain(), br, std::move(gv)),
                       StepFunction(fr.domain(), br, std::move(hv)),
                       r.value,
                       t,
                       r.bracket,
                       r.feas_residual};
}

struct ConvergedK {
  Decomposition dec;
  int mesh_cells = 0;
  bool converged = false;
};

/// Doubling protocol: refine until two successive values differ by less than
/// rel_change (relative), starting at start_n cells, capped at cap_n.
inline ConvergedK k_variational_converged(double t, const StepFunction& f, const CoupleSpec& c,
                                          double tol = 1e-8, int start_n = 64, int cap_n = 8192,
                                          double rel_change = 1e-4) {
  Decomposition prev = k_variational(t, f, c, start_n, tol);
  int n = start_n;
  while (2 * n <= cap_n) {
    n *= 2;
    Decomposition cur = k_variational(t, f, c, n, tol);
    bool ok = std::abs(cur.value - prev.value) <= rel_change * std::max(prev.value, 1e-300);
    prev = std::move(cur);
    if (ok) return {std::move(prev), n, true};
  }
  return {std::move(prev), n, false};
}

// ---- two-sided bounds from the splitting geometry ----

/// Three-band sandwich for K(t, f; Ces_1, Ces_inf) on [0,1], 0 < t < 1:
///   lower = (A + t B) / (2 e^2),  upper = A + t B,
/// where A is the Ces_1 norm of f restricted to [0,tau1] and [tau2,1] and B
/// the Ces_inf norm of the middle band (empty once tau1 >= tau2).
struct BandBounds {
  double lower = 0.0;
  double upper = 0.0;
  double band_l1 = 0.0;   // A
  double band_sup = 0.0;  // B
};

inline BandBounds k_band_bounds(double t, const StepFunction& f, const QuadConfig& q = {}) {
  if (!f.domain().is_unit()) throw std::invalid_argument("k_band_bounds: unit interval only");
  if (!(t > 0.0 && t < 1.0)) throw std::domain_error("k_band_bounds: t must lie in (0,1)");
  TauPair tp = tau_pair(t);
  BandBounds bb;
  if (tp.tau1 < tp.tau2) {
    bb.band_l1 = ces_norm(restrict_to(f, 0.0, tp.tau1), 1.0, q) +
                 ces_norm(restrict_to(f, tp.tau2, 1.0), 1.0, q);
    bb.band_sup = ces_norm(restrict_to(f, tp.tau1, tp.tau2), kInfP, q);
  } else {
    bb.band_l1 = ces_norm(f, 1.0, q);
    bb.band_sup = 0.0;
  }
  bb.upper = bb.band_l1 + t * bb.band_sup;
  bb.lower = bb.upper / (2.0 * std::numbers::e * std::numbers::e);
  return bb;
}

/// For nonincreasing f: K(t, f; Ces_1, Ces_inf) lies within
/// [v/3, v] with v the Ces_1 norm of f cut off at tau1(t).
inline std::pair<double, double> k_monotone_bounds(double t, const StepFunction& f,
                                                   const QuadConfig& q = {}) {
  if (!f.domain().is_unit())
    throw std::invalid_argument("k_monotone_bounds: unit interval only");
  if (!(t > 0.0 && t < 1.0)) throw std::domain_error("k_monotone_bounds: t must lie in (0,1)");
  for (std::size_t i = 0; i + 1 < f.pieces(); ++i)
    if (f.vals()[i] < f.vals()[i + 1] - 1e-12 * std::max(1.0, f.max_value()))
      throw std::invalid_argument("k_monotone_bounds: f must be nonincreasing");
  double v = ces_norm(restrict_to(f, 0.0, tau_pair(t).tau1), 1.0, q);
  return {v / 3.0, v};
}

// ---- sampled K-curves ----

enum class KMethod { ClosedForm, LP };

struct KTail {
  enum class Kind { ConstantBeyond, Power } kind = Kind::ConstantBeyond;
  double t_from = 1.0;
  double value = 0.0;
  double exponent = 0.0;  // Power: K(t) = value * (t/t_from)^exponent beyond t_from
};

struct KHead {
  bool linear = false;
  double slope = 0.0;  // K(t) = slope * t near zero when linear
};

struct TGridSpec {
  double tmin = 1e-4;
  double tmax = 10.0;
  int points = 0;  // 0 = derive from QuadConfig::log_grid_points per decade
};

struct KCurve {
  CoupleSpec couple;
  std::optional<StepFunction> f;
  std::optional<Seq> x;
  std::vector<double> tgrid;
  std::vector<double> kvals;
  KTail tail;
  KHead head;
  KMethod method = KMethod::ClosedForm;
  int mesh_cells = 0;
  double tol = 0.0;
};

namespace detail {

inline std::vector<double> log_grid(TGridSpec g, const QuadConfig& q = {}) {
  if (g.points <= 0) {  // default density: log_grid_points samples per decade
    double decades = std::log10(g.tmax / g.tmin);
    g.points = std::max(24, static_cast<int>(std::lround(q.log_grid_points * decades)));
  }
  if (!(g.tmin > 0.0 && g.tmax > g.tmin && g.points >= 2))
    throw std::invalid_argument("log_grid: bad grid spec");
  std::vector<double> t(static_cast<std::size_t>(g.points));
  const double la = std::log(g.tmin), lb = std::log(g.tmax);
  for (int i = 0; i < g.points; ++i)
    t[static_cast<std::size_t>(i)] = std::exp(la + (lb - la) * i / (g.points - 1.0));
  t.front() = g.tmin;
  t.back() = g.tmax;
  return t;
}

/// Smallest t beyond which K(t, f; couple) is constant (equal to the X0 norm).
inline double constant_tail_from(const StepFunction& f, const CoupleSpec& c,
                                 const QuadConfig& q) {
  switch (c.kind) {
    case CoupleKind::Ces1CesInfUnit:
    case CoupleKind::L1wCesInf:
    case CoupleKind::RestrictedL1wCesInf: return 1.0;
    case CoupleKind::L1Linf: return f.domain().length;
    case CoupleKind::L1CesInfHalfLine: return f.domain().length;
    case CoupleKind::WeightedL1: {
      if (c.w0.kind() == WeightKind::One && c.w1.kind() == WeightKind::InvT)
        return std::max(f.support_end(), 1e-6);
      if (c.w0.kind() == WeightKind::OneMinusT && c.w1.kind() == WeightKind::One) return 1.0;
      if (c.w0.kind() == c.w1.kind() && c.w0.kind() != WeightKind::Step) return 1.0;
      // generic: grow until the closed form saturates at the X0 norm
      double x0n = couple_x0_norm(f, c, q);
      double t = 1.0;
      for (int i = 0; i < 60 && x0n - k_weighted_l1(t, f, c.w0, c.w1, q) > 1e-14 * x0n; ++i)
        t *= 2.0;
      return t;
    }
    case CoupleKind::DiscreteL1InvK: break;
  }
  throw std::invalid_argument("constant_tail_from: unsupported couple");
}

}  // namespace detail

/// Sample K on a log grid. Closed-form couples are evaluated exactly; the
/// variational couples are solved on one shared mesh per curve (every grid
/// t's split points included), which keeps the samples exactly concave and
/// monotone up to solver tolerance. The grid is extended to cover the point
/// beyond which K is constant.
inline KCurve build_kcurve(const StepFunction& f, const CoupleSpec& c, TGridSpec grid,
                           KMethod method, int mesh_n = 512, double tol = 1e-8,
                           const QuadConfig& q = {}) {
  if (c.kind == CoupleKind::DiscreteL1InvK)
    throw std::invalid_argument("build_kcurve: use the sequence overload");
  if (method == KMethod::ClosedForm && c.variational())
    throw std::invalid_argument("build_kcurve: no closed form for this couple");

  KCurve kc;
  kc.couple = c;
  kc.f = f;
  kc.method = method;
  kc.tol = tol;

  const double t_const = detail::constant_tail_from(f, c, q);
  grid.tmax = std::max(grid.tmax, t_const);
  kc.tgrid = detail::log_grid(grid, q);
  if (std::find(kc.tgrid.begin(), kc.tgrid.end(), t_const) == kc.tgrid.end()) {
    kc.tgrid.push_back(t_const);
    std::sort(kc.tgrid.begin(), kc.tgrid.end());
  }

  if (method == KMethod::ClosedForm) {
    kc.kvals.reserve(kc.tgrid.size());
    if (c.kind == CoupleKind::L1Linf) {
      StepFunction r = rearrange(f);
      for (double t : kc.tgrid) kc.kvals.push_back(r.mass_up_to(t));
    } else {
      for (double t : kc.tgrid) kc.kvals.push_back(k_weighted_l1(t, f, c.w0, c.w1, q));
    }
    kc.mesh_cells = static_cast<int>(f.pieces());
  } else if (!c.variational()) {
    // weighted or L1/Linf couples dispatch to the exact cellwise solves
    kc.kvals.reserve(kc.tgrid.size());
    for (double t : kc.tgrid)
      kc.kvals.push_back(k_variational(t, f, c, mesh_n, tol).value);
    kc.mesh_cells = mesh_n;
  } else {
    // one shared mesh per curve: every grid t's split points are breakpoints,
    // so the samples stay exactly concave/monotone up to the solver bracket
    std::vector<double> special;
    for (double t : kc.tgrid) {
      auto pts = detail::couple_split_points(c, t);
      special.insert(special.end(), pts.begin(), pts.end());
    }
    int n = mesh_n;
    std::vector<double> prev;
    for (;; n *= 2) {
      StepFunction fr = detail::refine_for_lp(f, special, n);
      ChainLPSolver solver(detail::make_chain_lp(fr, c));
      std::vector<double> vals;
      vals.reserve(kc.tgrid.size());
      for (double t : kc.tgrid) vals.push_back(solver.solve(t, tol).value);
      kc.mesh_cells = static_cast<int>(fr.pieces());
      bool done = !prev.empty();
      if (!prev.empty())
        for (std::size_t i = 0; i < vals.size(); ++i)
          if (std::abs(vals[i] - prev[i]) > 1e-4 * std::max(prev[i], 1e-300)) done = false;
      kc.kvals = vals;
      if (done || 2 * n > 8192) break;
      prev = std::move(vals);
    }
  }

  double x0n = couple_x0_norm(f, c, q);
  double x1n = couple_x1_norm(f, c, q);
  kc.tail = {KTail::Kind::ConstantBeyond, t_const, kc.kvals.empty() ? 0.0 : kc.kvals.back(),
             0.0};
  kc.head = {std::isfinite(x1n), std::isfinite(x1n) ? x1n : 0.0};
  // past t_const the optimal split keeps everything in X0
  if (std::abs(kc.tail.value - x0n) > 1e-6 * std::max(x0n, 1e-300) + 100.0 * tol)
    throw std::logic_error("build_kcurve: tail does not freeze at the X0 norm");

  // curve invariants; a violation is a solver bug, not bad input
  const double slack = 10.0 * std::max(tol, 1e-12);
  for (std::size_t i = 0; i < kc.kvals.size(); ++i) {
    double t = kc.tgrid[i], kv = kc.kvals[i];
    if (!(kv >= -slack * x0n)) throw std::logic_error("build_kcurve: negative K sample");
    double cap = std::min(x0n, std::isfinite(x1n) ? t * x1n : kv + 1.0 + x0n);
    if (kv > cap * (1.0 + slack) + slack * x0n)
      throw std::logic_error("build_kcurve: K above min(|f|_X0, t |f|_X1)");
    if (i > 0) {
      if (kv < kc.kvals[i - 1] * (1.0 - slack) - slack * x0n)
        throw std::logic_error("build_kcurve: K not nondecreasing");
      double ratio_prev = kc.kvals[i - 1] / kc.tgrid[i - 1];
      if (kv / t > ratio_prev * (1.0 + slack) + slack)
        throw std::logic_error("build_kcurve: K(t)/t not nonincreasing");
    }
  }
  return kc;
}

/// Discrete couple (l1, l1(1/k)): exact piecewise-linear K with kinks at the
/// integers.
inline KCurve build_kcurve(const Seq& x, TGridSpec grid) {
  KCurve kc;
  kc.couple = CoupleSpec::discrete();
  kc.x = x;
  kc.method = KMethod::ClosedForm;
  const double t_const = static_cast<double>(x.size());
  grid.tmax = std::max(grid.tmax, t_const);
  kc.tgrid = detail::log_grid(grid);
  if (std::find(kc.tgrid.begin(), kc.tgrid.end(), t_const) == kc.tgrid.end()) {
    kc.tgrid.push_back(t_const);
    std::sort(kc.tgrid.begin(), kc.tgrid.end());
  }
  kc.kvals.reserve(kc.tgrid.size());
  for (double t : kc.tgrid) kc.kvals.push_back(k_discrete(t, x));
  kc.tail = {KTail::Kind::ConstantBeyond, t_const, x.sum(), 0.0};
  double slope = 0.0;
  for (std::size_t k = 1; k <= x.size(); ++k) slope += x.vals[k - 1] / static_cast<double>(k);
  kc.head = {true, slope};
  return kc;
}

}  // namespace cesaro
