#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cesaro/corpus.hpp"
#include "cesaro/families.hpp"
#include "cesaro/interpolation.hpp"
#include "cesaro/kfunctional.hpp"
#include "cesaro/norms.hpp"
#include "cesaro/operators.hpp"

namespace cesaro {

struct Assertion {
  std::string id;        // stable identifier, e.g. "compose_copson_cesaro_unit"
  std::string property;  // human-readable statement of the inequality
  std::string detail;    // worst-case input and the two sides it produced
  double margin = 0.0;   // worst relative slack observed (>= 0 passes)
  bool pass = true;
};

struct SuiteConfig {
  std::uint64_t seed = 7;
  int count = 0;  // 0 = suite default (the sizes the acceptance gate uses)
  int mesh_n = 256;
  double tol = 1e-8;
  QuadConfig quad{};
};

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  SuiteConfig config;
  std::vector<Assertion> assertions;

  bool pass() const {
    for (const auto& a : assertions)
      if (!a.pass) return false;
    return true;
  }
};

inline std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace checks {

inline double rel_gap(double lhs, double rhs) {
  // margin of "lhs <= rhs", relative to the scale of the two sides
  double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
  return (rhs - lhs) / scale;
}

/// Running minimum of an assertion margin plus the input that attained it.
class Worst {
 public:
  template <class... Args>
  void note(double margin, const char* fmt, Args... args) {
    if (margin >= margin_) return;
    margin_ = margin;
    char buf[160];
    std::snprintf(buf, sizeof(buf), fmt, args...);
    detail_ = buf;
  }
  double margin() const { return margin_; }
  const std::string& detail() const { return detail_; }

 private:
  double margin_ = 1e300;
  std::string detail_;
};

inline void record(std::vector<Assertion>& out, const std::string& id,
                   const std::string& property, const Worst& w) {
  out.push_back({id, property, w.detail(), w.margin(), w.margin() >= 0.0});
}

inline void record_value(std::vector<Assertion>& out, const std::string& id,
                         const std::string& property, double value, bool pass = true,
                         std::string detail = {}) {
  out.push_back({id, property, std::move(detail), value, pass});
}

// criterion 1: composition identities of the averaging operators
inline std::vector<Assertion> operator_identities(int n_each, std::uint64_t seed,
                                                  const QuadConfig&) {
  std::vector<Assertion> out;
  auto sample_points = [](const StepFunction& f) {
    std::vector<double> xs;
    const double len = f.domain().length;
    for (int k = 0; k <= 12; ++k) xs.push_back(len * std::pow(0.5, k));
    for (std::size_t i = 0; i < f.pieces(); ++i)
      xs.push_back(0.5 * (f.breaks()[i] + f.breaks()[i + 1]));
    return xs;
  };

  {
    CorpusSpec spec;
    spec.count = n_each;
    spec.seed = seed;
    Worst w_cc, w_cstar;
    int idx = 0;
    for (const StepFunction& f : make_corpus(spec)) {
      PiecewiseSmooth cf = cesaro_transform(f), sf = copson_transform(f);
      double mass = f.mass();
      for (double x : sample_points(f)) {
        double both = cf(x) + sf(x);
        double scale = std::max(std::abs(both), 1e-12 * std::max(mass, 1.0));
        w_cc.note(1e-9 - std::abs(cesaro_of(sf, x) - both) / scale,
                  "f#%d at x=%.6g: C(C*f)=%.17g vs %.17g", idx, x, cesaro_of(sf, x), both);
        w_cstar.note(1e-9 - std::abs(copson_of(cf, x) - (both - mass)) / scale,
                     "f#%d at x=%.6g: C*(Cf)=%.17g vs %.17g", idx, x, copson_of(cf, x),
                     both - mass);
      }
      ++idx;
    }
    record(out, "compose_cesaro_copson_unit", "C(C*f) = Cf + C*f on [0,1]", w_cc);
    record(out, "compose_copson_cesaro_unit", "C*(Cf) = Cf + C*f - |f|_L1 on [0,1]", w_cstar);
  }
  {
    CorpusSpec spec;
    spec.count = n_each;
    spec.seed = seed + 1;
    spec.domain = Domain::half_line(8.0);
    Worst w_cc, w_cstar;
    int idx = 0;
    for (const StepFunction& f : make_corpus(spec)) {
      PiecewiseSmooth cf = cesaro_transform(f), sf = copson_transform(f);
      auto xs = sample_points(f);
      xs.push_back(f.domain().length * 2.0);  // past the mesh, analytic tail
      for (double x : xs) {
        double both = cf(x) + sf(x);
        double scale = std::max(std::abs(both), 1e-12);
        w_cc.note(1e-9 - std::abs(cesaro_of(sf, x) - both) / scale,
                  "f#%d at x=%.6g: C(C*f)=%.17g vs %.17g", idx, x, cesaro_of(sf, x), both);
        w_cstar.note(1e-9 - std::abs(copson_of(cf, x) - both) / scale,
                     "f#%d at x=%.6g: C*(Cf)=%.17g vs %.17g", idx, x, copson_of(cf, x), both);
      }
      ++idx;
    }
    record(out, "compose_cesaro_copson_halfline", "C(C*f) = Cf + C*f on [0,inf)", w_cc);
    record(out, "compose_copson_cesaro_halfline",
           "C*(Cf) = Cf + C*f on [0,inf), Cf carried by its 1/x tail", w_cstar);
  }
  {
    Worst worst;
    int idx = 0;
    for (const Seq& x : make_seq_corpus(n_each, 48, 1e-3, 1e3, seed + 2)) {
      int m = static_cast<int>(x.size()) + 6;
      Seq lhs = discrete_cesaro(discrete_copson(x, m), m);
      Seq cd = discrete_cesaro(x, m);
      Seq cs = discrete_copson(x, m + 1);
      for (int n = 1; n <= m - 1; ++n) {
        double rhs = cd.vals[n - 1] + cs.vals[n];
        double scale = std::max({std::abs(rhs), std::abs(lhs.vals[n - 1]), 1e-300});
        worst.note(1e-14 - std::abs(lhs.vals[n - 1] - rhs) / scale,
                   "x#%d at n=%d: Cd(Cd*x)=%.17g vs %.17g", idx, n, lhs.vals[n - 1], rhs);
      }
      ++idx;
    }
    record(out, "compose_discrete", "Cd(Cd* x)(n) = Cd x(n) + Cd* x(n+1)", worst);
  }
  return out;
}

// criterion 2 plus the two-sided comparisons that come with the identity
inline std::vector<Assertion> theta_identity_norms(int nf, const std::vector<double>& ps,
                                                   std::uint64_t seed, const QuadConfig& q) {
  std::vector<Assertion> out;
  CoupleSpec couple = CoupleSpec::weighted_l1(Weight::one(), Weight::inv_t());

  CorpusSpec unit_spec;
  unit_spec.count = nf;
  unit_spec.seed = seed;
  CorpusSpec half_spec = unit_spec;
  half_spec.seed = seed + 17;
  half_spec.domain = Domain::half_line(8.0);

  Worst w_unit, w_half, w_unit_band, w_half_band;
  int idx = 0;
  for (const StepFunction& f : make_corpus(unit_spec)) {
    for (double p : ps) {
      KCurve kc = build_kcurve(f, couple, {1e-4, 4.0, 160}, KMethod::ClosedForm, 0, 1e-9, q);
      double lhs = theta_p_norm(kc, 1.0 - 1.0 / p, p, q).value;
      double rhs = cesaro_copson_theta_norm(f, p, q);
      w_unit.note(1e-6 - std::abs(lhs - rhs) / rhs, "f#%d p=%g: curve=%.17g identity=%.17g",
                  idx, p, lhs, rhs);
      double copn = cop_norm(f, p, q);
      double pp = conjugate_exponent(p);
      w_unit_band.note(rel_gap(copn, rhs) + 1e-9, "f#%d p=%g: cop=%.17g vs norm=%.17g", idx, p,
                       copn, rhs);
      w_unit_band.note(rel_gap(rhs, (pp + std::pow(p - 1.0, -1.0 / p)) * copn) + 1e-9,
                       "f#%d p=%g: norm=%.17g vs cap=%.17g", idx, p, rhs,
                       (pp + std::pow(p - 1.0, -1.0 / p)) * copn);
    }
    ++idx;
  }
  idx = 0;
  for (const StepFunction& f : make_corpus(half_spec)) {
    for (double p : ps) {
      KCurve kc = build_kcurve(f, couple, {1e-4, 16.0, 160}, KMethod::ClosedForm, 0, 1e-9, q);
      double lhs = theta_p_norm(kc, 1.0 - 1.0 / p, p, q).value;
      double rhs = cesaro_copson_theta_norm(f, p, q);
      w_half.note(1e-6 - std::abs(lhs - rhs) / rhs, "f#%d p=%g: curve=%.17g identity=%.17g",
                  idx, p, lhs, rhs);
      double cesn = ces_norm(f, p, q), copn = cop_norm(f, p, q);
      double pp = conjugate_exponent(p);
      w_half_band.note(rel_gap(cesn, rhs) + 1e-9, "f#%d p=%g: ces=%.17g vs norm=%.17g", idx, p,
                       cesn, rhs);
      w_half_band.note(rel_gap(rhs, p * cesn) + 1e-9, "f#%d p=%g: norm=%.17g vs p*ces=%.17g",
                       idx, p, rhs, p * cesn);
      w_half_band.note(rel_gap(copn, rhs) + 1e-9, "f#%d p=%g: cop=%.17g vs norm=%.17g", idx, p,
                       copn, rhs);
      w_half_band.note(rel_gap(rhs, pp * copn) + 1e-9, "f#%d p=%g: norm=%.17g vs p'*cop=%.17g",
                       idx, p, rhs, pp * copn);
    }
    ++idx;
  }
  record(out, "theta_identity_unit",
         "(theta,p) norm over (L1, L1(1/t))[0,1] matches (|Cf+C*f|_p^p + |f|_1^p/(p-1))^(1/p)",
         w_unit);
  record(out, "theta_identity_halfline",
         "(theta,p) norm over (L1, L1(1/t))[0,inf) matches |Cf+C*f|_p", w_half);
  record(out, "theta_vs_copson_unit",
         "cop_p <= (theta,p) norm <= (p' + (p-1)^(-1/p)) cop_p on [0,1]", w_unit_band);
  record(out, "theta_two_sided_halfline",
         "ces <= |Cf+C*f|_p <= p ces and cop <= |Cf+C*f|_p <= p' cop on [0,inf)", w_half_band);
  return out;
}

// criterion 3
inline std::vector<Assertion> discrete_sandwich(int nx, const std::vector<double>& ps,
                                                std::uint64_t seed, const QuadConfig& q) {
  std::vector<Assertion> out;
  Worst worst;
  int idx = 0;
  for (const Seq& x : make_seq_corpus(nx, 40, 1e-3, 1e3, seed)) {
    KCurve kc = build_kcurve(x, {1e-3, 8.0, 120});
    for (double p : ps) {
      double nrm = theta_p_norm(kc, 1.0 - 1.0 / p, p, q).value;
      double copn = seq_norm(x, SeqSpace::cop(p), 0, q);
      double pp = conjugate_exponent(p);
      worst.note(rel_gap(copn, nrm) + 1e-9, "x#%d p=%g: cop=%.17g norm=%.17g", idx, p, copn,
                 nrm);
      worst.note(rel_gap(nrm, (pp + 1.0) * copn) + 1e-9, "x#%d p=%g: norm=%.17g cap=%.17g",
                 idx, p, nrm, (pp + 1.0) * copn);
    }
    ++idx;
  }
  record(out, "discrete_theta_sandwich", "cop_p <= |x|_{1-1/p,p} <= (p'+1) cop_p", worst);

  Worst w_e1;
  Seq e1(std::vector<double>{1.0});
  KCurve kc = build_kcurve(e1, {1e-3, 8.0, 120});
  for (double p : ps) {
    double nrm = theta_p_norm(kc, 1.0 - 1.0 / p, p, q).value;
    double expect = std::pow(conjugate_exponent(p), 1.0 / p);
    w_e1.note(1e-10 - std::abs(nrm - expect) / expect, "p=%g: norm=%.17g expect=%.17g", p, nrm,
              expect);
  }
  record(out, "discrete_theta_e1", "|e_1|_{1-1/p,p} = (p')^(1/p)", w_e1);
  return out;
}

// criterion 4
inline std::vector<Assertion> inequality_constants(int nf, const std::vector<double>& ps,
                                                   std::uint64_t seed, const QuadConfig& q) {
  std::vector<Assertion> out;
  CorpusSpec spec;
  spec.count = nf;
  spec.seed = seed;
  Worst w_hardy, w_copson, w_cop_ces, w_reverse;
  int idx = 0;
  for (const StepFunction& f : make_corpus(spec)) {
    double mass = f.mass();
    for (double p : ps) {
      double lp = lp_weighted(f, p, Weight::one(), q);
      double cesn = ces_norm(f, p, q);
      double copn = cop_norm(f, p, q);
      double pp = conjugate_exponent(p);
      w_hardy.note(rel_gap(cesn, pp * lp) + 1e-10, "f#%d p=%g: ces=%.17g p'|f|_p=%.17g", idx,
                   p, cesn, pp * lp);
      w_copson.note(rel_gap(copn, p * lp) + 1e-10, "f#%d p=%g: cop=%.17g p|f|_p=%.17g", idx, p,
                    copn, p * lp);
      w_cop_ces.note(rel_gap(cesn, pp * copn) + 1e-10, "f#%d p=%g: ces=%.17g p'cop=%.17g", idx,
                     p, cesn, pp * copn);
      w_reverse.note(rel_gap(copn, (p + 1.0) * std::max(cesn, mass)) + 1e-10,
                     "f#%d p=%g: cop=%.17g cap=%.17g", idx, p, copn,
                     (p + 1.0) * std::max(cesn, mass));
    }
    ++idx;
  }
  record(out, "hardy", "|Cf|_p <= p' |f|_p", w_hardy);
  record(out, "copson", "|C*f|_p <= p |f|_p", w_copson);
  record(out, "copson_into_cesaro", "|f|_Ces(p) <= p' |f|_Cop(p) on [0,1]", w_cop_ces);
  record(out, "cesaro_back_into_copson", "|f|_Cop(p) <= (p+1) max(|f|_Ces(p), |f|_1)",
         w_reverse);
  return out;
}

// the norm identities and monotone chains behind the embedding battery
inline std::vector<Assertion> embedding_chain(int nf, std::uint64_t seed, const QuadConfig& q) {
  std::vector<Assertion> out;
  CorpusSpec spec;
  spec.count = nf;
  spec.seed = seed;
  Worst w_fubini, w_ces1, w_chain, w_l1, w_log;
  const double chain_p[4] = {1.0, 1.7, 2.6, kInfP};
  int idx = 0;
  for (const StepFunction& f : make_corpus(spec)) {
    double mass = f.mass();
    double c1 = ces_norm(f, 1.0, q);
    double fub = copson_transform(f).integral(0.0, 1.0);
    w_fubini.note(1e-10 - std::abs(fub - mass) / std::max(mass, 1e-300),
                  "f#%d: int C*f=%.17g mass=%.17g", idx, fub, mass);
    double cw = lp_weighted(f, 1.0, Weight::log_inv(), q);
    w_ces1.note(1e-12 - std::abs(c1 - cw) / std::max(c1, 1e-300),
                "f#%d: ces1=%.17g L1(ln 1/t)=%.17g", idx, c1, cw);
    double prev = c1;
    for (int i = 1; i < 4; ++i) {
      double cur = ces_norm(f, chain_p[i], q);
      w_chain.note(rel_gap(prev, cur) + 1e-10, "f#%d p=%g->%g: %.17g vs %.17g", idx,
                   chain_p[i - 1], chain_p[i], prev, cur);
      prev = cur;
    }
    w_l1.note(rel_gap(mass, ces_norm(f, kInfP, q)) + 1e-10, "f#%d: |f|_1=%.17g ces_inf=%.17g",
              idx, mass, ces_norm(f, kInfP, q));
    w_log.note(rel_gap(ces_norm(f, 2.0, q), ces_log_norm(f, 2.0, q)) + 1e-10,
               "f#%d: ces=%.17g ces_log=%.17g", idx, ces_norm(f, 2.0, q),
               ces_log_norm(f, 2.0, q));
    ++idx;
  }
  record(out, "fubini_mass", "integral of C*f equals |f|_1 on [0,1]", w_fubini);
  record(out, "ces1_weighted_l1", "|f|_Ces(1) = |f|_{L1(ln 1/t)}", w_ces1);
  record(out, "cesaro_chain", "|f|_Ces(1) <= |f|_Ces(p) <= |f|_Ces(q) <= |f|_Ces(inf)",
         w_chain);
  record(out, "l1_into_ces_inf", "|f|_1 <= |f|_Ces(inf)", w_l1);
  record(out, "ces_log_dominates", "|f|_Ces(p) <= |f|_Ces(p,ln)", w_log);
  return out;
}

// criterion 5
inline std::vector<Assertion> k_sandwich(int nf, int nt, std::uint64_t seed, double tol,
                                         const QuadConfig& q) {
  std::vector<Assertion> out;
  CorpusSpec spec;
  spec.count = nf;
  spec.seed = seed;
  CoupleSpec couple = CoupleSpec::ces1_cesinf();
  Worst worst;
  bool all_converged = true;
  int idx = 0;
  for (const StepFunction& f : make_corpus(spec)) {
    for (int i = 0; i < nt; ++i) {
      double t = std::pow(10.0, -3.0 + 2.99 * i / (nt - 1.0));  // inside (1e-3, 1)
      BandBounds bb = k_band_bounds(t, f, q);
      ConvergedK ck = k_variational_converged(t, f, couple, tol);
      all_converged = all_converged && ck.converged;
      double eps = 1e-6 * bb.upper;
      double scale = std::max(bb.upper, 1e-300);
      worst.note((ck.dec.value - (bb.lower - eps)) / scale,
                 "f#%d t=%.6g: K=%.17g lower=%.17g", idx, t, ck.dec.value, bb.lower);
      worst.note(((bb.upper + eps) - ck.dec.value) / scale,
                 "f#%d t=%.6g: K=%.17g upper=%.17g", idx, t, ck.dec.value, bb.upper);
    }
    ++idx;
  }
  record(out, "k_band_sandwich",
         "(A+tB)/(2e^2) <= K(t,f;Ces_1,Ces_inf) <= A+tB after mesh convergence", worst);
  record_value(out, "k_band_meshes_converged", "refinement protocol reached 1e-4 stability",
               all_converged ? 1.0 : 0.0, all_converged);
  return out;
}

// criterion 6
inline std::vector<Assertion> k_sandwich_monotone(int nf, int nt, std::uint64_t seed,
                                                  double tol, const QuadConfig& q) {
  std::vector<Assertion> out;
  CorpusSpec spec;
  spec.count = nf;
  spec.seed = seed;
  CoupleSpec couple = CoupleSpec::ces1_cesinf();
  Worst worst;
  int idx = 0;
  for (const StepFunction& raw : make_corpus(spec)) {
    StepFunction f = rearrange(raw);
    for (int i = 0; i < nt; ++i) {
      double t = std::pow(10.0, -3.0 + 2.99 * i / (nt - 1.0));
      auto [lo, hi] = k_monotone_bounds(t, f, q);
      ConvergedK ck = k_variational_converged(t, f, couple, tol);
      double eps = 1e-6 * std::max(hi, 1e-300);
      double scale = std::max(hi, 1e-300);
      worst.note((ck.dec.value - (lo - eps)) / scale, "f#%d t=%.6g: K=%.17g v/3=%.17g", idx, t,
                 ck.dec.value, lo);
      worst.note(((hi + eps) - ck.dec.value) / scale, "f#%d t=%.6g: K=%.17g v=%.17g", idx, t,
                 ck.dec.value, hi);
    }
    ++idx;
  }
  record(out, "k_monotone_sandwich",
         "v/3 <= K(t,f;Ces_1,Ces_inf) <= v for nonincreasing f, v the truncated Ces_1 norm",
         worst);
  return out;
}

// criterion 7 (lower constant 1/72) and the reported upper ratio
inline std::vector<Assertion> weighted_cesaro_constant(int nf, double p, std::uint64_t seed,
                                                       int mesh_n, double tol,
                                                       const QuadConfig& q) {
  std::vector<Assertion> out;
  CorpusSpec spec;
  spec.count = nf;
  spec.seed = seed;
  CoupleSpec couple = CoupleSpec::ces1_cesinf();
  Worst worst, w_imbed;
  double ratio_min = std::numeric_limits<double>::infinity(), ratio_max = 0.0;
  int idx = 0;
  for (const StepFunction& f : make_corpus(spec)) {
    KCurve kc = build_kcurve(f, couple, {1e-4, 2.0, 120}, KMethod::LP, mesh_n, tol, q);
    Enclosure en = theta_p_norm(kc, 1.0 - 1.0 / p, p, q);
    double logn = ces_log_norm(f, p, q);
    double bound = logn / 72.0;
    worst.note((en.lower - (bound - 1e-6 * bound)) / std::max(bound, 1e-300),
               "f#%d: norm>=%.17g bound=%.17g", idx, en.lower, bound);
    // the endpoint couple norm dominates the plain Cesaro norm
    w_imbed.note(rel_gap(ces_norm(f, p, q), en.upper) + 1e-6, "f#%d: ces=%.17g norm<=%.17g",
                 idx, ces_norm(f, p, q), en.upper);
    double ratio = en.value / logn;
    ratio_min = std::min(ratio_min, ratio);
    ratio_max = std::max(ratio_max, ratio);
    ++idx;
  }
  record(out, "weighted_ces_lower_constant",
         "(theta,p) norm over (Ces_1, Ces_inf) >= |f|_Ces(p,ln) / 72", worst);
  record(out, "endpoint_imbedding", "|f|_Ces(p) <= (theta,p) norm over (Ces_1, Ces_inf)",
         w_imbed);
  record_value(out, "weighted_ces_upper_ratio_max",
               "largest observed (theta,p)-to-Ces(p,ln) ratio (finite upper constant)",
               ratio_max, std::isfinite(ratio_max));
  record_value(out, "weighted_ces_upper_ratio_min", "smallest observed ratio", ratio_min);
  return out;
}

// criterion 8
inline std::vector<Assertion> ap_bound(const std::vector<double>& ps, int grid_n,
                                       std::uint64_t seed, const QuadConfig& q) {
  std::vector<Assertion> out;
  Worst worst;
  for (double p : ps) {
    double v = ap_constant(Weight::log_e(), p, grid_n, q);
    worst.note(rel_gap(v, 2.0) + 1e-9, "p=%g: grid max %.17g vs 2", p, v);
  }
  record(out, "ap_log_weight", "A_p expression of ln(e/x) stays below 2 on every interval",
         worst);

  Worst w_one;
  for (double p : ps) {
    double v = ap_constant(Weight::one(), p, 64, q);
    w_one.note(1e-10 - std::abs(v - 1.0), "p=%g: grid max %.17g vs 1", p, v);
  }
  record(out, "ap_flat_weight", "A_p expression of the flat weight is exactly 1", w_one);

  CorpusSpec spec;
  spec.count = 20;
  spec.seed = seed;
  double bmax = 0.0;
  int idx = 0, bidx = 0;
  for (const StepFunction& f : make_corpus(spec)) {
    double denom = lp_weighted(f, 2.0, Weight::log_e(), q);
    if (denom > 0.0) {
      double b = maximal_lp_weighted(f, 2.0, Weight::log_e(), q) / denom;
      if (b > bmax) {
        bmax = b;
        bidx = idx;
      }
    }
    ++idx;
  }
  record_value(out, "maximal_operator_ratio",
               "largest observed |Mf| / |f| in L_2(ln e/x); finiteness witness", bmax,
               std::isfinite(bmax) && bmax < 1e3, "attained at f#" + std::to_string(bidx));
  return out;
}

// criterion 9
inline std::vector<Assertion> ratio_divergence(int kmax, double p, int mesh_n, double tol,
                                               const QuadConfig& q) {
  std::vector<Assertion> out;
  CoupleSpec couple = CoupleSpec::ces1_cesinf();
  Worst worst, mono;
  double prev_ratio = 0.0;
  for (int k = 1; k <= kmax; ++k) {
    PrefixIndicatorFamily fam(std::exp(-static_cast<double>(k)));
    KCurve kc =
        build_kcurve(fam.step(), couple, {1e-5, 2.0, 140}, KMethod::LP, mesh_n, tol, q);
    double ratio = theta_inf_norm(kc, 1.0 - 1.0 / p) / fam.ces_norm(p);
    worst.note(rel_gap(fam.ratio_bound(p), ratio) + 1e-9, "s=e^-%d: ratio=%.17g bound=%.17g",
               k, ratio, fam.ratio_bound(p));
    if (k > 1)
      mono.note((ratio - prev_ratio) / std::max(prev_ratio, 1e-300),
                "s=e^-%d: ratio=%.17g previous=%.17g", k, ratio, prev_ratio);
    prev_ratio = ratio;
  }
  record(out, "indicator_ratio_bound",
         "(theta,inf)-to-Ces_p ratio of indicators beats (1/(6p'))(ln e/s)^(1/p)", worst);
  record(out, "indicator_ratio_grows", "the ratio increases strictly along s = e^{-k}", mono);
  return out;
}

// criterion 10
inline std::vector<Assertion> counterexample_ratio(int kmax, double p, const QuadConfig& q) {
  std::vector<Assertion> out;
  Worst worst, w_cop, w_ces;
  double last_bound = 0.0;
  for (int k = 1; k <= kmax; ++k) {
    TailSingularFamily fam(1.0 - std::pow(2.0, -k));
    double copn = fam.cop_norm(p, q), cesn = fam.ces_norm(p, q);
    double lhs = std::pow(copn / cesn, p);
    double bound = fam.ratio_lower_bound(p);
    worst.note(rel_gap(bound, lhs) + 1e-9, "h=1-2^-%d: ratio^p=%.17g bound=%.17g", k, lhs,
               bound);
    w_cop.note(rel_gap(fam.cop_pth_lower(p), std::pow(copn, p)) + 1e-9,
               "h=1-2^-%d: cop^p=%.17g floor=%.17g", k, std::pow(copn, p),
               fam.cop_pth_lower(p));
    w_ces.note(rel_gap(std::pow(cesn, p), fam.ces_pth_upper(p)) + 1e-9,
               "h=1-2^-%d: ces^p=%.17g cap=%.17g", k, std::pow(cesn, p), fam.ces_pth_upper(p));
    last_bound = bound;
  }
  record(out, "tail_singular_ratio",
         "(|f_h|_Cop / |f_h|_Ces)^p >= (p-1) h^p / (1 - h^{p-1})", worst);
  record(out, "tail_singular_cop_lower", "|f_h|_Cop^p >= 2^p h (1-h)^{p/2}", w_cop);
  record(out, "tail_singular_ces_upper",
         "|f_h|_Ces^p <= 2^p (1-h)^{p/2} (1-h^{p-1})/((p-1) h^{p-1})", w_ces);
  record_value(out, "tail_singular_bound_diverges",
               "the ratio bound exceeds 1e3 by h = 1 - 2^{-10}", last_bound, last_bound > 1e3);
  return out;
}

// criterion 11
inline std::vector<Assertion> restricted_sandwich(int nh, int nt, std::uint64_t seed,
                                                  int mesh_n, double tol, const QuadConfig& q) {
  std::vector<Assertion> out;
  CorpusSpec spec;
  spec.count = nh;
  spec.seed = seed;
  spec.max_pieces = 32;
  CoupleSpec couple = CoupleSpec::restricted(Weight::one_minus_t(), 0.5, 1.0);
  Worst worst;
  int idx = 0;
  for (const StepFunction& h : make_window_corpus(spec, 0.5, 1.0)) {
    for (int i = 0; i < nt; ++i) {
      double t = std::pow(10.0, -2.0 + 2.3 * i / (nt - 1.0));
      double g = k_weighted_l1(t, h, Weight::one_minus_t(), Weight::one(), q);
      double kv = k_variational(t, h, couple, mesh_n, tol).value;
      double scale = std::max(g, 1e-300);
      worst.note((kv - g) / scale + 1e-9, "h#%d t=%.6g: K=%.17g G=%.17g", idx, t, kv, g);
      worst.note((2.0 * g - kv) / scale + 1e-9, "h#%d t=%.6g: K=%.17g 2G=%.17g", idx, t, kv,
                 2.0 * g);
    }
    ++idx;
  }
  record(out, "restricted_couple_sandwich",
         "G(t,h) <= K(t,h; L1(1-s)|[1/2,1], Ces_inf|[1/2,1]) <= 2 G(t,h)", worst);
  return out;
}

// criterion 12 pieces: constant-free equivalences reported as ratio ranges,
// including the drift of the first one under mesh doubling

inline std::vector<Assertion> endpoint_equality_range(int nf, std::uint64_t seed, int mesh_n,
                                                      double tol, const QuadConfig& q) {
  std::vector<Assertion> out;
  const double p = 2.0, theta = 0.5;
  CorpusSpec spec;
  spec.count = nf;
  spec.seed = seed;
  CoupleSpec couple = CoupleSpec::l1w_cesinf(Weight::one_minus_t());
  double rmin = std::numeric_limits<double>::infinity(), rmax = 0.0, drift = 0.0;
  for (const StepFunction& f : make_corpus(spec)) {
    KCurve kc = build_kcurve(f, couple, {1e-4, 2.0, 100}, KMethod::LP, mesh_n, tol, q);
    KCurve kc2 = build_kcurve(f, couple, {1e-4, 2.0, 100}, KMethod::LP, 2 * mesh_n, tol, q);
    double cesn = ces_norm(f, p, q);
    double r = theta_p_norm(kc, theta, p, q).value / cesn;
    double r2 = theta_p_norm(kc2, theta, p, q).value / cesn;
    rmin = std::min(rmin, r2);
    rmax = std::max(rmax, r2);
    drift = std::max(drift, std::abs(r2 - r) / r);
  }
  record_value(out, "weighted_couple_ratio_range",
               "(theta,p) over (L1(1-t),Ces_inf) vs Ces_p: max/min observed ratio",
               rmax / rmin, rmax / rmin < 1e3,
               "ratios in [" + format_g17(rmin) + ", " + format_g17(rmax) + "]");
  record_value(out, "weighted_couple_ratio_drift",
               "relative movement of the ratio when the mesh doubles", drift, drift < 0.5);
  return out;
}

inline std::vector<Assertion> halfline_equality_range(int nf, std::uint64_t seed, int mesh_n,
                                                      double tol, const QuadConfig& q) {
  std::vector<Assertion> out;
  const double p = 2.0, theta = 0.5;
  CorpusSpec spec;
  spec.count = nf;
  spec.seed = seed + 5;
  spec.domain = Domain::half_line(16.0);
  spec.support_hi = 4.0;
  CoupleSpec couple = CoupleSpec::l1_cesinf_halfline();
  double rmin = std::numeric_limits<double>::infinity(), rmax = 0.0;
  for (const StepFunction& f : make_corpus(spec)) {
    KCurve kc = build_kcurve(f, couple, {1e-4, 20.0, 140}, KMethod::LP, mesh_n, tol, q);
    double r = theta_p_norm(kc, theta, p, q).value / ces_norm(f, p, q);
    rmin = std::min(rmin, r);
    rmax = std::max(rmax, r);
  }
  record_value(out, "halfline_couple_ratio_range",
               "(theta,p) over (L1,Ces_inf)[0,inf) vs Ces_p, supp in [0,4], T=16",
               rmax / rmin, rmax / rmin < 1e3,
               "ratios in [" + format_g17(rmin) + ", " + format_g17(rmax) + "]");
  return out;
}

inline std::vector<Assertion> weighted_ces_upper_range(int nf, std::uint64_t seed, int mesh_n,
                                                       double tol, const QuadConfig& q) {
  std::vector<Assertion> out;
  const double p = 2.0, theta = 0.5;
  CorpusSpec spec;
  spec.count = nf;
  spec.seed = seed + 9;
  CoupleSpec couple = CoupleSpec::ces1_cesinf();
  double rmin = std::numeric_limits<double>::infinity(), rmax = 0.0;
  for (const StepFunction& f : make_corpus(spec)) {
    KCurve kc = build_kcurve(f, couple, {1e-4, 2.0, 100}, KMethod::LP, mesh_n, tol, q);
    double r = theta_p_norm(kc, theta, p, q).value / ces_log_norm(f, p, q);
    rmin = std::min(rmin, r);
    rmax = std::max(rmax, r);
  }
  record_value(out, "weighted_ces_ratio_range",
               "(theta,p) over (Ces_1,Ces_inf) vs Ces(p,ln): max/min observed ratio",
               rmax / rmin, rmax / rmin < 1e3,
               "ratios in [" + format_g17(rmin) + ", " + format_g17(rmax) + "]");
  return out;
}

inline std::vector<Assertion> qualitative_ranges(std::uint64_t seed, int mesh_n, double tol,
                                                 const QuadConfig& q) {
  std::vector<Assertion> out;
  for (auto part : {endpoint_equality_range(20, seed, mesh_n, tol, q),
                    halfline_equality_range(20, seed, mesh_n, tol, q),
                    weighted_ces_upper_range(20, seed, mesh_n, tol, q)})
    out.insert(out.end(), part.begin(), part.end());
  return out;
}

}  // namespace checks

enum class Suite {
  Identities,
  Embeddings,
  WeightedCouple,   // token "thm1"
  EndpointCouple,   // token "thm2"
  KSandwich,        // token "thm3"
  KSandwichMono,    // token "thm4"
  WeightedCesaro,   // token "thm5"
  ApBound,          // token "ap"
  RatioDivergence,  // token "lemma3"
  HalfLineCouple    // token "eq7_halfline"
};

inline std::optional<Suite> suite_from_token(std::string_view s) {
  if (s == "identities") return Suite::Identities;
  if (s == "embeddings") return Suite::Embeddings;
  if (s == "thm1") return Suite::WeightedCouple;
  if (s == "thm2") return Suite::EndpointCouple;
  if (s == "thm3") return Suite::KSandwich;
  if (s == "thm4") return Suite::KSandwichMono;
  if (s == "thm5") return Suite::WeightedCesaro;
  if (s == "ap") return Suite::ApBound;
  if (s == "lemma3") return Suite::RatioDivergence;
  if (s == "eq7_halfline") return Suite::HalfLineCouple;
  return std::nullopt;
}

inline const char* suite_token(Suite s) {
  switch (s) {
    case Suite::Identities: return "identities";
    case Suite::Embeddings: return "embeddings";
    case Suite::WeightedCouple: return "thm1";
    case Suite::EndpointCouple: return "thm2";
    case Suite::KSandwich: return "thm3";
    case Suite::KSandwichMono: return "thm4";
    case Suite::WeightedCesaro: return "thm5";
    case Suite::ApBound: return "ap";
    case Suite::RatioDivergence: return "lemma3";
    case Suite::HalfLineCouple: return "eq7_halfline";
  }
  return "?";
}

inline Report run_suite(Suite s, const SuiteConfig& cfg = {}) {
  Report rep;
  rep.suite = suite_token(s);
  rep.seed = cfg.seed;
  rep.config = cfg;
  auto n = [&](int dflt) { return cfg.count > 0 ? cfg.count : dflt; };
  auto append = [&](std::vector<Assertion> more) {
    rep.assertions.insert(rep.assertions.end(), more.begin(), more.end());
  };
  switch (s) {
    case Suite::Identities:
      append(checks::operator_identities(n(100), cfg.seed, cfg.quad));
      break;
    case Suite::Embeddings:
      append(checks::inequality_constants(n(200), {1.5, 2.0, 3.0, 10.0}, cfg.seed, cfg.quad));
      append(checks::embedding_chain(n(100), cfg.seed + 3, cfg.quad));
      break;
    case Suite::WeightedCouple:
      append(checks::theta_identity_norms(n(50), {1.5, 2.0, 3.0}, cfg.seed, cfg.quad));
      append(checks::discrete_sandwich(n(200), {1.5, 2.0, 4.0}, cfg.seed + 1, cfg.quad));
      append(checks::counterexample_ratio(10, 2.0, cfg.quad));
      break;
    case Suite::EndpointCouple:
      append(checks::restricted_sandwich(n(20), 10, cfg.seed, cfg.mesh_n, cfg.tol, cfg.quad));
      append(checks::endpoint_equality_range(n(20), cfg.seed + 2, cfg.mesh_n, cfg.tol,
                                             cfg.quad));
      break;
    case Suite::KSandwich:
      append(checks::k_sandwich(n(50), 20, cfg.seed, cfg.tol, cfg.quad));
      break;
    case Suite::KSandwichMono:
      append(checks::k_sandwich_monotone(n(20), 20, cfg.seed, cfg.tol, cfg.quad));
      break;
    case Suite::WeightedCesaro:
      append(checks::weighted_cesaro_constant(n(20), 2.0, cfg.seed, cfg.mesh_n, cfg.tol,
                                              cfg.quad));
      break;
    case Suite::ApBound:
      append(checks::ap_bound({1.5, 2.0, 4.0}, 200, cfg.seed, cfg.quad));
      break;
    case Suite::RatioDivergence:
      append(checks::ratio_divergence(8, 2.0, std::max(cfg.mesh_n, 512), cfg.tol, cfg.quad));
      break;
    case Suite::HalfLineCouple:
      append(checks::halfline_equality_range(n(20), cfg.seed, cfg.mesh_n, cfg.tol, cfg.quad));
      break;
  }
  return rep;
}

}  // namespace cesaro
