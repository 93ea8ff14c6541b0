#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace cesaro {

/// Linear program behind the variational K-functional on a fixed mesh:
///
///   minimize   sum_i cost_i * (ub_i - m_i) + t * z
///   subject to 0 <= m_i <= ub_i   and one of
///     prefix:   sum_{i<=j} m_i <= z * pos_j   for every j   (Ces_inf epigraph)
///     cellwise: m_i <= z * len_i              for every i   (L_inf epigraph)
///
/// m_i is the mass the X1 part takes in cell i, cost_i the X0 price per unit
/// mass. For fixed z the feasible region is cut out by a laminar family
/// (prefixes plus boxes), so a greedy saturation in decreasing cost order is
/// exact; the optimal value is then a convex piecewise-linear function of z,
/// minimized by golden-section. Both stages are exact up to the scalar search
/// bracket, which is reported.
struct ChainLP {
  std::vector<double> len;   // cell lengths
  std::vector<double> ub;    // mass capacity per cell (f_i * len_i)
  std::vector<double> cost;  // X0 cost per unit mass (>= 0)
  std::vector<double> pos;   // prefix positions (right cell ends), increasing
  bool cellwise = false;     // X1 is a sup of cell values, not prefix averages
};

struct ChainLPResult {
  double value = 0.0;          // objective at the returned witness
  double z = 0.0;              // achieved X1 norm of the witness
  std::vector<double> mass;    // witness m
  double bracket = 0.0;        // width of the final z bracket
  double feas_residual = 0.0;  // max constraint violation of the witness
};

namespace detail {

// segment tree with range add / range min, for the greedy in general order
class MinAddTree {
 public:
  explicit MinAddTree(const std::vector<double>& init) {
    n_ = 1;
    while (n_ < init.size()) n_ *= 2;
    mn_.assign(2 * n_, std::numeric_limits<double>::infinity());
    lz_.assign(2 * n_, 0.0);
    for (std::size_t i = 0; i < init.size(); ++i) mn_[n_ + i] = init[i];
    for (std::size_t i = n_; i-- > 1;) mn_[i] = std::min(mn_[2 * i], mn_[2 * i + 1]);
  }
  void add(std::size_t l, std::size_t r, double v) { add(1, 0, n_, l, r + 1, v); }
  double min(std::size_t l, std::size_t r) const { return min(1, 0, n_, l, r + 1); }

 private:
  void add(std::size_t node, std::size_t lo, std::size_t hi, std::size_t l, std::size_t r,
           double v) {
    if (r <= lo || hi <= l) return;
    if (l <= lo && hi <= r) {
      mn_[node] += v;
      lz_[node] += v;
      return;
    }
    std::size_t mid = (lo + hi) / 2;
    add(2 * node, lo, mid, l, r, v);
    add(2 * node + 1, mid, hi, l, r, v);
    mn_[node] = std::min(mn_[2 * node], mn_[2 * node + 1]) + lz_[node];
  }
  double min(std::size_t node, std::size_t lo, std::size_t hi, std::size_t l,
             std::size_t r) const {
    if (r <= lo || hi <= l) return std::numeric_limits<double>::infinity();
    if (l <= lo && hi <= r) return mn_[node];
    std::size_t mid = (lo + hi) / 2;
    return std::min(min(2 * node, lo, mid, l, r), min(2 * node + 1, mid, hi, l, r)) + lz_[node];
  }

  std::size_t n_;
  std::vector<double> mn_;
  mutable std::vector<double> lz_;
};

}  // namespace detail

class ChainLPSolver {
 public:
  explicit ChainLPSolver(ChainLP lp) : lp_(std::move(lp)) {
    const std::size_t n = lp_.ub.size();
    if (lp_.len.size() != n || lp_.cost.size() != n || (!lp_.cellwise && lp_.pos.size() != n))
      throw std::invalid_argument("ChainLP: inconsistent sizes");
    spatial_order_ = std::is_sorted(lp_.cost.begin(), lp_.cost.end(), std::greater<double>());
    if (!spatial_order_) {
      order_.resize(n);
      std::iota(order_.begin(), order_.end(), std::size_t{0});
      std::stable_sort(order_.begin(), order_.end(),
                       [&](std::size_t a, std::size_t b) { return lp_.cost[a] > lp_.cost[b]; });
    }
    total_cost_ = 0.0;
    for (std::size_t i = 0; i < n; ++i) total_cost_ += lp_.cost[i] * lp_.ub[i];
  }

  /// Largest useful z: the X1 norm of the full mass vector.
  double z_max() const {
    double best = 0.0;
    if (lp_.cellwise) {
      for (std::size_t i = 0; i < lp_.ub.size(); ++i)
        best = std::max(best, lp_.ub[i] / lp_.len[i]);
    } else {
      double run = 0.0;
      for (std::size_t i = 0; i < lp_.ub.size(); ++i) {
        run += lp_.ub[i];
        best = std::max(best, run / lp_.pos[i]);
      }
    }
    return best;
  }

  /// Best mass vector for a fixed z (greedy over the laminar system).
  std::vector<double> best_mass(double z) const {
    const std::size_t n = lp_.ub.size();
    std::vector<double> m(n, 0.0);
    if (lp_.cellwise) {
      for (std::size_t i = 0; i < n; ++i) m[i] = std::min(lp_.ub[i], z * lp_.len[i]);
      return m;
    }
    if (spatial_order_) {
      // nonincreasing cost: saturate left to right; the binding slack is at
      // the current prefix position because z*pos grows with j
      double placed = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        double cap = z * lp_.pos[i] - placed;
        m[i] = std::clamp(cap, 0.0, lp_.ub[i]);
        placed += m[i];
      }
      return m;
    }
    std::vector<double> slack(n);
    for (std::size_t i = 0; i < n; ++i) slack[i] = z * lp_.pos[i];
    detail::MinAddTree tree(slack);
    for (std::size_t idx : order_) {
      double cap = tree.min(idx, n - 1);
      double take = std::clamp(cap, 0.0, lp_.ub[idx]);
      if (take > 0.0) {
        m[idx] = take;
        tree.add(idx, n - 1, -take);
      }
    }
    return m;
  }

  double objective_bound(double z, double t) const {
    std::vector<double> m = best_mass(z);
    double kept = total_cost_;
    for (std::size_t i = 0; i < m.size(); ++i) kept -= lp_.cost[i] * m[i];
    return kept + t * z;
  }

  ChainLPResult solve(double t, double tol) const {
    const double zhi = z_max();
    double lo = 0.0, hi = zhi;
    const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = objective_bound(x1, t);
    double f2 = objective_bound(x2, t);
    const double width_target = std::max(1e-15 * (1.0 + zhi), 1e-3 * tol * (1.0 + zhi));
    int it = 0;
    while (hi - lo > width_target && it++ < 140) {
      if (f1 <= f2) {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - inv_phi * (hi - lo);
        f1 = objective_bound(x1, t);
      } else {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + inv_phi * (hi - lo);
        f2 = objective_bound(x2, t);
      }
    }
    double zstar = (f1 <= f2) ? x1 : x2;
    // boundary candidates: keep everything in X0, or give everything to X1
    double f0 = objective_bound(0.0, t);
    double fz = objective_bound(zhi, t);
    if (f0 <= std::min(f1, f2) && f0 <= fz) zstar = 0.0;
    if (fz < std::min({f1, f2, f0})) zstar = zhi;

    ChainLPResult res;
    res.mass = best_mass(zstar);
    res.bracket = hi - lo;
    double kept = total_cost_;
    for (std::size_t i = 0; i < res.mass.size(); ++i) kept -= lp_.cost[i] * res.mass[i];
    res.z = achieved_norm(res.mass);
    res.value = kept + t * res.z;
    res.feas_residual = feasibility_residual(res.mass, zstar);
    return res;
  }

  double achieved_norm(const std::vector<double>& m) const {
    double best = 0.0;
    if (lp_.cellwise) {
      for (std::size_t i = 0; i < m.size(); ++i) best = std::max(best, m[i] / lp_.len[i]);
    } else {
      double run = 0.0;
      for (std::size_t i = 0; i < m.size(); ++i) {
        run += m[i];
        best = std::max(best, run / lp_.pos[i]);
      }
    }
    return best;
  }

  double feasibility_residual(const std::vector<double>& m, double z) const {
    double r = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i)
      r = std::max({r, -m[i], m[i] - lp_.ub[i]});
    if (lp_.cellwise) {
      for (std::size_t i = 0; i < m.size(); ++i) r = std::max(r, m[i] - z * lp_.len[i]);
    } else {
      double run = 0.0;
      for (std::size_t i = 0; i < m.size(); ++i) {
        run += m[i];
        r = std::max(r, run - z * lp_.pos[i]);
      }
    }
    return r;
  }

 private:
  ChainLP lp_;
  bool spatial_order_ = true;
  std::vector<std::size_t> order_;
  double total_cost_ = 0.0;
};

}  // namespace cesaro
