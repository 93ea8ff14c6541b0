#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cesaro {

// Thrown when a requested quantity is infinite (trivial space, divergent tail).
struct DivergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class DomainKind { UnitInterval, HalfLine };

struct Domain {
  DomainKind kind = DomainKind::UnitInterval;
  double length = 1.0;  // right end of the mesh; truncation T on the half-line

  static Domain unit() { return {}; }
  static Domain half_line(double t_max) {
    if (!(t_max > 0.0) || !std::isfinite(t_max))
      throw std::invalid_argument("Domain: truncation must be positive and finite");
    return {DomainKind::HalfLine, t_max};
  }
  bool is_unit() const { return kind == DomainKind::UnitInterval; }
  bool is_half_line() const { return kind == DomainKind::HalfLine; }
  friend bool operator==(const Domain&, const Domain&) = default;
};

/// Nonnegative piecewise-constant function. Value vals[i] holds on
/// (breaks[i], breaks[i+1]]; breaks[0] == 0 and breaks.back() == domain length.
/// On the half-line the function vanishes beyond the mesh (compact support).
class StepFunction {
 public:
  StepFunction(Domain dom, std::vector<double> breaks, std::vector<double> vals)
      : domain_(dom), breaks_(std::move(breaks)), vals_(std::move(vals)) {
    if (vals_.empty() || breaks_.size() != vals_.size() + 1)
      throw std::invalid_argument("StepFunction: need n+1 breaks for n pieces, n >= 1");
    if (breaks_.front() != 0.0)
      throw std::invalid_argument("StepFunction: mesh must start at 0");
    if (breaks_.back() != domain_.length)
      throw std::invalid_argument("StepFunction: mesh must end at the domain length");
    for (std::size_t i = 0; i + 1 < breaks_.size(); ++i)
      if (!(breaks_[i] < breaks_[i + 1]))
        throw std::invalid_argument("StepFunction: breaks must be strictly increasing");
    for (double v : vals_)
      if (!(v >= 0.0) || !std::isfinite(v))
        throw std::invalid_argument("StepFunction: values must be nonnegative and finite");
    prefix_.resize(breaks_.size());
    prefix_[0] = 0.0;
    for (std::size_t i = 0; i < vals_.size(); ++i)
      prefix_[i + 1] = prefix_[i] + vals_[i] * (breaks_[i + 1] - breaks_[i]);
  }

  static StepFunction constant(double v, Domain dom = Domain::unit()) {
    return StepFunction(dom, {0.0, dom.length}, {v});
  }

  /// Indicator of (a, b], as a step function on the full mesh.
  static StepFunction indicator(double a, double b, Domain dom = Domain::unit()) {
    if (!(0.0 <= a && a < b && b <= dom.length))
      throw std::invalid_argument("indicator: need 0 <= a < b <= length");
    std::vector<double> br{0.0};
    std::vector<double> va;
    if (a > 0.0) { br.push_back(a); va.push_back(0.0); }
    br.push_back(b); va.push_back(1.0);
    if (b < dom.length) { br.push_back(dom.length); va.push_back(0.0); }
    return StepFunction(dom, std::move(br), std::move(va));
  }

  const Domain& domain() const { return domain_; }
  std::span<const double> breaks() const { return breaks_; }
  std::span<const double> vals() const { return vals_; }
  std::size_t pieces() const { return vals_.size(); }

  /// Piece value at x in (0, length]; x == 0 returns the first piece's value.
  double value_at(double x) const {
    if (!(x >= 0.0 && x <= domain_.length))
      throw std::invalid_argument("value_at: point outside the mesh");
    if (x <= breaks_[1]) return vals_[0];
    auto it = std::lower_bound(breaks_.begin(), breaks_.end(), x);
    return vals_[static_cast<std::size_t>(it - breaks_.begin()) - 1];
  }

  double mass() const { return prefix_.back(); }

  /// Exact primitive F(x) = integral of f over (0, min(x, length)].
  double mass_up_to(double x) const {
    if (x <= 0.0) return 0.0;
    if (x >= domain_.length) return prefix_.back();
    auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x);
    std::size_t i = static_cast<std::size_t>(it - breaks_.begin()) - 1;
    return prefix_[i] + vals_[i] * (x - breaks_[i]);
  }

  /// End of the support: the last breakpoint with nonzero value to its left.
  double support_end() const {
    for (std::size_t i = vals_.size(); i-- > 0;)
      if (vals_[i] > 0.0) return breaks_[i + 1];
    return 0.0;
  }

  double max_value() const { return *std::max_element(vals_.begin(), vals_.end()); }

  StepFunction scaled(double c) const {
    if (!(c >= 0.0)) throw std::invalid_argument("scaled: factor must be nonnegative");
    std::vector<double> v(vals_.begin(), vals_.end());
    for (double& x : v) x *= c;
    return StepFunction(domain_, breaks_, std::move(v));
  }

  /// Same function on the mesh refined by the given interior points.
  StepFunction refined(std::span<const double> extra) const {
    std::vector<double> merged(breaks_.begin(), breaks_.end());
    for (double x : extra)
      if (x > 0.0 && x < domain_.length) merged.push_back(x);
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    std::vector<double> v(merged.size() - 1);
    std::size_t src = 0;
    for (std::size_t i = 0; i + 1 < merged.size(); ++i) {
      while (breaks_[src + 1] < merged[i + 1]) ++src;
      v[i] = vals_[src];
    }
    return StepFunction(domain_, std::move(merged), std::move(v));
  }

 private:
  Domain domain_;
  std::vector<double> breaks_;
  std::vector<double> vals_;
  std::vector<double> prefix_;
};

/// Non-increasing rearrangement: sort the pieces by value, largest first.
inline StepFunction rearrange(const StepFunction& f) {
  std::vector<std::pair<double, double>> blocks;  // (value, length)
  blocks.reserve(f.pieces());
  for (std::size_t i = 0; i < f.pieces(); ++i)
    blocks.emplace_back(f.vals()[i], f.breaks()[i + 1] - f.breaks()[i]);
  std::stable_sort(blocks.begin(), blocks.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<double> br{0.0}, va;
  br.reserve(blocks.size() + 1);
  va.reserve(blocks.size());
  double x = 0.0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    // accumulate lengths so the mesh stays exact at the right end
    x = (i + 1 == blocks.size()) ? f.domain().length : x + blocks[i].second;
    br.push_back(x);
    va.push_back(blocks[i].first);
  }
  return StepFunction(f.domain(), std::move(br), std::move(va));
}

/// Both inputs re-expressed on the merged mesh. Pointwise unchanged.
inline std::pair<StepFunction, StepFunction> common_refinement(const StepFunction& f,
                                                               const StepFunction& g) {
  if (!(f.domain() == g.domain()))
    throw std::invalid_argument("common_refinement: domain mismatch");
  return {f.refined(g.breaks()), g.refined(f.breaks())};
}

/// f multiplied by the indicator of (a, b]; mesh refined at a and b.
inline StepFunction restrict_to(const StepFunction& f, double a, double b) {
  const double pts[2] = {a, b};
  StepFunction r = f.refined(pts);
  std::vector<double> v(r.vals().begin(), r.vals().end());
  for (std::size_t i = 0; i < v.size(); ++i) {
    double mid = 0.5 * (r.breaks()[i] + r.breaks()[i + 1]);
    if (!(mid > a && mid < b)) v[i] = 0.0;
  }
  return StepFunction(r.domain(), {r.breaks().begin(), r.breaks().end()}, std::move(v));
}

// ---- splitting geometry: tau1(t) = t/ln(e/t), tau2(t) = e^{-t} on (0, 1] ----

struct TauPair {
  double t;
  double tau1;
  double tau2;
};

inline TauPair tau_pair(double t) {
  if (!(t > 0.0 && t <= 1.0)) throw std::domain_error("tau_pair: t must lie in (0, 1]");
  return {t, t / (1.0 - std::log(t)), std::exp(-t)};
}

/// Unique root of tau1 = tau2 in (0, 1); tau1 < tau2 exactly on (0, t_zero).
inline double t_zero() {
  static const double root = [] {
    double lo = 0.5, hi = 1.0;  // sign change: tau1 - tau2 < 0 at 0.5, > 0 at 1
    for (int i = 0; i < 80; ++i) {
      double mid = 0.5 * (lo + hi);
      TauPair tp = tau_pair(mid);
      (tp.tau1 < tp.tau2 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  }();
  return root;
}

/// Finitely supported nonnegative sequence a_1..a_N (zero tail implied).
struct Seq {
  std::vector<double> vals;

  explicit Seq(std::vector<double> v) : vals(std::move(v)) {
    if (vals.empty()) throw std::invalid_argument("Seq: need at least one term");
    for (double x : vals)
      if (!(x >= 0.0) || !std::isfinite(x))
        throw std::invalid_argument("Seq: terms must be nonnegative and finite");
  }
  std::size_t size() const { return vals.size(); }
  double sum() const {
    double s = 0.0;
    for (double x : vals) s += x;
    return s;
  }
};

}  // namespace cesaro
