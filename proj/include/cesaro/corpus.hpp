#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "cesaro/domain.hpp"

namespace cesaro {

/// Deterministic splitmix64 generator with an explicit [0,1) mapping, so
/// seeded corpora are reproducible bit for bit across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
  double uniform(double a, double b) { return a + (b - a) * uniform(); }
  double log_uniform(double a, double b) { return std::exp(uniform(std::log(a), std::log(b))); }
  int uniform_int(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

struct CorpusSpec {
  int count = 100;
  int max_pieces = 64;
  double vmin = 1e-3;
  double vmax = 1e3;
  std::uint64_t seed = 1;
  Domain domain = Domain::unit();
  double support_hi = 0.0;  // 0 = whole domain; else breakpoints kept below this
};

/// Random step functions: piece counts uniform in 1..max_pieces, values
/// log-uniform in [vmin, vmax], breakpoints dyadic for even indices and
/// uniform otherwise (half each, exercising aligned and ragged meshes).
inline std::vector<StepFunction> make_corpus(const CorpusSpec& spec) {
  std::vector<StepFunction> out;
  out.reserve(static_cast<std::size_t>(spec.count));
  Rng rng(spec.seed);
  const double len = spec.domain.length;
  const double hi = spec.support_hi > 0.0 ? spec.support_hi : len;
  for (int c = 0; c < spec.count; ++c) {
    int pieces = rng.uniform_int(1, spec.max_pieces);
    std::vector<double> br{0.0};
    bool dyadic = (c % 2 == 0);
    for (int i = 1; i < pieces; ++i) {
      double x = dyadic ? hi * rng.uniform_int(1, 127) / 128.0 : hi * rng.uniform();
      if (x > 0.0 && x < hi) br.push_back(x);
    }
    br.push_back(hi);
    if (hi < len) br.push_back(len);
    std::sort(br.begin(), br.end());
    br.erase(std::unique(br.begin(), br.end()), br.end());
    std::vector<double> vals(br.size() - 1);
    for (std::size_t i = 0; i < vals.size(); ++i) {
      bool inside = br[i + 1] <= hi;
      vals[i] = inside ? rng.log_uniform(spec.vmin, spec.vmax) : 0.0;
    }
    out.emplace_back(spec.domain, std::move(br), std::move(vals));
  }
  return out;
}

/// Random step function supported in (lo, hi], mesh still covering the domain.
inline std::vector<StepFunction> make_window_corpus(const CorpusSpec& spec, double lo,
                                                    double hi) {
  std::vector<StepFunction> out;
  out.reserve(static_cast<std::size_t>(spec.count));
  Rng rng(spec.seed ^ 0xabcdef12345ULL);
  for (int c = 0; c < spec.count; ++c) {
    int pieces = rng.uniform_int(1, spec.max_pieces);
    std::vector<double> br{0.0, lo};
    for (int i = 1; i < pieces; ++i) {
      double x = rng.uniform(lo, hi);
      if (x > lo && x < hi) br.push_back(x);
    }
    br.push_back(hi);
    if (hi < spec.domain.length) br.push_back(spec.domain.length);
    std::sort(br.begin(), br.end());
    br.erase(std::unique(br.begin(), br.end()), br.end());
    std::vector<double> vals(br.size() - 1);
    for (std::size_t i = 0; i < vals.size(); ++i) {
      double a = br[i], b = br[i + 1];
      bool inside = a >= lo && b <= hi;
      vals[i] = inside ? rng.log_uniform(spec.vmin, spec.vmax) : 0.0;
    }
    out.emplace_back(spec.domain, std::move(br), std::move(vals));
  }
  return out;
}

inline std::vector<Seq> make_seq_corpus(int count, int max_len, double vmin, double vmax,
                                        std::uint64_t seed) {
  std::vector<Seq> out;
  out.reserve(static_cast<std::size_t>(count));
  Rng rng(seed ^ 0x5e9c04b05ULL);
  for (int c = 0; c < count; ++c) {
    int n = rng.uniform_int(1, max_len);
    std::vector<double> v(static_cast<std::size_t>(n));
    for (double& x : v) x = rng.log_uniform(vmin, vmax);
    // sprinkle a few exact zeros to exercise zero tails
    if (n > 3 && rng.uniform() < 0.3) v[static_cast<std::size_t>(rng.uniform_int(0, n - 1))] = 0.0;
    out.emplace_back(std::move(v));
  }
  return out;
}

}  // namespace cesaro
