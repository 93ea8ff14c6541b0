#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "cesaro/corpus.hpp"
#include "cesaro/domain.hpp"
#include "cesaro/norms.hpp"

using namespace cesaro;

namespace {

double lp_power_mass(const StepFunction& f, double p) {
  double acc = 0.0;
  for (std::size_t i = 0; i < f.pieces(); ++i)
    acc += std::pow(f.vals()[i], p) * (f.breaks()[i + 1] - f.breaks()[i]);
  return acc;
}

double measure_above(const StepFunction& f, double level) {
  double acc = 0.0;
  for (std::size_t i = 0; i < f.pieces(); ++i)
    if (f.vals()[i] > level) acc += f.breaks()[i + 1] - f.breaks()[i];
  return acc;
}

}  // namespace

TEST_CASE("step function validation") {
  CHECK_THROWS_AS(StepFunction(Domain::unit(), {0.0, 1.0}, {}), std::invalid_argument);
  CHECK_THROWS_AS(StepFunction(Domain::unit(), {0.0, 0.5}, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(StepFunction(Domain::unit(), {0.1, 1.0}, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(StepFunction(Domain::unit(), {0.0, 0.5, 0.5, 1.0}, {1.0, 2.0, 3.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(StepFunction(Domain::unit(), {0.0, 1.0}, {-1.0}), std::invalid_argument);
  CHECK_THROWS_AS(Domain::half_line(0.0), std::invalid_argument);
}

TEST_CASE("mass and evaluation") {
  StepFunction f(Domain::unit(), {0.0, 0.25, 1.0}, {2.0, 0.5});
  CHECK(f.mass() == Catch::Approx(2.0 * 0.25 + 0.5 * 0.75));
  CHECK(f.mass_up_to(0.5) == Catch::Approx(0.5 + 0.125));
  CHECK(f.value_at(0.25) == 2.0);
  CHECK(f.value_at(0.26) == 0.5);
  CHECK(f.support_end() == 1.0);
  StepFunction g(Domain::unit(), {0.0, 0.5, 1.0}, {1.0, 0.0});
  CHECK(g.support_end() == 0.5);
}

TEST_CASE("rearrange examples") {
  // single block translates to the origin
  StepFunction f = StepFunction::indicator(0.5, 1.0);
  StepFunction r = rearrange(f);
  CHECK(r.value_at(0.25) == 1.0);
  CHECK(r.value_at(0.75) == 0.0);
  CHECK(r.mass() == Catch::Approx(0.5));

  // already nonincreasing is untouched pointwise
  StepFunction c = StepFunction::constant(1.0);
  CHECK(rearrange(c).value_at(0.3) == 1.0);

  // three blocks sort by value
  StepFunction t(Domain::unit(), {0.0, 1.0 / 3, 2.0 / 3, 1.0}, {1.0, 3.0, 2.0});
  StepFunction rt = rearrange(t);
  CHECK(rt.vals()[0] == 3.0);
  CHECK(rt.vals()[1] == 2.0);
  CHECK(rt.vals()[2] == 1.0);
}

TEST_CASE("rearrange properties over a random corpus") {
  CorpusSpec spec;
  spec.count = 40;
  spec.seed = 11;
  for (const StepFunction& f : make_corpus(spec)) {
    StepFunction r = rearrange(f);
    for (double p : {1.0, 2.0, 3.0}) {
      double a = lp_power_mass(f, p), b = lp_power_mass(r, p);
      REQUIRE(std::abs(a - b) <= 1e-12 * std::max(a, 1.0));
    }
    // equimeasurable: distribution functions agree at every value level
    for (double level : f.vals())
      REQUIRE(std::abs(measure_above(f, level) - measure_above(r, level)) <= 1e-12);
    // nonincreasing and idempotent
    for (std::size_t i = 0; i + 1 < r.pieces(); ++i) REQUIRE(r.vals()[i] >= r.vals()[i + 1]);
    StepFunction rr = rearrange(r);
    for (std::size_t i = 0; i < r.pieces(); ++i) REQUIRE(rr.vals()[i] == r.vals()[i]);
  }
}

TEST_CASE("tau pair") {
  TauPair a = tau_pair(1.0);
  CHECK(a.tau1 == Catch::Approx(1.0));
  CHECK(a.tau2 == Catch::Approx(std::exp(-1.0)));

  TauPair b = tau_pair(0.5);
  CHECK(std::abs(b.tau1 - 0.29530805457482062) < 1e-14);
  CHECK(std::abs(b.tau2 - 0.60653065971263342) < 1e-14);

  TauPair tiny = tau_pair(1e-12);
  CHECK(tiny.tau1 < 1e-12);
  CHECK(tiny.tau2 > 1.0 - 1e-11);

  CHECK_THROWS_AS(tau_pair(0.0), std::domain_error);
  CHECK_THROWS_AS(tau_pair(1.5), std::domain_error);
}

TEST_CASE("t_zero against an independent bisection") {
  double lo = 0.5, hi = 1.0;
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    double diff = mid / (1.0 - std::log(mid)) - std::exp(-mid);
    (diff < 0.0 ? lo : hi) = mid;
  }
  double oracle = 0.5 * (lo + hi);
  double t0 = t_zero();
  CHECK(std::abs(t0 - oracle) < 1e-12);
  CHECK(std::abs(t0 - 0.68904506078881732) < 1e-10);
  CHECK(t0 > 0.5);
  CHECK(t0 < 1.0);
  TauPair tp = tau_pair(t0);
  CHECK(std::abs(tp.tau1 - tp.tau2) < 1e-11);

  // tau1 <= t everywhere; tau1 < tau2 exactly below t0
  for (int i = 1; i <= 1000; ++i) {
    double t = i / 1000.0;
    TauPair x = tau_pair(t);
    REQUIRE(x.tau1 <= t + 1e-15);
    if (std::abs(t - t0) > 1e-9) REQUIRE((x.tau1 < x.tau2) == (t < t0));
  }
}

TEST_CASE("common refinement") {
  StepFunction f = StepFunction::constant(2.0);
  StepFunction g(Domain::unit(), {0.0, 0.5, 1.0}, {1.0, 3.0});
  auto [fr, gr] = common_refinement(f, g);
  CHECK(fr.pieces() == 2);
  CHECK(gr.pieces() == 2);
  CHECK(fr.value_at(0.7) == 2.0);
  CHECK(gr.value_at(0.7) == 3.0);

  StepFunction a(Domain::unit(), {0.0, 1.0 / 3, 1.0}, {1.0, 2.0});
  StepFunction b(Domain::unit(), {0.0, 2.0 / 3, 1.0}, {5.0, 6.0});
  auto [ar, br] = common_refinement(a, b);
  CHECK(ar.pieces() == 3);
  CHECK(ar.breaks()[1] == Catch::Approx(1.0 / 3));
  CHECK(ar.breaks()[2] == Catch::Approx(2.0 / 3));

  StepFunction h(Domain::half_line(2.0), {0.0, 1.0, 2.0}, {1.0, 0.0});
  CHECK_THROWS_AS(common_refinement(f, h), std::invalid_argument);

  // refinement never moves any norm
  CorpusSpec spec;
  spec.count = 10;
  spec.seed = 3;
  auto corpus = make_corpus(spec);
  for (std::size_t i = 0; i + 1 < corpus.size(); i += 2) {
    auto [x, y] = common_refinement(corpus[i], corpus[i + 1]);
    REQUIRE(std::abs(x.mass() - corpus[i].mass()) <= 1e-14 * std::max(1.0, corpus[i].mass()));
    double n0 = ces_norm(corpus[i], 2.0), n1 = ces_norm(x, 2.0);
    REQUIRE(std::abs(n0 - n1) <= 1e-12 * std::max(1.0, n0));
  }
}

TEST_CASE("restrict_to masks outside the window") {
  StepFunction f = StepFunction::constant(2.0);
  StepFunction r = restrict_to(f, 0.25, 0.5);
  CHECK(r.value_at(0.3) == 2.0);
  CHECK(r.value_at(0.2) == 0.0);
  CHECK(r.value_at(0.7) == 0.0);
  CHECK(r.mass() == Catch::Approx(0.5));
}

TEST_CASE("sequences") {
  CHECK_THROWS_AS(Seq(std::vector<double>{}), std::invalid_argument);
  CHECK_THROWS_AS(Seq(std::vector<double>{-1.0}), std::invalid_argument);
  Seq x(std::vector<double>{1.0, 2.0, 0.0});
  CHECK(x.sum() == 3.0);
}
