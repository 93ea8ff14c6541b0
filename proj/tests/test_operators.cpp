#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "cesaro/corpus.hpp"
#include "cesaro/operators.hpp"

using namespace cesaro;

TEST_CASE("cesaro image closed forms") {
  PiecewiseSmooth c1 = cesaro_transform(StepFunction::constant(1.0));
  for (double x : {0.1, 0.5, 1.0}) CHECK(c1(x) == Catch::Approx(1.0));

  PiecewiseSmooth c2 = cesaro_transform(StepFunction::indicator(0.0, 0.5));
  CHECK(c2(0.3) == Catch::Approx(1.0));
  CHECK(c2(0.8) == Catch::Approx(0.5 / 0.8));
}

TEST_CASE("copson image closed forms") {
  PiecewiseSmooth s1 = copson_transform(StepFunction::constant(1.0));
  for (double x : {0.1, 0.5, 0.9}) CHECK(s1(x) == Catch::Approx(std::log(1.0 / x)));

  PiecewiseSmooth s2 = copson_transform(StepFunction::indicator(0.5, 1.0));
  CHECK(s2(0.7) == Catch::Approx(std::log(1.0 / 0.7)));
  CHECK(s2(0.3) == Catch::Approx(std::log(2.0)));

  // integral of C*f over [0,1] equals the mass (Fubini), here exactly
  CHECK(s1.integral(0.0, 1.0) == Catch::Approx(1.0));
  CHECK(s2.integral(0.0, 1.0) == Catch::Approx(0.5));
}

TEST_CASE("composition identities for the constant function") {
  StepFunction f = StepFunction::constant(1.0);
  PiecewiseSmooth cf = cesaro_transform(f), sf = copson_transform(f);
  for (double x : {0.05, 0.3, 0.9}) {
    CHECK(cesaro_of(sf, x) == Catch::Approx(1.0 + std::log(1.0 / x)));
    CHECK(copson_of(cf, x) == Catch::Approx(std::log(1.0 / x)));
  }
}

TEST_CASE("composition identities on random functions") {
  CorpusSpec spec;
  spec.count = 15;
  spec.seed = 21;
  for (const StepFunction& f : make_corpus(spec)) {
    PiecewiseSmooth cf = cesaro_transform(f), sf = copson_transform(f);
    double mass = f.mass();
    for (double x : {0.02, 0.17, 0.55, 0.93}) {
      double both = cf(x) + sf(x);
      REQUIRE(std::abs(cesaro_of(sf, x) - both) <= 1e-12 * std::max(both, 1.0));
      REQUIRE(std::abs(copson_of(cf, x) - (both - mass)) <= 1e-12 * std::max(both + mass, 1.0));
    }
  }

  spec.domain = Domain::half_line(8.0);
  spec.seed = 22;
  for (const StepFunction& f : make_corpus(spec)) {
    PiecewiseSmooth cf = cesaro_transform(f), sf = copson_transform(f);
    for (double x : {0.05, 1.3, 6.5, 12.0}) {  // the last point is past the mesh
      double both = cf(x) + sf(x);
      REQUIRE(std::abs(copson_of(cf, x) - both) <= 1e-12 * std::max(both, 1.0));
      REQUIRE(std::abs(cesaro_of(sf, x) - both) <= 1e-12 * std::max(both, 1.0));
    }
  }
}

TEST_CASE("discrete operators") {
  Seq e1(std::vector<double>{1.0});
  Seq c = discrete_cesaro(e1, 4);
  CHECK(c.vals == std::vector<double>{1.0, 0.5, 1.0 / 3.0, 0.25});

  Seq ones(std::vector<double>{1.0, 1.0, 1.0});
  Seq c2 = discrete_cesaro(ones, 5);
  CHECK(c2.vals[0] == 1.0);
  CHECK(c2.vals[2] == 1.0);
  CHECK(c2.vals[3] == Catch::Approx(0.75));
  CHECK(c2.vals[4] == Catch::Approx(0.6));

  Seq s = discrete_copson(ones, 5);
  CHECK(s.vals[0] == Catch::Approx(11.0 / 6.0));
  CHECK(s.vals[1] == Catch::Approx(5.0 / 6.0));
  CHECK(s.vals[2] == Catch::Approx(1.0 / 3.0));
  CHECK(s.vals[3] == 0.0);

  Seq zero(std::vector<double>{0.0, 0.0});
  for (double v : discrete_cesaro(zero, 4).vals) CHECK(v == 0.0);

  // Cd(Cd* x)(n) = Cd x(n) + Cd* x(n+1); spot value at n = 2 for (1,1,1)
  Seq lhs = discrete_cesaro(discrete_copson(ones, 8), 8);
  Seq cd = discrete_cesaro(ones, 8);
  Seq cs = discrete_copson(ones, 9);
  CHECK(lhs.vals[1] == Catch::Approx(1.0 + 1.0 / 3.0));
  for (int n = 1; n <= 7; ++n)
    REQUIRE(std::abs(lhs.vals[n - 1] - (cd.vals[n - 1] + cs.vals[n])) < 1e-15);
}

TEST_CASE("maximal function examples and oracle") {
  StepFunction one = StepFunction::constant(1.0);
  CHECK(maximal(one, 0.4) == Catch::Approx(1.0));

  StepFunction f = StepFunction::indicator(0.0, 0.5);
  CHECK(maximal(f, 0.25) == Catch::Approx(1.0));
  CHECK(maximal(f, 0.75) == Catch::Approx(2.0 / 3.0));

  CorpusSpec spec;
  spec.count = 8;
  spec.max_pieces = 12;
  spec.seed = 31;
  for (const StepFunction& g : make_corpus(spec)) {
    for (double x : {0.21, 0.63}) {
      double exact = maximal(g, x);
      // brute force over a grid that contains the breakpoints: must agree
      std::vector<double> grid(g.breaks().begin(), g.breaks().end());
      for (int i = 0; i <= 200; ++i) grid.push_back(i / 200.0);
      grid.push_back(x);
      std::sort(grid.begin(), grid.end());
      double brute = 0.0;
      for (double a : grid)
        for (double b : grid)
          if (a <= x && b >= x && b > a)
            brute = std::max(brute, (g.mass_up_to(b) - g.mass_up_to(a)) / (b - a));
      REQUIRE(std::abs(exact - brute) <= 1e-12 * std::max(1.0, brute));
      REQUIRE(exact >= g.value_at(x) - 1e-12 * std::max(1.0, g.value_at(x)));
      double scaled = maximal(g.scaled(3.0), x);
      REQUIRE(std::abs(scaled - 3.0 * exact) <= 1e-12 * std::max(1.0, scaled));
    }
  }
}
