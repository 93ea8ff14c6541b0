#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cesaro/corpus.hpp"
#include "cesaro/families.hpp"
#include "cesaro/io.hpp"
#include "cesaro/suites.hpp"

using namespace cesaro;

TEST_CASE("tail-singular family closed forms") {
  TailSingularFamily fam(0.75);
  CHECK(fam.cesaro_value(1.0) == Catch::Approx(1.0));  // 2 sqrt(1-h) at t = 1
  CHECK(fam.copson_value(0.5) == Catch::Approx(std::log(3.0)));
  CHECK(fam.copson_value(0.75) == Catch::Approx(std::log(3.0)));
  CHECK(fam.cesaro_value(0.5) == 0.0);

  // the averaged closed form against direct quadrature of the density,
  // integrated in the distance to the singularity so octave splitting copes
  TailSingularFamily g(0.4);
  for (int i = 1; i <= 100; ++i) {
    double x = 0.4 + (0.999 - 0.4) * i / 100.0;
    double quad =
        gauss_log_split([](double v) { return 1.0 / std::sqrt(v); }, 1.0 - x, 0.6, 32);
    REQUIRE(std::abs(g.cesaro_value(x) - quad / x) <= 1e-10 * std::max(1.0, quad / x));
  }
}

TEST_CASE("tail-singular family norms against frozen quadrature oracles") {
  QuadConfig q;
  TailSingularFamily f5(0.5);
  CHECK(std::abs(f5.cop_norm(2.0, q) - 1.4876871979290750) < 1e-10);
  CHECK(std::abs(f5.ces_norm(2.0, q) - 0.46175014767952470) < 1e-10);
  TailSingularFamily f9(0.9);
  CHECK(std::abs(f9.cop_norm(3.0, q) - 0.64125863514580770) < 1e-10);
  CHECK(std::abs(f9.ces_norm(3.0, q) - 0.13829005736744594) < 1e-10);

  // bound formula spot value: (p-1) h^p / (1 - h^{p-1}) at h = 0.9, p = 2
  CHECK(TailSingularFamily(0.9).ratio_lower_bound(2.0) == Catch::Approx(8.1));

  // certified bounds on both sides
  for (double h : {0.5, 0.9, 0.99}) {
    TailSingularFamily fam(h);
    for (double p : {2.0, 3.0}) {
      REQUIRE(std::pow(fam.cop_norm(p, q), p) >= fam.cop_pth_lower(p) * (1.0 - 1e-9));
      REQUIRE(std::pow(fam.ces_norm(p, q), p) <= fam.ces_pth_upper(p) * (1.0 + 1e-9));
      double ratio = std::pow(fam.cop_norm(p, q) / fam.ces_norm(p, q), p);
      REQUIRE(ratio >= fam.ratio_lower_bound(p) * (1.0 - 1e-9));
    }
  }
}

TEST_CASE("prefix indicator family") {
  QuadConfig q;
  PrefixIndicatorFamily fam(0.25);
  CHECK(std::abs(fam.ces_norm(2.0) - ces_norm(fam.step(), 2.0, q)) < 1e-10);
  PrefixIndicatorFamily one(1.0);
  CHECK(one.ces_norm(2.0) == Catch::Approx(1.0));
  PrefixIndicatorFamily e4(std::exp(-4.0));
  CHECK(std::abs(e4.ratio_bound(2.0) - 0.18633899812498247) < 1e-12);
}

TEST_CASE("corpus is deterministic in the seed") {
  CorpusSpec spec;
  spec.count = 6;
  spec.seed = 123;
  auto a = make_corpus(spec), b = make_corpus(spec);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    REQUIRE(a[i].pieces() == b[i].pieces());
    for (std::size_t j = 0; j < a[i].pieces(); ++j) {
      REQUIRE(a[i].vals()[j] == b[i].vals()[j]);
      REQUIRE(a[i].breaks()[j] == b[i].breaks()[j]);
    }
  }
  spec.seed = 124;
  auto c = make_corpus(spec);
  bool differs = false;
  for (std::size_t i = 0; i < a.size() && !differs; ++i)
    differs = a[i].pieces() != c[i].pieces() || a[i].vals()[0] != c[i].vals()[0];
  REQUIRE(differs);
}

TEST_CASE("suite reports are reproducible and serializable") {
  SuiteConfig cfg;
  cfg.seed = 7;
  cfg.count = 5;
  Report r1 = run_suite(Suite::Identities, cfg);
  Report r2 = run_suite(Suite::Identities, cfg);
  REQUIRE(r1.pass());
  REQUIRE(r1.assertions.size() == r2.assertions.size());
  for (std::size_t i = 0; i < r1.assertions.size(); ++i)
    REQUIRE(r1.assertions[i].margin == r2.assertions[i].margin);

  nlohmann::json j = report_to_json(r1);
  CHECK(j["suite"] == "identities");
  CHECK(j["seed"] == 7);
  CHECK(j["pass"] == true);
  CHECK(j["assertions"].size() == r1.assertions.size());
  for (const auto& a : j["assertions"]) {
    CHECK(a.contains("id"));
    CHECK(a.contains("property"));
    CHECK(a.contains("detail"));
    CHECK(a.contains("margin"));
    CHECK(a.contains("pass"));
  }
}

TEST_CASE("embedding and inequality batteries on small corpora") {
  QuadConfig q;
  for (const Assertion& a : checks::inequality_constants(25, {1.5, 2.0, 3.0, 10.0}, 7, q))
    REQUIRE(a.pass);
  for (const Assertion& a : checks::embedding_chain(20, 9, q)) REQUIRE(a.pass);
}

TEST_CASE("function spec files round trip") {
  StepFunction f(Domain::half_line(4.0), {0.0, 0.5, 2.25, 4.0}, {1.5, 0.0, 3.25e-3});
  std::string text = write_function_spec(f);
  std::istringstream in(text);
  StepFunction g = read_function_spec(in);
  REQUIRE(g.domain() == f.domain());
  REQUIRE(g.pieces() == f.pieces());
  for (std::size_t i = 0; i < f.pieces(); ++i) {
    REQUIRE(g.breaks()[i + 1] == f.breaks()[i + 1]);
    REQUIRE(g.vals()[i] == f.vals()[i]);
  }
  std::istringstream bad("domain mars\n1 1\n");
  CHECK_THROWS_AS(read_function_spec(bad), std::invalid_argument);
}

TEST_CASE("kcurve csv carries the band bounds") {
  QuadConfig q;
  StepFunction one = StepFunction::constant(1.0);
  KCurve kc = build_kcurve(one, CoupleSpec::ces1_cesinf(), {0.05, 1.5, 12}, KMethod::LP, 64,
                           1e-8, q);
  std::string csv = kcurve_csv(kc, q);
  CHECK(csv.rfind("t,K,lower_bound,upper_bound\n", 0) == 0);
  // each grid row stays inside its printed bounds
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream row(line);
    double t, k, lo, hi;
    REQUIRE((row >> t >> k >> lo >> hi));
    REQUIRE(k >= lo - 1e-8);
    REQUIRE(k <= hi + 1e-8);
  }
}
