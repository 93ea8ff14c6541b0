#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "cesaro/corpus.hpp"
#include "cesaro/interpolation.hpp"

using namespace cesaro;

TEST_CASE("discrete theta norm closed checks") {
  QuadConfig q;
  Seq e1(std::vector<double>{1.0});
  KCurve kc = build_kcurve(e1, {1e-3, 8.0, 80});
  for (double p : {1.5, 2.0, 4.0}) {
    double v = theta_p_norm(kc, 1.0 - 1.0 / p, p, q).value;
    double expect = std::pow(conjugate_exponent(p), 1.0 / p);
    REQUIRE(std::abs(v - expect) < 1e-12 * expect);
  }
  CHECK(theta_inf_norm(kc, 0.5) == Catch::Approx(1.0));
  CHECK(theta_inf_norm(kc, 0.0) == Catch::Approx(1.0));
  CHECK(theta_inf_norm(kc, 1.0) == Catch::Approx(1.0));
}

TEST_CASE("identity norm for the weighted couple") {
  QuadConfig q;
  StepFunction one = StepFunction::constant(1.0);
  CHECK(std::abs(cesaro_copson_theta_norm(one, 2.0, q) - std::sqrt(6.0)) < 1e-10);
  StepFunction zero = StepFunction::constant(0.0);
  CHECK(cesaro_copson_theta_norm(zero, 2.0, q) == 0.0);

  // the sampled-curve route reproduces the identity
  CoupleSpec couple = CoupleSpec::weighted_l1(Weight::one(), Weight::inv_t());
  KCurve kc = build_kcurve(one, couple, {1e-4, 4.0, 120}, KMethod::ClosedForm, 0, 1e-9, q);
  double via_curve = theta_p_norm(kc, 0.5, 2.0, q).value;
  CHECK(std::abs(via_curve - std::sqrt(6.0)) < 1e-7);
}

TEST_CASE("identity norm on the half-line couple") {
  QuadConfig q;
  CorpusSpec spec;
  spec.count = 8;
  spec.seed = 61;
  spec.domain = Domain::half_line(8.0);
  CoupleSpec couple = CoupleSpec::weighted_l1(Weight::one(), Weight::inv_t());
  for (const StepFunction& f : make_corpus(spec)) {
    for (double p : {1.5, 2.0}) {
      KCurve kc = build_kcurve(f, couple, {1e-4, 16.0, 140}, KMethod::ClosedForm, 0, 1e-9, q);
      double lhs = theta_p_norm(kc, 1.0 - 1.0 / p, p, q).value;
      double rhs = cesaro_copson_theta_norm(f, p, q);
      REQUIRE(std::abs(lhs - rhs) <= 2e-7 * rhs);
      // two-sided comparisons with the Cesaro and Copson norms
      double cesn = ces_norm(f, p, q), copn = cop_norm(f, p, q);
      REQUIRE(rhs >= cesn * (1.0 - 1e-9));
      REQUIRE(rhs <= p * cesn * (1.0 + 1e-9));
      REQUIRE(rhs >= copn * (1.0 - 1e-9));
      REQUIRE(rhs <= conjugate_exponent(p) * copn * (1.0 + 1e-9));
    }
  }
}

TEST_CASE("homogeneity of the theta norms") {
  QuadConfig q;
  StepFunction f(Domain::unit(), {0.0, 0.3, 1.0}, {2.0, 0.7});
  CoupleSpec couple = CoupleSpec::weighted_l1(Weight::one(), Weight::inv_t());
  KCurve a = build_kcurve(f, couple, {1e-4, 4.0, 100}, KMethod::ClosedForm, 0, 1e-9, q);
  KCurve b = build_kcurve(f.scaled(3.5), couple, {1e-4, 4.0, 100}, KMethod::ClosedForm, 0,
                          1e-9, q);
  double na = theta_p_norm(a, 0.5, 2.0, q).value;
  double nb = theta_p_norm(b, 0.5, 2.0, q).value;
  REQUIRE(std::abs(nb - 3.5 * na) < 1e-10 * nb);
  REQUIRE(std::abs(theta_inf_norm(b, 0.5) - 3.5 * theta_inf_norm(a, 0.5)) <
          1e-10 * theta_inf_norm(b, 0.5));
}

TEST_CASE("envelope enclosures contain the exact value") {
  // build the same weighted-couple curve through both methods: the sampled
  // envelope bracket must contain the exact kink-integrated norm
  QuadConfig q;
  CorpusSpec spec;
  spec.count = 6;
  spec.seed = 67;
  CoupleSpec couple = CoupleSpec::weighted_l1(Weight::one(), Weight::inv_t());
  for (const StepFunction& raw : make_corpus(spec)) {
    // support must stay away from zero so f lies in X1 (the head needs a slope)
    StepFunction f = restrict_to(raw, 0.2, 1.0);
    for (double p : {1.5, 2.0}) {
      double theta = 1.0 - 1.0 / p;
      KCurve closed = build_kcurve(f, couple, {1e-4, 4.0, 90}, KMethod::ClosedForm, 0, 1e-9, q);
      KCurve sampled = build_kcurve(f, couple, {1e-4, 4.0, 90}, KMethod::LP, 256, 1e-10, q);
      double exact = theta_p_norm(closed, theta, p, q).value;
      Enclosure en = theta_p_norm(sampled, theta, p, q);
      REQUIRE(en.lower <= exact * (1.0 + 1e-9));
      REQUIRE(en.upper >= exact * (1.0 - 1e-9));
      REQUIRE(en.width_rel() < 0.1);
      REQUIRE(std::abs(en.value - exact) <= 0.05 * exact);
    }
  }
}

TEST_CASE("sampled curves produce certified enclosures") {
  QuadConfig q;
  StepFunction one = StepFunction::constant(1.0);
  KCurve kc = build_kcurve(one, CoupleSpec::ces1_cesinf(), {1e-4, 2.0, 120}, KMethod::LP, 256,
                           1e-8, q);
  Enclosure en = theta_p_norm(kc, 0.5, 2.0, q);
  CHECK(en.lower <= en.value);
  CHECK(en.value <= en.upper);
  CHECK(en.width_rel() < 5e-2);
  // the lower constant of the weighted identification, with huge slack here
  CHECK(en.lower >= ces_log_norm(one, 2.0, q) / 72.0);
}

TEST_CASE("theta norm rejects bad parameters") {
  QuadConfig q;
  Seq e1(std::vector<double>{1.0});
  KCurve kc = build_kcurve(e1, {1e-3, 4.0, 40});
  CHECK_THROWS_AS(theta_p_norm(kc, 1.2, 2.0, q), std::invalid_argument);
  CHECK_THROWS_AS(theta_p_norm(kc, 0.5, kInfP, q), std::invalid_argument);
  CHECK_THROWS_AS(theta_inf_norm(kc, 1.5), std::invalid_argument);

  KCurve power = kc;
  power.tail.kind = KTail::Kind::Power;
  power.tail.exponent = 0.9;
  CHECK_THROWS_AS(theta_p_norm(power, 0.5, 2.0, q), DivergenceError);
  // a proper power tail integrates in closed form
  power.tail.exponent = 0.25;
  Enclosure en = theta_p_norm(power, 0.5, 2.0, q);
  CHECK(en.value > 0.0);

  // a sampled curve that never decays at zero cannot be bracketed: the head
  // slope is missing, which the curve invariants rule out for real couples
  KCurve flat;
  flat.couple = CoupleSpec::ces1_cesinf();
  flat.f = StepFunction::constant(1.0);
  flat.method = KMethod::LP;
  flat.tgrid = {0.01, 0.1, 1.0};
  flat.kvals = {1.0, 1.0, 1.0};
  flat.tail = {KTail::Kind::ConstantBeyond, 1.0, 1.0, 0.0};
  flat.head = {false, 0.0};
  CHECK_THROWS_AS(theta_p_norm(flat, 0.5, 2.0, q), std::invalid_argument);
}

TEST_CASE("discrete sandwich on one sequence") {
  QuadConfig q;
  Seq x(std::vector<double>{0.3, 2.0, 0.0, 1.1});
  KCurve kc = build_kcurve(x, {1e-3, 8.0, 120});
  for (double p : {1.5, 2.0, 4.0}) {
    double nrm = theta_p_norm(kc, 1.0 - 1.0 / p, p, q).value;
    double copn = seq_norm(x, SeqSpace::cop(p), 0, q);
    REQUIRE(nrm >= copn * (1.0 - 1e-9));
    REQUIRE(nrm <= (conjugate_exponent(p) + 1.0) * copn * (1.0 + 1e-9));
  }
}
