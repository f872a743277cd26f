#include <doctest.h>

#include "bernoulli/errors.hpp"
#include "bernoulli/quadrature.hpp"

using namespace bern;

namespace {

constexpr prec_t kP = 192;

HPFloat hq(long a, long b = 1) { return HPFloat::from_rational(make_rational(a, b), kP); }
bool near(const HPFloat& a, const HPFloat& b, long bits = 160) { return abs(a - b) < HPFloat::pow2(-bits, kP); }

const HPFloat& e_minus_1() {
  static const HPFloat v = HPFloat::from_string("1.7182818284590452353602874713526624977572470937", kP);
  return v;
}

}  // namespace

TEST_CASE("rule names") {
  CHECK(RuleId::parse("simpson").kind == RuleKind::Simpson);
  CHECK(RuleId::parse("mid").kind == RuleKind::Midpoint);
  CHECK(RuleId::parse("romberg:3") == romberg(3));
  CHECK(RuleId::parse("romberg") == romberg(1));
  CHECK(romberg(2).name() == "romberg:2");
  CHECK_THROWS_AS(RuleId::parse("boole"), Error);
  CHECK_THROWS_AS(RuleId::parse("romberg:x"), Error);
  CHECK(rule_order(RuleId{RuleKind::LeftRiemann}) == 1);
  CHECK(rule_order(RuleId{RuleKind::Gauss2}) == 4);
  CHECK(rule_order(romberg(3)) == 8);
}

TEST_CASE("single-panel rules on monomials") {
  const auto t2 = make_integrand("poly:0,0,1");
  const auto t3 = make_integrand("poly:0,0,0,1");
  CHECK(near(apply_rule(RuleId{RuleKind::Trapezoid}, t2, 1, kP), hq(1, 2)));
  CHECK(near(apply_rule(RuleId{RuleKind::Midpoint}, t2, 1, kP), hq(1, 4)));
  CHECK(near(apply_rule(RuleId{RuleKind::Simpson}, t2, 1, kP), hq(1, 3)));
  CHECK(near(apply_rule(RuleId{RuleKind::Simpson}, t3, 1, kP), hq(1, 4)));
  CHECK(near(apply_rule(RuleId{RuleKind::Gauss2}, t3, 1, kP), hq(1, 4)));
  CHECK(near(apply_rule(RuleId{RuleKind::LeftRiemann}, t2, 2, kP), hq(1, 8)));
  CHECK(near(apply_rule(RuleId{RuleKind::RightRiemann}, t2, 2, kP), hq(5, 8)));
}

TEST_CASE("Gauss-2 node") {
  // 1/2 - 1/sqrt(12)
  CHECK(near(gauss2_alpha(kP), HPFloat::from_string("0.21132486540518711774542560974902127217619912436493", kP)));
}

TEST_CASE("leading error coefficients") {
  const auto e = exp_integrand();
  const auto lead = [&](RuleId r, const IntegrandSpec& f) {
    for (const auto& t : error_expansion(r, f, rule_order(r), kP).terms)
      if (t.power == rule_order(r)) return t.coefficient;
    return HPFloat(kP);
  };
  CHECK(near(lead(RuleId{RuleKind::Midpoint}, e), e_minus_1() / 24));
  CHECK(near(lead(RuleId{RuleKind::Trapezoid}, e), -(e_minus_1() / 12)));
  CHECK(near(lead(RuleId{RuleKind::Simpson}, make_integrand("poly:0,0,0,0,0,1")), hq(-1, 48)));
  CHECK(near(lead(RuleId{RuleKind::LeftRiemann}, e), e_minus_1() / 2));
  CHECK(near(lead(RuleId{RuleKind::RightRiemann}, e), -(e_minus_1() / 2)));
  // Gauss-2: -B_4(alpha)/4! delta f''' with B_4(alpha) = -1/180
  CHECK(near(lead(RuleId{RuleKind::Gauss2}, e), e_minus_1() / 4320));
  CHECK(near(lead(RuleId{RuleKind::Simpson}, e), -(e_minus_1() / 2880)));
}

TEST_CASE("expansion predicts the error") {
  const auto f = reciprocal1p_integrand();
  const HPFloat I = reference_integral(f, kP).value;
  for (RuleId r : {RuleId{RuleKind::Midpoint}, RuleId{RuleKind::Simpson}, RuleId{RuleKind::Gauss2}, romberg(2)}) {
    const ErrorExpansion ex = error_expansion(r, f, 14, kP);
    const HPFloat err = I - apply_rule(r, f, 32, kP);
    // remaining terms are O(32^-15)
    CHECK_MESSAGE(abs(err - ex.value(32, kP)) < abs(err) * HPFloat::pow2(-40, kP), r.name());
  }
}

TEST_CASE("order limits") {
  const auto e = exp_integrand();
  for (RuleId r : {RuleId{RuleKind::Midpoint}, RuleId{RuleKind::Trapezoid}, RuleId{RuleKind::Simpson},
                   RuleId{RuleKind::Gauss2}}) {
    const OrderLimit o = order_limit_check(r, e, {64, 128, 256}, kP);
    CHECK(o.rel_error_last < 0.01);
    CHECK(o.rel_error_extrapolated < 1e-6);
  }
  CHECK_THROWS_AS(order_limit_check(RuleId{RuleKind::Midpoint}, e, {64, 100, 256}, kP), Error);
}

TEST_CASE("q-binomials and Romberg coefficients") {
  const BigRational q = make_rational(1, 4);
  CHECK(q_binomial(2, 1, q) == make_rational(5, 4));
  CHECK(q_binomial(7, 0, q) == 1);
  CHECK(q_binomial(3, 2, q) == make_rational(21, 16));
  CHECK_THROWS_AS(q_binomial(2, 3, q), Error);
  CHECK(romberg_coefficient(0, 5) == 1);
  CHECK(romberg_coefficient(1, 1) == 0);
  CHECK(romberg_coefficient(2, 3) == q_binomial(2, 2, q) / 64);
  for (unsigned l = 0; l <= 4; ++l)
    for (unsigned k = 1; k < 10; ++k) CHECK(romberg_coefficient(l, k) == romberg_coefficient_product(l, k));
}

TEST_CASE("Romberg error bounds") {
  const RombergCheck r = romberg_expansion_check(exp_integrand(), 1, 2, 6, kP);
  CHECK(r.first_k == 3);
  CHECK(r.residual.mag() <= r.bound);
  for (const auto& f : builtin_corpus())
    for (unsigned l = 1; l <= 3; ++l) CHECK_MESSAGE(romberg_single_panel_check(f, l, kP).pass, f.name);
}

TEST_CASE("Romberg recurrence") {
  const auto f = log1p_integrand();
  for (unsigned l = 1; l <= 4; ++l) {
    const RuleId prev = l == 1 ? RuleId{RuleKind::Trapezoid} : romberg(l - 1);
    const long g = 1L << (2 * l);
    const HPFloat rhs = (apply_rule(prev, f, 4, kP) * g - apply_rule(prev, f, 2, kP)) / (g - 1);
    CHECK(near(apply_rule(romberg(l), f, 2, kP), rhs));
  }
}

TEST_CASE("trapezoid remainder with a decreasing odd derivative") {
  // f = log(1 + t): f' = 1/(1+t), f'(0) - f'(1) = 1/2
  const Interval r = trapezoid_monotone_remainder(log1p_integrand(), 4, 1, kP);
  const Interval pi = Interval::pi(kP);
  const Interval cap = Interval::from_int(6, kP) / pow(pi * 8, 2) / 2;
  CHECK(r.lo().sign() >= 0);
  CHECK(r.hi() <= cap.hi());
  CHECK(trapezoid_monotone_remainder(make_integrand("poly:1,2"), 3, 1, kP).contains_zero());
  CHECK_THROWS_AS(trapezoid_monotone_remainder(reciprocal1p_integrand(), 4, 1, kP), Error);
}

TEST_CASE("convergence tables") {
  const auto rows = convergence_table(RuleId{RuleKind::Simpson}, exp_integrand(), {1, 2, 4, 8, 16, 32, 64}, kP);
  REQUIRE(rows.size() == 7);
  CHECK_FALSE(rows.front().measured_order.has_value());
  CHECK(std::abs(*rows.back().measured_order - 4) < 0.01);
  const std::string csv = convergence_csv(rows, 12);
  CHECK(csv.rfind("rule,p,value,error,scaled_error,measured_order\n", 0) == 0);
  CHECK(convergence_csv(rows, 12, false).rfind("simpson,1,", 0) == 0);
}
