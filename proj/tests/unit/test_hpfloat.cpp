#include <doctest.h>

#include "bernoulli/errors.hpp"
#include "bernoulli/hpfloat.hpp"

using namespace bern;

namespace {

// Rational bracket of arctan(1/x) from consecutive alternating partial sums.
std::pair<BigRational, BigRational> arctan_inv(long x, unsigned terms) {
  BigRational s = 0, prev = 0;
  BigRational pw = make_rational(1, x);
  const BigRational x2 = BigRational(x * x);
  for (unsigned k = 0; k < terms; ++k) {
    prev = s;
    BigRational t = pw / BigRational(2 * k + 1);
    s = (k % 2) ? BigRational(s - t) : BigRational(s + t);
    pw /= x2;
  }
  return s < prev ? std::make_pair(s, prev) : std::make_pair(prev, s);
}

// pi = 16 arctan(1/5) - 4 arctan(1/239)
std::pair<BigRational, BigRational> machin_pi(unsigned terms) {
  const auto [a_lo, a_hi] = arctan_inv(5, terms);
  const auto [b_lo, b_hi] = arctan_inv(239, terms);
  return {16 * a_lo - 4 * b_hi, 16 * a_hi - 4 * b_lo};
}

HPFloat hf(const char* s, prec_t prec = 256) { return HPFloat::from_string(s, prec); }

}  // namespace

TEST_CASE("pi against the Machin oracle") {
  const auto [lo, hi] = machin_pi(60);
  REQUIRE(hi - lo < BigRational(1, 1) / rational_pow(BigRational(10), 80));
  for (prec_t prec : {64, 128, 256}) {
    const Interval pi = Interval::pi(prec);
    CHECK(pi.lo().to_rational() <= lo);
    CHECK(hi <= pi.hi().to_rational());
    CHECK(pi.width() <= HPFloat::pow2(-prec + 2, prec));
  }
  CHECK(HPFloat::pi(64).to_string(20).rfind("3.14159265358979323", 0) == 0);
}

TEST_CASE("HPFloat rendering and conversion") {
  CHECK(HPFloat(3, 64).to_fixed(3) == "3.000");
  CHECK(hf("0.125").to_rational() == make_rational(1, 8));
  CHECK(HPFloat::from_rational(make_rational(1, 3), 64, MPFR_RNDD) < HPFloat::from_rational(make_rational(1, 3), 64, MPFR_RNDU));
  CHECK(hf("-2.5").to_fixed(0, MPFR_RNDZ) == "-2");
  CHECK(HPFloat::pow2(-3, 64).to_double() == 0.125);
}

TEST_CASE("interval arithmetic encloses exact results") {
  const prec_t prec = 80;
  const BigRational a = make_rational(1, 3), b = make_rational(-2, 7);
  const Interval A = Interval::from_rational(a, prec), B = Interval::from_rational(b, prec);
  CHECK(A.contains(a));
  CHECK((A + B).contains(BigRational(a + b)));
  CHECK((A - B).contains(BigRational(a - b)));
  CHECK((A * B).contains(BigRational(a * b)));
  CHECK((A / B).contains(BigRational(a / b)));
  CHECK((A * 7).contains(BigRational(a * 7)));
  CHECK(pow(B, 3).contains(BigRational(b * b * b)));
  CHECK(pow(Interval(hf("-1", prec), hf("2", prec)), 2).lo().sign() == 0);
  CHECK_THROWS_AS(A / Interval(hf("-1", prec), hf("1", prec)), Error);
}

TEST_CASE("elementary functions") {
  const prec_t prec = 128;
  const Interval one = Interval::from_int(1, prec);
  // e = 2.71828182845904523536028747135266249775724709369995...
  CHECK(exp(one).contains(hf("2.718281828459045235360287471352662497757", prec)));
  CHECK(log(exp(one)).contains(hf("1", prec)));
  CHECK(Interval::ln2(prec).contains(hf("0.6931471805599453094172321214581765680755", prec)));
  const Interval pi = Interval::pi(prec);
  CHECK(sin(pi / 6).contains(make_rational(1, 2)));
  CHECK(cos(pi / 3).contains(make_rational(1, 2)));
  CHECK(sin(pi).contains_zero());
  CHECK(sqrt(Interval::from_int(2, prec)).contains(hf("1.414213562373095048801688724209698078570", prec)));
  // psi(1) = -gamma
  CHECK(digamma(one).contains(hf("-0.5772156649015328606065120900824024310422", prec)));
  // sin over a wide interval reaches its maximum
  CHECK(sin(Interval(hf("1", prec), hf("2", prec))).hi() >= hf("1", prec));
}

TEST_CASE("polynomial evaluation") {
  const RatPolynomial p({make_rational(1, 6), -1, 1});  // X^2 - X + 1/6
  const Interval x = Interval::from_rational(make_rational(1, 4), 100);
  CHECK(eval(p, x).contains(BigRational(p(make_rational(1, 4)))));
}

TEST_CASE("strict certification") {
  const auto tiny = [](prec_t w) { return Interval::from_rational(make_rational(1, 1000), w); };
  CHECK(certify_positive(tiny, 64).pass);
  const auto negative = [](prec_t w) { return Interval::from_int(-1, w); };
  CHECK_FALSE(certify_positive(negative, 64).pass);
  // 2^-40 is below 2^-32 at 64 bits, so the precision must grow.
  const auto small = [](prec_t w) { return Interval(HPFloat::pow2(-40, w)); };
  const StrictCheck s = certify_positive(small, 64);
  CHECK(s.pass);
  CHECK(s.prec_used > 64);
  const auto third = [](prec_t w) { return Interval::from_rational(make_rational(1, 3), w); };
  CHECK(certify_inside(third, 0, make_rational(1, 2), 64).pass);
  CHECK_FALSE(certify_inside(third, make_rational(1, 2), 1, 64).pass);
}
