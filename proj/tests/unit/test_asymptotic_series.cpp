#include <doctest.h>

#include "bernoulli/asymptotic_series.hpp"
#include "bernoulli/errors.hpp"

using namespace bern;

namespace {

HPFloat hf(const char* s, prec_t prec = 256) { return HPFloat::from_string(s, prec); }

// Values frozen from an independent mpmath evaluation (nsum at 50 digits).
struct Frozen {
  SeriesKind kind;
  unsigned p;
  const char* value;
};
const Frozen kSeries[] = {
    {SeriesKind::C, 1, "-0.13033070075390631147707369136441642"},
    {SeriesKind::D, 1, "0.28375711047393365676845763063532814"},
    {SeriesKind::E, 1, "0.69314718055994530941723212145817657"},
    {SeriesKind::C, 2, "-0.03375711047393365676845763063532814"},
    {SeriesKind::D, 2, "0.15659580675269882951336396245163357"},
    {SeriesKind::E, 2, "1.131971753677420964324276906548964"},
    {SeriesKind::C, 3, "-0.015124521099530235256899864994384446"},
    {SeriesKind::D, 3, "0.10800169403130299146311705756872501"},
    {SeriesKind::E, 3, "1.440248636342793670201796212247496"},
    {SeriesKind::C, 7, "-0.0027937840291191079408722423649400589"},
    {SeriesKind::D, 7, "0.048115013830239783125131041944151352"},
    {SeriesKind::E, 7, "2.1677731363278708672359316875190027"},
};

constexpr const char* kGamma = "0.577215664901532860606512090082402431042159336";

}  // namespace

TEST_CASE("harmonic numbers") {
  CHECK(harmonic(1) == 1);
  CHECK(harmonic(4) == make_rational(25, 12));
  CHECK(harmonic_interval(10, 128).contains(harmonic(10)));
}

TEST_CASE("Euler's constant") {
  for (prec_t prec : {64, 100, 256, 1024}) {
    const Interval g = euler_gamma(prec);
    CHECK((g - Interval(hf(kGamma, prec))).mag() < max(HPFloat::pow2(-prec + 5, prec), hf("1e-44", prec)));
    CHECK(g.width() <= HPFloat::pow2(-prec + 4, prec));
  }
  const Interval g100 = euler_gamma(100);
  CHECK(g100.lo().to_fixed(26, MPFR_RNDZ) == "0.57721566490153286060651209");
  CHECK(g100.hi().to_fixed(26, MPFR_RNDZ) == "0.57721566490153286060651209");
  CHECK(gamma_digits(30) == "0.577215664901532860606512090082");
  CHECK(gamma_digits(10) == "0.5772156649");
}

TEST_CASE("gamma bounds table") {
  const auto rows = gamma_bounds_table({1, 2, 128});
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].lower_text == "0.5750000000");
  CHECK(rows[0].upper_text == "0.5833333333");
  CHECK(rows[1].lower_text == "0.5771653194");
  CHECK(rows[1].upper_text == "0.5776861528");
  CHECK(rows[2].lower_text == "0.5772156649");
  CHECK(rows[2].upper_text == "0.5772156649");
  const Interval g = euler_gamma();
  for (const auto& r : rows) {
    CHECK(certainly_less(r.lower, g));
    CHECK(certainly_less(g, r.upper));
  }
}

TEST_CASE("harmonic expansion sandwich") {
  for (unsigned long n : {1ul, 7ul, 50ul})
    for (unsigned m = 1; m <= 6; ++m) CHECK(harmonic_expansion(n, m).pass);
  const HarmonicExpansion h = harmonic_expansion(10, 2);
  CHECK(h.bound == make_rational(1, 30) / 4 / 10000);
}

TEST_CASE("series enclosures match the oracle") {
  const HPFloat tol = hf("1e-30");
  for (const auto& f : kSeries) {
    const SeriesValue v = series_value(f.kind, f.p, tol);
    CHECK_MESSAGE(v.value.width() <= tol, series_name(f.kind) << f.p);
    CHECK_MESSAGE(v.value.overlaps(Interval(hf(f.value, 256)) + Interval(hf("-1e-33"), hf("1e-33"))),
                  series_name(f.kind) << f.p << " " << v.value.to_string(30));
  }
  CHECK(series_E(1, tol).value.overlaps(Interval::ln2(256)));
  CHECK_THROWS_AS(parse_series_kind("F"), Error);
}

TEST_CASE("leading behaviour") {
  // C_10 near -pi^2/7200, D_10 - ln2/20 near -pi^2/14400
  const Interval pi = Interval::pi(256);
  const Interval c = series_C(10, hf("1e-25")).value;
  const Interval lc = -(pi * pi) / 7200;
  CHECK((c - lc).mag() < hf("2e-5"));
  const Interval d = series_D(10, hf("1e-25")).value - Interval::ln2(256) / 20;
  CHECK((d + pi * pi / 14400).mag() < hf("2e-5"));
}

TEST_CASE("tail width shrinks with the budget") {
  const HPFloat a = series_C_budget(2, 500, 1, 256).value.width();
  const HPFloat b = series_C_budget(2, 1000, 1, 256).value.width();
  CHECK(a >= b * 1.9);
  const Interval coarse = series_E_budget(3, 100, false, 256).value;
  const Interval fine = series_E_budget(3, 100, true, 256).value;
  CHECK(coarse.contains(fine));
}

TEST_CASE("expansion sandwiches") {
  CHECK(series_C_sandwich(3, 2).pass);
  CHECK(series_C_sandwich(16, 3).pass);
  CHECK(series_D_sandwich(2, 2).pass);
  for (unsigned p = 1; p <= 5; ++p) CHECK(series_E_identity(p).pass);
}
