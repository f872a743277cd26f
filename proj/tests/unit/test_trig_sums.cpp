#include <doctest.h>

#include "bernoulli/errors.hpp"
#include "bernoulli/trig_sums.hpp"

using namespace bern;

namespace {

HPFloat hf(const char* s) { return HPFloat::from_string(s, 256); }

// Direct mpmath sums at 50 digits.
struct Frozen {
  TrigKind kind;
  unsigned p;
  const char* value;
};
const Frozen kSums[] = {
    {TrigKind::I, 3, "2.3094010767585030580365951220078298"},
    {TrigKind::J, 3, "-0.57735026918962576450914878050195746"},
    {TrigKind::I, 7, "9.2190594838499460209646008941874205"},
    {TrigKind::J, 7, "-13.003270623899044658142370432133521"},
    {TrigKind::I, 100, "301.17140951220359511063028641635947"},
    {TrigKind::J, 100, "-10677.820359792870293485185631115127"},
};

}  // namespace

TEST_CASE("sums match the oracle") {
  for (const auto& f : kSums) {
    const Interval v = trig_sum(f.kind, f.p, 128).value;
    CHECK_MESSAGE((v - Interval(hf(f.value))).mag() < hf("1e-30"), trig_name(f.kind) << f.p);
  }
  CHECK(trig_sum(TrigKind::J, 4, 128).value.contains(hf("-2")));
  CHECK(trig_sum(TrigKind::I, 1, 128).value.contains_zero());
  CHECK(parse_trig_kind("Ktilde") == TrigKind::Ktilde);
  CHECK_THROWS_AS(parse_trig_kind("Q"), Error);
}

TEST_CASE("sum identities") {
  for (unsigned p : {2u, 3u, 7u, 64u, 101u}) CHECK(identity_suite(p, 128));
  const Interval I = trig_sum(TrigKind::I, 9, 128).value;
  CHECK(trig_sum(TrigKind::M, 9, 128).value.overlaps(-(I * 9)));
  CHECK(trig_sum(TrigKind::L, 9, 128).value.overlaps(I * 9 / 2));
}

TEST_CASE("pairing invariance") {
  for (unsigned p : {5u, 64u, 333u}) {
    const Interval a = trig_sum(TrigKind::I, p, 128).value;
    const Interval b = csc_sum_unpaired(p, 128);
    CHECK(a.overlaps(b));
  }
}

TEST_CASE("expansion witnesses") {
  const WitnessCheck i5 = I_expansion_check(5, 1);
  CHECK(i5.pass);
  CHECK(i5.witness.lo().sign() > 0);
  CHECK(certainly_less(i5.witness, Interval::from_rational(make_rational(1, 6), 256)));
  CHECK(I_expansion_check(16, 2).pass);
  CHECK(J_expansion_check(5, 1).pass);
  CHECK(J_expansion_check(32, 3).pass);
  CHECK(J_harmonic_expansion_check(4, 1).pass);
  CHECK(J_harmonic_expansion_check(10, 2).pass);
}

TEST_CASE("two-sided brackets") {
  for (unsigned p : {2u, 10u, 1000u}) CHECK(I_bracket(p, 0, 128).pass);
  for (unsigned p : {1u, 2u, 500u}) CHECK(J_bracket(p, 0, 128).pass);
  for (unsigned n = 1; n <= 2; ++n) {
    CHECK(I_bracket(40, n, 128).pass);
    CHECK(J_bracket(40, n, 128).pass);
  }
  const BracketCheck b = I_bracket(100, 0, 128);
  CHECK(certainly_less(b.lower, b.value));
  CHECK(certainly_less(b.value, b.upper));
}

TEST_CASE("series identities") {
  for (unsigned p : {1u, 3u, 8u}) {
    const SeriesTrigReport r = series_trig_identities(p);
    CHECK(r.pass);
    CHECK(r.residuals.size() == 5);
    for (const auto& [name, res] : r.residuals) CHECK_MESSAGE(res.contains_zero(), name);
  }
}

TEST_CASE("bracket sweep CSV") {
  const auto rows = bracket_sweep(TrigKind::I, 2, 6, 0, 128);
  REQUIRE(rows.size() == 5);
  const std::string csv = bracket_csv(rows, 15);
  CHECK(csv.rfind("p,value,lower,upper,margin\n2,", 0) == 0);
  CHECK(bracket_csv(rows, 15, false).rfind("2,", 0) == 0);
}
