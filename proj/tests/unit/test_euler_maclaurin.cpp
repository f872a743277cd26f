#include <doctest.h>

#include "bernoulli/errors.hpp"
#include "bernoulli/euler_maclaurin.hpp"

using namespace bern;

namespace {

constexpr prec_t kP = 192;

HPFloat hf(const char* s) { return HPFloat::from_string(s, kP); }
HPFloat hq(long a, long b) { return HPFloat::from_rational(make_rational(a, b), kP); }

bool near(const HPFloat& a, const HPFloat& b, long bits = 150) { return abs(a - b) < HPFloat::pow2(-bits, kP); }

}  // namespace

TEST_CASE("composite means") {
  const auto one = polynomial_integrand(RatPolynomial({1}), "one");
  const auto t = polynomial_integrand(RatPolynomial({0, 1}), "t");
  CHECK(near(composite_mean(one, 7, hf("0.3")), hf("1")));
  CHECK(near(composite_mean(t, 4, hf("0")), hq(3, 8)));
  CHECK(near(composite_mean(t, 4, hf("0.5")), hq(1, 2)));
}

TEST_CASE("reference integrals") {
  // e - 1, ln 2, 2 ln 2 - 1
  CHECK(near(reference_integral(exp_integrand(), kP).value, hf("1.7182818284590452353602874713526624977572470937")));
  CHECK(near(reference_integral(reciprocal1p_integrand(), kP).value, hf("0.69314718055994530941723212145817656807550013436")));
  CHECK(near(reference_integral(log1p_integrand(), kP).value, hf("0.38629436111989061883446424291635313615100026872")));
  CHECK(near(reference_integral(cos2pi_integrand(), kP).value, hf("0")));
  CHECK(near(reference_integral(make_integrand("poly:0,0,3"), kP).value, hf("1")));
}

TEST_CASE("corpus derivatives") {
  for (const auto& f : builtin_corpus()) {
    CHECK_MESSAGE(validate_derivatives(f, 128), f.name);
    CHECK_MESSAGE(validate_monotone_flags(f, 128), f.name);
    for (unsigned m = 1; m <= 4; ++m) CHECK_MESSAGE(validate_sup_bound(f, m, 128), f.name);
  }
  CHECK(builtin_corpus().size() == 11);
  CHECK_THROWS_AS(make_integrand("sinh"), Error);
}

TEST_CASE("Euler-Maclaurin remainder") {
  const HPFloat tol = default_quad_tol(kP);
  for (const char* name : {"exp", "reciprocal1p", "log1p", "cos2pi"})
    for (unsigned m : {1u, 3u, 5u}) {
      const EMResult r = em_identity_check(make_integrand(name), 3, m, hq(1, 4), tol);
      CHECK(abs(r.defining_value - r.kernel_value) <= r.tolerance);
      CHECK(r.remainder.mag() <= r.bound);
      CHECK(r.correction_terms.size() == m);
      const HPFloat I = reference_integral(make_integrand(name), kP).value;
      CHECK(abs(r.reconstructed_integral() - I) <= r.tolerance * 4);
    }
  // Polynomials of degree < m have a vanishing remainder.
  const EMResult z = em_identity_check(make_integrand("poly:1,2,3"), 2, 3, hf("0"), tol);
  CHECK(z.remainder.contains_zero());
}

TEST_CASE("scaled remainders decay") {
  CHECK(decay_check(exp_integrand(), 2, hf("0"), {4, 8, 16, 32, 64}).decreasing);
  CHECK(decay_check(reciprocal1p_integrand(), 3, hf("0"), {4, 8, 16, 32}).decreasing);
  CHECK(decay_check(make_integrand("poly:0,1"), 3, hf("0"), {1, 2, 4}).decreasing);
}

TEST_CASE("signed remainder under monotone odd derivatives") {
  const Interval r = signed_remainder_monotone(log1p_integrand(), 2, kP);
  CHECK(r.lo().sign() >= 0);
  CHECK(signed_remainder_monotone(make_integrand("poly:3,5"), 1, kP).contains_zero());
  CHECK_THROWS_AS(signed_remainder_monotone(reciprocal1p_integrand(), 1, kP), Error);
}

TEST_CASE("adaptive quadrature") {
  const auto g = [](const HPFloat& x) { return x * x * x; };
  const QuadResult q = integrate(g, hf("0"), hf("2"), HPFloat::pow2(-150, kP));
  CHECK(near(q.value, hf("4")));
}
