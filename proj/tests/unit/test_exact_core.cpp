#include <doctest.h>

#include "bernoulli/errors.hpp"
#include "bernoulli/exact_core.hpp"

using namespace bern;

namespace {

BigRational r(const char* s) { return parse_rational(s); }

// b_n from the defining recurrence sum_{k<n+1} C(n+1,k) b_k = 0, computed here independently.
std::vector<BigRational> reference_numbers(unsigned n) {
  std::vector<BigRational> b{BigRational(1)};
  for (unsigned m = 1; m <= n; ++m) {
    BigRational s = 0;
    for (unsigned k = 0; k < m; ++k) {
      BigInt c;
      mpz_bin_uiui(c.get_mpz_t(), m + 1, k);
      s += BigRational(c) * b[k];
    }
    BigRational v = -s / BigRational(m + 1);
    v.canonicalize();
    b.push_back(v);
  }
  return b;
}

}  // namespace

TEST_CASE("rational helpers") {
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
  CHECK(to_string(make_rational(4, 2)) == "2");
  CHECK(parse_rational("10/4") == make_rational(5, 2));
  CHECK(binomial(10, 3) == 120);
  CHECK(factorial(10) == 3628800);
  CHECK(rational_pow(make_rational(-2, 3), 3) == make_rational(-8, 27));
  CHECK(is_integer(make_rational(9, 3)));
  CHECK_FALSE(is_integer(make_rational(1, 3)));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
}

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli_number(0) == 1);
  CHECK(bernoulli_number(1) == r("-1/2"));
  CHECK(bernoulli_number(8) == r("-1/30"));
  CHECK(bernoulli_number(10) == r("5/66"));
  CHECK(bernoulli_number(12) == r("-691/2730"));
  CHECK(bernoulli_number(30) == r("8615841276005/14322"));
  for (unsigned n = 3; n < 60; n += 2) CHECK(bernoulli_number(n) == 0);

  const auto ref = reference_numbers(40);
  for (unsigned n = 0; n <= 40; ++n) CHECK(bernoulli_number(n) == ref[n]);
}

TEST_CASE("bernoulli polynomials") {
  CHECK(bernoulli_polynomial(0).to_string() == "1");
  CHECK(bernoulli_polynomial(1).to_string() == "X - 1/2");
  CHECK(bernoulli_polynomial(2).to_string() == "X^2 - X + 1/6");
  CHECK(bernoulli_polynomial(3).to_string() == "X^3 - 3/2*X^2 + 1/2*X");
  CHECK(bernoulli_polynomial(4).to_string() == "X^4 - 2*X^3 + X^2 - 1/30");

  CHECK(poly_eval(bernoulli_polynomial(4), 0) == r("-1/30"));
  CHECK(poly_eval(bernoulli_polynomial(4), r("1/4")) == r("7/3840"));
  CHECK(poly_eval(bernoulli_polynomial(4), r("1/4")) > 0);
  CHECK(poly_eval(bernoulli_polynomial(1), r("1/2")) == 0);
  for (unsigned n = 0; n <= 20; ++n) CHECK(bernoulli_polynomial(n)(0) == bernoulli_number(n));
}

TEST_CASE("polynomial arithmetic") {
  const RatPolynomial p({1, 2, 3});  // 1 + 2X + 3X^2
  CHECK(p.derivative() == RatPolynomial({2, 6}));
  CHECK(p.antiderivative() == RatPolynomial({0, 1, 1, 1}));
  CHECK(p.integral01() == 3);
  CHECK(p.shift(1) == RatPolynomial({6, 8, 3}));
  CHECK(p.compose_affine(2, 0) == RatPolynomial({1, 4, 12}));
  CHECK((p - p).is_zero());
  CHECK((p * RatPolynomial({0, 1})).degree() == 3);
}

TEST_CASE("defining identities") {
  for (unsigned n : {1u, 6u, 12u, 25u}) {
    CHECK(forward_difference_check(n));
    CHECK(integral_zero_check(n));
    CHECK(derivative_check(n));
    CHECK(reflection_check(n));
  }
  CHECK(raabe_check(4, 2));
  for (unsigned p = 1; p <= 5; ++p) CHECK(raabe_check(9, p));
}

TEST_CASE("addition formula and monomial basis") {
  CHECK(addition_formula(2, 1) == RatPolynomial({r("1/6"), 1, 1}));
  CHECK(addition_formula(3, 0) == bernoulli_polynomial(3));
  CHECK(addition_formula(4, r("1/2")) == bernoulli_polynomial(4).shift(r("1/2")));

  CHECK(monomial_in_bernoulli_basis(0) == std::vector<BigRational>{1});
  CHECK(monomial_in_bernoulli_basis(1) == std::vector<BigRational>{r("1/2"), 1});
  const auto c4 = monomial_in_bernoulli_basis(4);
  REQUIRE(c4.size() == 5);
  for (unsigned k = 0; k <= 4; ++k) CHECK(c4[k] == BigRational(binomial(5, k)) / 5);
}

TEST_CASE("power sums") {
  CHECK(power_sum(2, 4) == 30);
  CHECK(power_sum(0, 7) == 7);
  for (unsigned long m = 1; m <= 30; ++m) CHECK(power_sum(3, m) == BigRational(m * m * (m + 1) * (m + 1) / 4));
  BigRational direct = 0;
  for (unsigned long k = 1; k <= 100; ++k) direct += rational_pow(BigRational(k), 7);
  CHECK(power_sum(7, 100) == direct);
}

TEST_CASE("von Staudt-Clausen") {
  const auto v1 = von_staudt_clausen(1);
  CHECK(v1.primes == std::vector<unsigned long>{2, 3});
  CHECK(v1.integer_part == 1);
  const auto v2 = von_staudt_clausen(2);
  CHECK(v2.primes == std::vector<unsigned long>{2, 3, 5});
  CHECK(v2.integer_part == 1);
  CHECK(von_staudt_clausen(6).primes == std::vector<unsigned long>{2, 3, 5, 7, 13});
  for (unsigned n = 1; n <= 30; ++n) {
    BigInt prod = 1;
    for (auto p : von_staudt_clausen(n).primes) prod *= p;
    CHECK(bernoulli_number(2 * n).get_den() == prod);
  }
  CHECK(power_integrality(2, 2));
  CHECK(power_integrality(1, 7));
  CHECK(power_integrality(10, 12));
}

TEST_CASE("tangent numbers") {
  CHECK(tangent_numbers(5) == std::vector<BigInt>{1, 2, 16, 272, 7936});
  const auto t2 = tangent_integrality(2);
  CHECK(static_cast<bool>(t2));
  CHECK(t2.tangent_number == 1);
  CHECK(tangent_integrality(4).tangent_number == 2);
  CHECK(static_cast<bool>(tangent_integrality(12)));
}

TEST_CASE("alternative formulas") {
  CHECK(quadratic_recurrence_check(2));
  CHECK(quadratic_recurrence_check(3));
  CHECK(quadratic_recurrence_check(10));
  CHECK(gould_formula(1) == r("-1/2"));
  CHECK(gould_formula(2) == r("1/6"));
  CHECK(gould_formula(8) == r("-1/30"));
  CHECK(binomial_sum_formula(1) == r("-1/2"));
  CHECK(binomial_sum_formula(4) == r("-1/30"));
  CHECK(binomial_sum_formula(6) == r("1/42"));
  for (unsigned m = 1; m <= 20; ++m) {
    CHECK(gould_formula(m) == bernoulli_number(m));
    CHECK(binomial_sum_formula(m) == bernoulli_number(m));
    CHECK(doubling_recurrence(m) == bernoulli_number(m));
  }
  CHECK(multiplication_formula_check(3, 2, 0));
  CHECK(multiplication_formula_check(1, 1, r("1/3")));
  CHECK(multiplication_formula_check(5, 3, r("1/2")));
}

TEST_CASE("convolution and inner products") {
  CHECK(convolution_identity_check(0));
  CHECK(convolution_identity_check(4));
  CHECK(convolution_identity_check(9));
  CHECK(l2_inner_product(1, 1) == r("1/12"));
  CHECK(l2_inner_product(1, 2) == 0);
  CHECK(l2_inner_product(2, 2) == r("1/180"));
}

TEST_CASE("zeta and eta at even integers") {
  CHECK(zeta_even_exact(1) == r("1/6"));
  CHECK(zeta_even_exact(2) == r("1/90"));
  CHECK(zeta_even_exact(3) == r("1/945"));
  CHECK(eta_even_exact(1) == r("1/12"));
  CHECK(eta_even_exact(2) == r("7/720"));
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(von_staudt_clausen(0), Error);
  CHECK_THROWS_AS(gould_formula(0), Error);
  CHECK_THROWS_AS(quadratic_recurrence_check(1), Error);
}
