#pragma once

#include <gmpxx.h>

#include <deque>
#include <shared_mutex>
#include <string>
#include <vector>

namespace bern {

using BigInt = mpz_class;
using BigRational = mpq_class;

// Canonicalized num/den.
BigRational make_rational(const BigInt& num, const BigInt& den);

// "num/den", denominator omitted when it is 1.
std::string to_string(const BigRational& q);
BigRational parse_rational(const std::string& text);

BigInt binomial(unsigned long n, unsigned long k);
BigInt factorial(unsigned long n);
BigRational rational_pow(const BigRational& q, unsigned long e);
bool is_integer(const BigRational& q);

class RatPolynomial {
 public:
  RatPolynomial() = default;
  explicit RatPolynomial(std::vector<BigRational> coeffs);

  static RatPolynomial constant(const BigRational& c);
  static RatPolynomial monomial(unsigned k, const BigRational& c = 1);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<BigRational>& coeffs() const { return c_; }
  BigRational coeff(unsigned k) const { return k < c_.size() ? c_[k] : BigRational(0); }

  BigRational operator()(const BigRational& x) const;

  RatPolynomial derivative() const;
  // Antiderivative vanishing at 0.
  RatPolynomial antiderivative() const;
  BigRational integral01() const;
  // p(a X + b), Horner over polynomials.
  RatPolynomial compose_affine(const BigRational& a, const BigRational& b) const;
  RatPolynomial shift(const BigRational& y) const { return compose_affine(1, y); }

  RatPolynomial& operator+=(const RatPolynomial& o);
  RatPolynomial& operator-=(const RatPolynomial& o);
  RatPolynomial& operator*=(const BigRational& s);

  friend RatPolynomial operator+(RatPolynomial a, const RatPolynomial& b) { return a += b; }
  friend RatPolynomial operator-(RatPolynomial a, const RatPolynomial& b) { return a -= b; }
  friend RatPolynomial operator*(RatPolynomial a, const BigRational& s) { return a *= s; }
  friend RatPolynomial operator*(const BigRational& s, RatPolynomial a) { return a *= s; }
  friend RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b);
  friend bool operator==(const RatPolynomial& a, const RatPolynomial& b) { return a.c_ == b.c_; }

  // e.g. "X^3 - 3/2*X^2 + 1/2*X"
  std::string to_string() const;

 private:
  void normalize();
  std::vector<BigRational> c_;
};

// Memoized b_n and B_n. Growth is serialized; readers share the lock.
// Returned references stay valid for the cache's lifetime.
class BernoulliCache {
 public:
  BernoulliCache();

  const BigRational& number(unsigned n);
  const RatPolynomial& polynomial(unsigned n);

  static BernoulliCache& global();

 private:
  void grow_numbers(unsigned n);
  void grow_polys(unsigned n);

  std::shared_mutex mu_;
  std::deque<BigRational> numbers_;
  std::deque<RatPolynomial> polys_;
};

const BigRational& bernoulli_number(unsigned n);
const RatPolynomial& bernoulli_polynomial(unsigned n);
BigRational poly_eval(const RatPolynomial& p, const BigRational& x);

bool forward_difference_check(unsigned n);
bool reflection_check(unsigned n);
bool derivative_check(unsigned n);
bool raabe_check(unsigned n, unsigned p);
bool integral_zero_check(unsigned n);

RatPolynomial addition_formula(unsigned n, const BigRational& y);
std::vector<BigRational> monomial_in_bernoulli_basis(unsigned n);
// 1^n + 2^n + ... + m^n
BigRational power_sum(unsigned n, unsigned long m);

struct VonStaudtClausen {
  std::vector<unsigned long> primes;
  BigInt integer_part;
};
VonStaudtClausen von_staudt_clausen(unsigned n);
bool is_prime_small(unsigned long v);

bool power_integrality(unsigned long m, unsigned k);

struct TangentCheck {
  bool integral = false;
  bool tangent_match = true;
  BigInt tangent_number;  // a_{n-1} for even n, 0 otherwise
  explicit operator bool() const { return integral && tangent_match; }
};
TangentCheck tangent_integrality(unsigned n);
// a_1, a_3, ..., a_{2n-1} by the convolution recurrence.
std::vector<BigInt> tangent_numbers(unsigned n);

bool quadratic_recurrence_check(unsigned n);
BigRational gould_formula(unsigned m);
BigRational binomial_sum_formula(unsigned m);
bool multiplication_formula_check(unsigned n, const BigRational& w, const BigRational& z);
BigRational doubling_recurrence(unsigned n);
bool convolution_identity_check(unsigned n);
BigRational l2_inner_product(unsigned n, unsigned m);

// zeta(2n) = c * pi^{2n}, eta(2n) = c * pi^{2n}
BigRational zeta_even_exact(unsigned n);
BigRational eta_even_exact(unsigned n);

}  // namespace bern
