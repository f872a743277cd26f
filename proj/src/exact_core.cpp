#include "bernoulli/exact_core.hpp"

#include <mutex>
#include <sstream>

#include "bernoulli/errors.hpp"

namespace bern {

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) fail(ErrorCode::InvalidArgument, "zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const BigRational& q) { return q.get_str(10); }

BigRational parse_rational(const std::string& text) {
  BigRational q;
  if (q.set_str(text, 10) != 0 || q.get_den() == 0)
    fail(ErrorCode::InvalidArgument, "not a rational: '" + text + "'");
  q.canonicalize();
  return q;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigRational rational_pow(const BigRational& q, unsigned long e) {
  BigRational r;
  mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), e);
  r.canonicalize();
  return r;
}

bool is_integer(const BigRational& q) { return q.get_den() == 1; }

// ---------------------------------------------------------------------------
// RatPolynomial

RatPolynomial::RatPolynomial(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) { normalize(); }

RatPolynomial RatPolynomial::constant(const BigRational& c) { return RatPolynomial({c}); }

RatPolynomial RatPolynomial::monomial(unsigned k, const BigRational& c) {
  std::vector<BigRational> v(k + 1);
  v[k] = c;
  return RatPolynomial(std::move(v));
}

void RatPolynomial::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigRational RatPolynomial::operator()(const BigRational& x) const {
  BigRational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPolynomial RatPolynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<BigRational> d(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<unsigned long>(k);
  return RatPolynomial(std::move(d));
}

RatPolynomial RatPolynomial::antiderivative() const {
  if (c_.empty()) return {};
  std::vector<BigRational> a(c_.size() + 1);
  for (size_t k = 0; k < c_.size(); ++k) a[k + 1] = c_[k] / static_cast<unsigned long>(k + 1);
  return RatPolynomial(std::move(a));
}

BigRational RatPolynomial::integral01() const {
  BigRational s = 0;
  for (size_t k = 0; k < c_.size(); ++k) s += c_[k] / static_cast<unsigned long>(k + 1);
  return s;
}

RatPolynomial RatPolynomial::compose_affine(const BigRational& a, const BigRational& b) const {
  const RatPolynomial inner({b, a});
  RatPolynomial acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + constant(*it);
  return acc;
}

RatPolynomial& RatPolynomial::operator+=(const RatPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  normalize();
  return *this;
}

RatPolynomial& RatPolynomial::operator-=(const RatPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  normalize();
  return *this;
}

RatPolynomial& RatPolynomial::operator*=(const BigRational& s) {
  for (auto& c : c_) c *= s;
  normalize();
  return *this;
}

RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigRational> r(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return RatPolynomial(std::move(r));
}

std::string RatPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const BigRational& c = c_[k];
    if (c == 0) continue;
    const bool neg = c < 0;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    const BigRational mag = abs(c);
    if (k == 0) {
      os << bern::to_string(mag);
      continue;
    }
    if (mag != 1) os << bern::to_string(mag) << '*';
    os << 'X';
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// BernoulliCache

BernoulliCache::BernoulliCache() {
  numbers_.emplace_back(1);
  polys_.push_back(RatPolynomial::constant(1));
}

BernoulliCache& BernoulliCache::global() {
  static BernoulliCache cache;
  return cache;
}

void BernoulliCache::grow_numbers(unsigned n) {
  for (unsigned m = static_cast<unsigned>(numbers_.size()); m <= n; ++m) {
    if (m >= 3 && m % 2 == 1) {
      numbers_.emplace_back(0);
      continue;
    }
    BigRational s = 0;
    for (unsigned k = 0; k < m; ++k) {
      if (k >= 3 && k % 2 == 1) continue;
      s += BigRational(binomial(m + 1, k)) * numbers_[k];
    }
    s /= -static_cast<long>(m + 1);
    numbers_.push_back(s);
  }
}

void BernoulliCache::grow_polys(unsigned n) {
  grow_numbers(n);
  for (unsigned m = static_cast<unsigned>(polys_.size()); m <= n; ++m) {
    std::vector<BigRational> c(m + 1);
    for (unsigned k = 0; k <= m; ++k) c[k] = BigRational(binomial(m, k)) * numbers_[m - k];
    polys_.emplace_back(std::move(c));
  }
}

const BigRational& BernoulliCache::number(unsigned n) {
  {
    std::shared_lock lock(mu_);
    if (n < numbers_.size()) return numbers_[n];
  }
  std::unique_lock lock(mu_);
  grow_numbers(n);
  return numbers_[n];
}

const RatPolynomial& BernoulliCache::polynomial(unsigned n) {
  {
    std::shared_lock lock(mu_);
    if (n < polys_.size()) return polys_[n];
  }
  std::unique_lock lock(mu_);
  grow_polys(n);
  return polys_[n];
}

const BigRational& bernoulli_number(unsigned n) { return BernoulliCache::global().number(n); }
const RatPolynomial& bernoulli_polynomial(unsigned n) { return BernoulliCache::global().polynomial(n); }

BigRational poly_eval(const RatPolynomial& p, const BigRational& x) { return p(x); }

// ---------------------------------------------------------------------------
// Polynomial identities

bool forward_difference_check(unsigned n) {
  require(n >= 1, "forward_difference_check needs n >= 1");
  const RatPolynomial& B = bernoulli_polynomial(n);
  return B.shift(1) - B == RatPolynomial::monomial(n - 1, n);
}

bool reflection_check(unsigned n) {
  require(n >= 1, "reflection_check needs n >= 1");
  const RatPolynomial& B = bernoulli_polynomial(n);
  return B.compose_affine(-1, 1) == B * BigRational(n % 2 ? -1 : 1);
}

bool derivative_check(unsigned n) {
  require(n >= 1, "derivative_check needs n >= 1");
  return bernoulli_polynomial(n).derivative() == bernoulli_polynomial(n - 1) * BigRational(n);
}

bool raabe_check(unsigned n, unsigned p) {
  require(n >= 1 && p >= 1, "raabe_check needs n >= 1, p >= 1");
  const RatPolynomial& B = bernoulli_polynomial(n);
  const BigRational inv(1, p);
  RatPolynomial lhs;
  for (unsigned k = 0; k < p; ++k) lhs += B.compose_affine(inv, make_rational(k, p));
  lhs *= inv;
  return lhs == B * rational_pow(inv, n);
}

bool integral_zero_check(unsigned n) {
  const RatPolynomial& B = bernoulli_polynomial(n);
  if (n == 0) return B == RatPolynomial::constant(1);
  const RatPolynomial A = B.antiderivative();
  return A(1) - A(0) == 0 && B.integral01() == 0;
}

RatPolynomial addition_formula(unsigned n, const BigRational& y) {
  RatPolynomial r;
  BigRational ypow = 1;
  for (unsigned k = 0; k <= n; ++k) {
    r += bernoulli_polynomial(n - k) * (BigRational(binomial(n, k)) * ypow);
    ypow *= y;
  }
  return r;
}

std::vector<BigRational> monomial_in_bernoulli_basis(unsigned n) {
  std::vector<BigRational> c(n + 1);
  for (unsigned k = 0; k <= n; ++k) c[k] = make_rational(binomial(n + 1, k), n + 1);
  return c;
}

BigRational power_sum(unsigned n, unsigned long m) {
  const RatPolynomial& B = bernoulli_polynomial(n + 1);
  const BigRational s = (B(BigRational(m + 1)) - bernoulli_number(n + 1)) / static_cast<unsigned long>(n + 1);
  // the closed form counts 0^0 = 1 when n = 0
  return n == 0 ? BigRational(s - 1) : s;
}

// ---------------------------------------------------------------------------
// von Staudt-Clausen and integrality

bool is_prime_small(unsigned long v) {
  if (v < 2) return false;
  for (unsigned long d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

VonStaudtClausen von_staudt_clausen(unsigned n) {
  require(n >= 1, "von_staudt_clausen needs n >= 1");
  VonStaudtClausen r;
  const unsigned long two_n = 2ul * n;
  BigRational s = bernoulli_number(2 * n);
  for (unsigned long d = 1; d <= two_n; ++d) {
    if (two_n % d != 0 || !is_prime_small(d + 1)) continue;
    r.primes.push_back(d + 1);
    s += BigRational(1, d + 1);
  }
  if (!is_integer(s)) fail(ErrorCode::NotInteger, "b_" + std::to_string(2 * n) + " + sum 1/p = " + to_string(s));
  r.integer_part = s.get_num();
  return r;
}

bool power_integrality(unsigned long m, unsigned k) {
  require(m >= 1, "power_integrality needs m >= 1");
  BigInt mk;
  mpz_ui_pow_ui(mk.get_mpz_t(), m, k);
  return is_integer(BigRational(BigInt(m) * (mk - 1)) * bernoulli_number(k));
}

std::vector<BigInt> tangent_numbers(unsigned n) {
  std::vector<BigInt> a;
  if (n == 0) return a;
  a.emplace_back(1);
  for (unsigned i = 1; i < n; ++i) {
    BigInt s = 0;
    for (unsigned k = 0; k < i; ++k) s += binomial(2 * i, 2 * k + 1) * a[k] * a[i - k - 1];
    a.push_back(s);
  }
  return a;
}

TangentCheck tangent_integrality(unsigned n) {
  require(n >= 1, "tangent_integrality needs n >= 1");
  TangentCheck r;
  BigInt p2;
  mpz_ui_pow_ui(p2.get_mpz_t(), 2, n);
  const BigRational q = BigRational(p2 * (p2 - 1)) * bernoulli_number(n) / static_cast<unsigned long>(n);
  r.integral = is_integer(q);
  if (n % 2 == 0) {
    const unsigned half = n / 2;
    r.tangent_number = tangent_numbers(half).back();
    const BigRational expected = half % 2 ? q : BigRational(-q);
    r.tangent_match = expected == BigRational(r.tangent_number);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Alternative producers of b_n

bool quadratic_recurrence_check(unsigned n) {
  require(n >= 2, "quadratic_recurrence_check needs n >= 2");
  BigRational s = 0;
  for (unsigned k = 1; k < n; ++k)
    s += BigRational(binomial(2 * n, 2 * k)) * bernoulli_number(2 * k) * bernoulli_number(2 * n - 2 * k);
  s /= -static_cast<long>(2 * n + 1);
  return s == bernoulli_number(2 * n);
}

BigRational gould_formula(unsigned m) {
  require(m >= 1, "gould_formula needs m >= 1");
  BigRational total = 0;
  for (unsigned n = 0; n <= m; ++n) {
    BigInt inner = 0;
    for (unsigned k = 0; k <= n; ++k) {
      BigInt km;
      mpz_ui_pow_ui(km.get_mpz_t(), k, m);
      BigInt term = binomial(n, k) * km;
      if (k % 2) inner -= term; else inner += term;
    }
    total += make_rational(inner, n + 1);
  }
  return total;
}

BigRational binomial_sum_formula(unsigned m) {
  require(m >= 1, "binomial_sum_formula needs m >= 1");
  BigRational total = 0;
  BigInt partial = 0;  // sum_{k=1}^{n-1} k^m
  for (unsigned n = 1; n <= m + 1; ++n) {
    if (n >= 2) {
      BigInt km;
      mpz_ui_pow_ui(km.get_mpz_t(), n - 1, m);
      partial += km;
    }
    const BigRational term = make_rational(binomial(m + 1, n) * partial, n);
    if (n % 2) total += term; else total -= term;
  }
  return total;
}

BigRational doubling_recurrence(unsigned n) {
  require(n >= 1, "doubling_recurrence needs n >= 1");
  BigRational s = 0;
  BigInt pw = 1;
  for (unsigned j = 0; j < n; ++j) {
    s += BigRational(pw * binomial(n, j)) * bernoulli_number(j);
    pw *= 2;
  }
  // pw == 2^n here
  return s / BigRational(2 * (1 - pw));
}

bool multiplication_formula_check(unsigned n, const BigRational& w, const BigRational& z) {
  require(n >= 1, "multiplication_formula_check needs n >= 1");
  const BigRational lhs = bernoulli_polynomial(n)(z * w);
  BigRational rhs = rational_pow(w, n) * bernoulli_polynomial(n)(z);
  BigRational s = 0;
  for (unsigned j = 0; j < n; ++j) {
    // w^{j-1}(B_{n+1-j}(w) - b_{n+1-j}) = w^j Q(w) with Q = (B - b)/X
    const auto& c = bernoulli_polynomial(n + 1 - j).coeffs();
    const RatPolynomial Q(std::vector<BigRational>(c.begin() + 1, c.end()));
    s += BigRational(binomial(n + 1, j)) * bernoulli_polynomial(j)(z) * rational_pow(w, j) * Q(w);
  }
  rhs += s / static_cast<unsigned long>(n + 1);
  return lhs == rhs && doubling_recurrence(n) == bernoulli_number(n);
}

bool convolution_identity_check(unsigned n) {
  RatPolynomial lhs;
  for (unsigned k = 0; k <= n; ++k) lhs += bernoulli_polynomial(k) * bernoulli_polynomial(n - k);
  lhs *= BigRational(1, n + 1);
  RatPolynomial rhs;
  for (unsigned k = 0; 2 * k <= n; ++k) {
    BigRational c = BigRational(binomial(n, 2 * k)) * bernoulli_number(2 * k) /
                    BigRational((k + 1ul) * (2ul * k + 1));
    rhs += bernoulli_polynomial(n - 2 * k) * c;
  }
  if (!(lhs == rhs)) return false;
  if (n % 2 == 0 && n >= 4) {
    const unsigned m = n / 2;
    BigRational a = 0, b = 0;
    for (unsigned k = 0; k <= m; ++k) {
      const BigRational prod = bernoulli_number(2 * k) * bernoulli_number(2 * m - 2 * k);
      a += prod;
      b += BigRational(binomial(2 * m + 2, 2 * k + 2)) * prod;
    }
    if (a != b / static_cast<unsigned long>(m + 1)) return false;
  }
  return true;
}

BigRational l2_inner_product(unsigned n, unsigned m) {
  require(n >= 1 && m >= 1, "l2_inner_product needs n, m >= 1");
  const BigRational exact = (bernoulli_polynomial(n) * bernoulli_polynomial(m)).integral01();
  BigRational formula = bernoulli_number(n + m) / BigRational(binomial(n + m, n));
  if (m % 2 == 0) formula = -formula;
  if (exact != formula)
    fail(ErrorCode::IdentityViolation, "inner product of B_" + std::to_string(n) + ", B_" + std::to_string(m));
  return exact;
}

BigRational zeta_even_exact(unsigned n) {
  require(n >= 1, "zeta_even_exact needs n >= 1");
  BigInt p2;
  mpz_ui_pow_ui(p2.get_mpz_t(), 2, 2 * n - 1);
  BigRational r = BigRational(p2) * bernoulli_number(2 * n) / BigRational(factorial(2 * n));
  return n % 2 ? r : BigRational(-r);
}

BigRational eta_even_exact(unsigned n) {
  require(n >= 1, "eta_even_exact needs n >= 1");
  BigInt p2;
  mpz_ui_pow_ui(p2.get_mpz_t(), 2, 2 * n);
  BigRational r = BigRational(p2 - 2) * bernoulli_number(2 * n) / BigRational(2 * factorial(2 * n));
  return n % 2 ? r : BigRational(-r);
}

}  // namespace bern
