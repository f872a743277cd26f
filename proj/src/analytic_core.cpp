#include "bernoulli/analytic_core.hpp"

#include <vector>

#include "bernoulli/errors.hpp"

namespace bern {

namespace {

int sign_at(const RatPolynomial& p, const BigRational& x) { return sgn(p(x)); }

Interval two_pi(prec_t prec) { return Interval::pi(prec) * 2; }

std::vector<Interval> interval_coeffs(const RatPolynomial& p, prec_t prec) {
  std::vector<Interval> c;
  c.reserve(p.coeffs().size());
  for (const auto& q : p.coeffs()) c.push_back(Interval::from_rational(q, prec));
  return c;
}

Interval horner(const std::vector<Interval>& c, const Interval& x) {
  Interval acc(x.prec());
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

ComplexInterval cmul(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ComplexInterval cadd(const ComplexInterval& a, const ComplexInterval& b) { return {a.re + b.re, a.im + b.im}; }

ComplexInterval cscale(const ComplexInterval& a, const Interval& s) { return {a.re * s, a.im * s}; }

Interval cabs(const ComplexInterval& a) { return sqrt(pow(a.re, 2) + pow(a.im, 2)); }

// T_n(z) enclosure.
ComplexInterval truncation(unsigned n, const ComplexInterval& z) {
  const prec_t prec = z.re.prec();
  const ComplexInterval u = cscale(z, two_pi(prec));
  std::vector<ComplexInterval> powers{{Interval::from_int(1, prec), Interval(prec)}};
  for (unsigned j = 1; j <= n; ++j) powers.push_back(cmul(powers.back(), u));
  ComplexInterval s{Interval(prec), Interval(prec)};
  for (unsigned k = 0; 2 * k <= n; ++k) {
    const BigRational c = make_rational(k % 2 ? -1 : 1, factorial(n - 2 * k));
    s = cadd(s, cscale(powers[n - 2 * k], Interval::from_rational(c, prec)));
  }
  if ((n / 2) % 2) s = {-s.re, -s.im};
  return s;
}

}  // namespace

HPFloat pi(prec_t prec) { return HPFloat::pi(prec); }

HPFloat periodic_bernoulli(unsigned n, const HPFloat& x) {
  const prec_t prec = x.prec();
  const HPFloat frac = x - floor(x);
  HPFloat acc(prec);
  const auto& c = bernoulli_polynomial(n).coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * frac + HPFloat::from_rational(*it, prec);
  return acc;
}

SupNormReport sup_norm_report(unsigned n, prec_t prec, unsigned grid) {
  require(n >= 1 && grid >= 1, "sup_norm_report needs n >= 1 and a non-empty grid");
  SupNormReport r;
  r.n = n;
  r.even_sup = abs(bernoulli_number(2 * n));
  r.odd_bound = Interval::from_rational(r.even_sup * (2 * n + 1), prec) / two_pi(prec);
  const BigRational shrink = 1 - rational_pow(BigRational(1, 4), n) * 4;
  r.odd_quarter_lower = r.odd_bound * shrink;

  const RatPolynomial& B = bernoulli_polynomial(2 * n + 1);
  std::vector<BigRational> xs;
  for (unsigned j = 0; j <= grid; ++j) xs.push_back(make_rational(j, grid));
  for (int q = 1; q <= 3; ++q) xs.push_back(make_rational(q, 4));
  r.grid_max = 0;
  for (const auto& x : xs) {
    const BigRational v = abs(B(x));
    if (v > r.grid_max) r.grid_max = v;
  }
  r.quarter_value = abs(B(BigRational(1, 4)));
  r.grid_ok = mpfr_cmp_q(r.odd_bound.lo().raw(), r.grid_max.get_mpq_t()) > 0;
  r.quarter_ok = mpfr_cmp_q(r.odd_quarter_lower.hi().raw(), r.quarter_value.get_mpq_t()) <= 0;
  r.sharpness_ratio = Interval::from_rational(r.grid_max, prec) / r.odd_bound;
  return r;
}

AlphaZero find_alpha(unsigned n, const HPFloat& tol) {
  require(n >= 1 && tol.sign() > 0, "find_alpha needs n >= 1 and tol > 0");
  const prec_t prec = tol.prec();
  const RatPolynomial f = bernoulli_polynomial(2 * n) * BigRational(n % 2 ? -1 : 1);

  // 1/4 - 1/(pi 4^n), enclosed
  const Interval L = Interval::from_rational(BigRational(1, 4), prec) -
                     Interval::from_int(1, prec) / (Interval::pi(prec) * rational_pow(4, n));
  AlphaZero r;
  r.n = n;
  BigRational a = L.lo().to_rational();
  BigRational b(1, 4);
  if (!(sign_at(f, a) < 0 && sign_at(f, b) > 0)) {
    r.used_fallback = true;
    a = 0;
    b = BigRational(1, 2);
    if (!(sign_at(f, a) < 0 && sign_at(f, b) > 0))
      fail(ErrorCode::BracketFailure, "no sign change of B_" + std::to_string(2 * n) + " on [0, 1/2]");
  }
  r.initial_width = b - a;
  const BigRational tq = tol.to_rational();
  while (b - a > tq) {
    BigRational m = (a + b) / 2;
    const int s = sign_at(f, m);
    ++r.steps;
    if (s == 0) {
      a = b = m;
      break;
    }
    (s < 0 ? a : b) = std::move(m);
  }
  r.lo = a;
  r.hi = b;
  r.bracket = Interval(HPFloat::from_rational(a, prec, MPFR_RNDD), HPFloat::from_rational(b, prec, MPFR_RNDU));
  r.width = r.bracket.width();
  // f is increasing on [0, 1/2], so f(x) < 0 iff x < alpha.
  r.bounds_ok = sign_at(f, L.hi().to_rational()) < 0 && sign_at(f, BigRational(1, 4)) > 0;
  return r;
}

bool alpha_less(const AlphaZero& a, const AlphaZero& b) { return a.hi < b.lo; }

Interval l1_norm_bound(unsigned n, prec_t prec) {
  return Interval::from_rational(BigRational(factorial(n) * 16), prec) / pow(two_pi(prec), n + 1);
}

Interval l1_norm(unsigned n, prec_t prec) {
  require(n >= 1, "l1_norm needs n >= 1");
  Interval v(prec);
  if (n % 2 == 1) {
    const BigRational c = (4 - make_rational(1, BigInt(1) << (n - 1))) / BigRational(n + 1);
    v = Interval::from_rational(c * abs(bernoulli_number(n + 1)), prec);
  } else {
    const AlphaZero a = find_alpha(n / 2, HPFloat::pow2(-static_cast<long>(prec) - 8, prec));
    v = abs(eval(bernoulli_polynomial(n + 1), a.bracket)) * make_rational(4, n + 1);
  }
  const Interval bound = l1_norm_bound(n, prec);
  if (!certainly_less(v, bound))
    fail(ErrorCode::BoundViolation, "L1 norm of B_" + std::to_string(n) + " " + v.to_string(20) +
                                        " not below " + bound.to_string(20));
  return v;
}

Complex dilcher_truncation(unsigned n, const Complex& z) {
  require(n >= 2, "dilcher_truncation needs n >= 2");
  const ComplexInterval t = truncation(n, {Interval(z.re), Interval(z.im)});
  return {t.re.mid(), t.im.mid()};
}

DilcherCheck dilcher_check(unsigned n, const Complex& z) {
  require(n >= 2, "dilcher_check needs n >= 2");
  DilcherCheck out;
  const auto margin = [&](prec_t prec) {
    const ComplexInterval zp{Interval::from_rational(z.re.to_rational(), prec),
                             Interval::from_rational(z.im.to_rational(), prec)};
    const ComplexInterval w{zp.re + BigRational(1, 2), zp.im};
    const auto coeffs = interval_coeffs(bernoulli_polynomial(n), prec);
    ComplexInterval acc{Interval(prec), Interval(prec)};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = cadd(cmul(acc, w), {*it, Interval(prec)});
    Interval scale = pow(two_pi(prec), n) / Interval::from_rational(BigRational(factorial(n) * 2), prec);
    if ((n / 2) % 2) scale = -scale;
    const ComplexInterval t = truncation(n, zp);
    const ComplexInterval diff{acc.re * scale - t.re, acc.im * scale - t.im};
    out.deviation = cabs(diff);
    out.bound = exp(cabs(zp) * Interval::pi(prec) * 4) / pow(Interval::from_int(2, prec), n);
    return out.bound - out.deviation;
  };
  out.pass = certify_positive(margin, z.re.prec()).pass;
  return out;
}

ConvergenceCheck normalized_convergence_check(unsigned n, unsigned grid, prec_t prec) {
  require(n >= 1 && grid >= 1, "normalized_convergence_check needs n >= 1 and a non-empty grid");
  ConvergenceCheck r;
  const Interval tp = two_pi(prec);
  const auto ce = interval_coeffs(bernoulli_polynomial(2 * n), prec);
  const auto co = interval_coeffs(bernoulli_polynomial(2 * n + 1), prec);
  Interval se = pow(tp, 2 * n) / Interval::from_rational(BigRational(factorial(2 * n) * 2), prec);
  Interval so = pow(tp, 2 * n + 1) / Interval::from_rational(BigRational(factorial(2 * n + 1) * 2), prec);
  if (n % 2 == 0) {
    se = -se;
    so = -so;
  }
  std::vector<BigRational> xs;
  for (unsigned j = 0; j <= grid; ++j) xs.push_back(make_rational(j, grid));
  for (int q = 1; q <= 3; ++q) xs.push_back(make_rational(q, 4));
  r.even_deviation = HPFloat(prec);
  r.odd_deviation = HPFloat(prec);
  for (const auto& q : xs) {
    const Interval x = Interval::from_rational(q, prec);
    const Interval arg = tp * x;
    const Interval de = abs(horner(ce, x) * se - cos(arg));
    const Interval dodd = abs(horner(co, x) * so - sin(arg));
    if (de.hi() > r.even_deviation) r.even_deviation = de.hi();
    if (dodd.hi() > r.odd_deviation) r.odd_deviation = dodd.hi();
  }
  const Interval be = Interval::from_rational(make_rational(3, BigInt(1) << (2 * n)), prec);
  const Interval bo = Interval::from_rational(make_rational(3, BigInt(1) << (2 * n + 1)), prec);
  r.even_ok = r.even_deviation < be.lo();
  r.odd_ok = r.odd_deviation < bo.lo();
  return r;
}

GrowthReport bernoulli_growth_report(unsigned n, prec_t prec) {
  require(n >= 1, "bernoulli_growth_report needs n >= 1");
  GrowthReport r;
  r.zeta_ratio = Interval::from_rational(abs(bernoulli_number(2 * n)), prec) * pow(two_pi(prec), 2 * n) /
                 Interval::from_rational(BigRational(factorial(2 * n) * 2), prec);
  const Interval one = Interval::from_int(1, prec);
  r.ratio_in_range = certainly_less(one, r.zeta_ratio) && certainly_less(r.zeta_ratio, Interval::from_int(2, prec));
  const BigRational cap = 1 + rational_pow(BigRational(1, 4), n) * 3;
  r.bound_ok = certainly_less(r.zeta_ratio, Interval::from_rational(cap, prec));
  return r;
}

}  // namespace bern
