#include "bernoulli/hpfloat.hpp"

#include <algorithm>
#include <cmath>

#include "bernoulli/errors.hpp"

namespace bern {

namespace {

// Raises the precision of `x` to at least `p`, keeping its value.
void widen(HPFloat& x, prec_t p) {
  if (x.prec() < p) mpfr_prec_round(x.raw(), p, MPFR_RNDN);
}

}  // namespace

// ---------------------------------------------------------------------------
// HPFloat

HPFloat::HPFloat(prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

HPFloat::HPFloat(long v, prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_si(v_, v, MPFR_RNDN);
}

HPFloat::HPFloat(const HPFloat& o) {
  mpfr_init2(v_, o.prec());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

HPFloat::HPFloat(HPFloat&& o) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}

HPFloat& HPFloat::operator=(const HPFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.prec());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

HPFloat& HPFloat::operator=(HPFloat&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

HPFloat::~HPFloat() { mpfr_clear(v_); }

HPFloat HPFloat::from_double(double v, prec_t prec) {
  HPFloat r(prec);
  mpfr_set_d(r.v_, v, MPFR_RNDN);
  return r;
}

HPFloat HPFloat::from_rational(const BigRational& q, prec_t prec, mpfr_rnd_t rnd) {
  HPFloat r(prec);
  mpfr_set_q(r.v_, q.get_mpq_t(), rnd);
  return r;
}

HPFloat HPFloat::from_string(const std::string& s, prec_t prec, mpfr_rnd_t rnd) {
  HPFloat r(prec);
  if (mpfr_set_str(r.v_, s.c_str(), 10, rnd) != 0) fail(ErrorCode::InvalidArgument, "not a number: '" + s + "'");
  return r;
}

HPFloat HPFloat::pi(prec_t prec, mpfr_rnd_t rnd) {
  HPFloat r(prec);
  mpfr_const_pi(r.v_, rnd);
  return r;
}

HPFloat HPFloat::pow2(long e, prec_t prec) {
  HPFloat r(prec);
  mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
  return r;
}

BigRational HPFloat::to_rational() const {
  BigRational q;
  if (is_zero()) return q;
  BigInt m;
  const mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), v_);
  q = m;
  if (e >= 0)
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<unsigned long>(e));
  else
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<unsigned long>(-e));
  return q;
}

std::string HPFloat::to_string(int digits) const {
  if (digits <= 0) digits = static_cast<int>(std::ceil(static_cast<double>(prec()) * 0.30102999566398120));
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", digits - 1, v_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

std::string HPFloat::to_fixed(int decimals, mpfr_rnd_t rnd) const {
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(decimals));
  mpfr_t t;
  mpfr_init2(t, prec() + 4 * decimals + 64);
  mpfr_mul_z(t, v_, scale.get_mpz_t(), MPFR_RNDN);  // exact at this precision
  BigInt z;
  mpfr_get_z(z.get_mpz_t(), t, rnd);
  mpfr_clear(t);
  const bool neg = z < 0;
  std::string digits = BigInt(abs(z)).get_str();
  if (digits.size() <= static_cast<size_t>(decimals))
    digits.insert(0, static_cast<size_t>(decimals) + 1 - digits.size(), '0');
  std::string out = neg ? "-" : "";
  out += digits.substr(0, digits.size() - decimals);
  if (decimals > 0) out += "." + digits.substr(digits.size() - decimals);
  return out;
}

HPFloat& HPFloat::operator+=(const HPFloat& o) {
  widen(*this, o.prec());
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

HPFloat& HPFloat::operator-=(const HPFloat& o) {
  widen(*this, o.prec());
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

HPFloat& HPFloat::operator*=(const HPFloat& o) {
  widen(*this, o.prec());
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

HPFloat& HPFloat::operator/=(const HPFloat& o) {
  widen(*this, o.prec());
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

HPFloat& HPFloat::operator*=(long s) {
  mpfr_mul_si(v_, v_, s, MPFR_RNDN);
  return *this;
}

HPFloat& HPFloat::operator/=(long s) {
  mpfr_div_si(v_, v_, s, MPFR_RNDN);
  return *this;
}

HPFloat HPFloat::operator-() const {
  HPFloat r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

#define BERN_UNARY(name, call)                    \
  HPFloat name(const HPFloat& x) {                \
    HPFloat r(x.prec());                          \
    call(r.raw(), x.raw(), MPFR_RNDN);            \
    return r;                                     \
  }

BERN_UNARY(abs, mpfr_abs)
BERN_UNARY(sqrt, mpfr_sqrt)
BERN_UNARY(exp, mpfr_exp)
BERN_UNARY(log, mpfr_log)
BERN_UNARY(sin, mpfr_sin)
BERN_UNARY(cos, mpfr_cos)
#undef BERN_UNARY

HPFloat floor(const HPFloat& x) {
  HPFloat r(x.prec());
  mpfr_floor(r.raw(), x.raw());
  return r;
}

HPFloat pow(const HPFloat& x, unsigned long e) {
  HPFloat r(x.prec());
  mpfr_pow_ui(r.raw(), x.raw(), e, MPFR_RNDN);
  return r;
}

HPFloat max(const HPFloat& a, const HPFloat& b) { return a < b ? b : a; }

HPFloat ulp(const HPFloat& x) {
  if (x.is_zero()) return HPFloat::pow2(mpfr_get_emin(), x.prec());
  return HPFloat::pow2(mpfr_get_exp(x.raw()) - x.prec(), x.prec());
}

// ---------------------------------------------------------------------------
// Interval

Interval::Interval(prec_t prec) : lo_(prec), hi_(prec) {}

Interval::Interval(HPFloat lo, HPFloat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) fail(ErrorCode::InvalidArgument, "interval with lo > hi");
}

Interval Interval::from_int(long v, prec_t prec) {
  Interval r(prec);
  mpfr_set_si(r.lo_.raw(), v, MPFR_RNDD);
  mpfr_set_si(r.hi_.raw(), v, MPFR_RNDU);
  return r;
}

Interval Interval::from_rational(const BigRational& q, prec_t prec) {
  return Interval(HPFloat::from_rational(q, prec, MPFR_RNDD), HPFloat::from_rational(q, prec, MPFR_RNDU));
}

Interval Interval::pi(prec_t prec) { return Interval(HPFloat::pi(prec, MPFR_RNDD), HPFloat::pi(prec, MPFR_RNDU)); }

Interval Interval::ln2(prec_t prec) {
  Interval r(prec);
  mpfr_const_log2(r.lo_.raw(), MPFR_RNDD);
  mpfr_const_log2(r.hi_.raw(), MPFR_RNDU);
  return r;
}

Interval Interval::hull(const HPFloat& a, const HPFloat& b) { return a < b ? Interval(a, b) : Interval(b, a); }

HPFloat Interval::mid() const {
  HPFloat m(prec());
  mpfr_add(m.raw(), lo_.raw(), hi_.raw(), MPFR_RNDN);
  mpfr_div_2ui(m.raw(), m.raw(), 1, MPFR_RNDN);
  return m;
}

HPFloat Interval::width() const {
  HPFloat w(prec());
  mpfr_sub(w.raw(), hi_.raw(), lo_.raw(), MPFR_RNDU);
  return w;
}

HPFloat Interval::mag() const { return max(abs(lo_), abs(hi_)); }

HPFloat Interval::mig() const {
  if (contains_zero()) return HPFloat(prec());
  return lo_.sign() > 0 ? lo_ : abs(hi_);
}

bool Interval::contains(const BigRational& q) const {
  return mpfr_cmp_q(lo_.raw(), q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_.raw(), q.get_mpq_t()) >= 0;
}

Interval& Interval::operator+=(const Interval& o) {
  const prec_t p = std::max(prec(), o.prec());
  widen(lo_, p);
  widen(hi_, p);
  mpfr_add(lo_.raw(), lo_.raw(), o.lo_.raw(), MPFR_RNDD);
  mpfr_add(hi_.raw(), hi_.raw(), o.hi_.raw(), MPFR_RNDU);
  return *this;
}

Interval& Interval::operator-=(const Interval& o) {
  const prec_t p = std::max(prec(), o.prec());
  widen(lo_, p);
  widen(hi_, p);
  mpfr_sub(lo_.raw(), lo_.raw(), o.hi_.raw(), MPFR_RNDD);
  mpfr_sub(hi_.raw(), hi_.raw(), o.lo_.raw(), MPFR_RNDU);
  return *this;
}

namespace {

using BinOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

Interval corners(const Interval& a, const Interval& b, BinOp op) {
  const prec_t p = std::max(a.prec(), b.prec());
  const HPFloat* xs[2] = {&a.lo(), &a.hi()};
  const HPFloat* ys[2] = {&b.lo(), &b.hi()};
  HPFloat lo(p), hi(p), t(p);
  bool first = true;
  for (const HPFloat* x : xs) {
    for (const HPFloat* y : ys) {
      op(t.raw(), x->raw(), y->raw(), MPFR_RNDD);
      if (first || t < lo) lo = t;
      op(t.raw(), x->raw(), y->raw(), MPFR_RNDU);
      if (first || t > hi) hi = t;
      first = false;
    }
  }
  return Interval(lo, hi);
}

}  // namespace

Interval& Interval::operator*=(const Interval& o) { return *this = corners(*this, o, mpfr_mul); }

Interval& Interval::operator/=(const Interval& o) {
  if (o.contains_zero()) fail(ErrorCode::InvalidArgument, "interval division by an interval containing 0");
  return *this = corners(*this, o, mpfr_div);
}

Interval& Interval::operator*=(long s) {
  if (s < 0) std::swap(lo_, hi_);
  mpfr_mul_si(lo_.raw(), lo_.raw(), s, MPFR_RNDD);
  mpfr_mul_si(hi_.raw(), hi_.raw(), s, MPFR_RNDU);
  return *this;
}

Interval& Interval::operator/=(long s) {
  if (s == 0) fail(ErrorCode::InvalidArgument, "interval division by 0");
  if (s < 0) std::swap(lo_, hi_);
  mpfr_div_si(lo_.raw(), lo_.raw(), s, MPFR_RNDD);
  mpfr_div_si(hi_.raw(), hi_.raw(), s, MPFR_RNDU);
  return *this;
}

std::string Interval::to_string(int digits) const {
  return "[" + lo_.to_string(digits) + ", " + hi_.to_string(digits) + "]";
}

Interval operator+(const Interval& a, const BigRational& q) { return a + Interval::from_rational(q, a.prec()); }
Interval operator*(const Interval& a, const BigRational& q) { return a * Interval::from_rational(q, a.prec()); }

Interval abs(const Interval& x) {
  if (x.lo().sign() >= 0) return x;
  if (x.hi().sign() <= 0) return -x;
  return Interval(HPFloat(x.prec()), x.mag());
}

namespace {

using UnOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

Interval monotone(const Interval& x, UnOp op) {
  HPFloat lo(x.prec()), hi(x.prec());
  op(lo.raw(), x.lo().raw(), MPFR_RNDD);
  op(hi.raw(), x.hi().raw(), MPFR_RNDU);
  return Interval(lo, hi);
}

// f(mid) +- (rad + 1 ulp) for a 1-Lipschitz f, clamped to [-1, 1].
Interval lipschitz(const Interval& x, UnOp op) {
  const prec_t p = x.prec();
  const HPFloat m = x.mid();
  HPFloat rad(p), t(p);
  mpfr_sub(rad.raw(), x.hi().raw(), m.raw(), MPFR_RNDU);
  mpfr_sub(t.raw(), m.raw(), x.lo().raw(), MPFR_RNDU);
  if (t > rad) rad = t;
  HPFloat s(p);
  op(s.raw(), m.raw(), MPFR_RNDN);
  HPFloat lo(s), hi(s);
  mpfr_nextbelow(lo.raw());
  mpfr_nextabove(hi.raw());
  mpfr_sub(lo.raw(), lo.raw(), rad.raw(), MPFR_RNDD);
  mpfr_add(hi.raw(), hi.raw(), rad.raw(), MPFR_RNDU);
  const HPFloat one(1, p), mone(-1, p);
  if (lo < mone) lo = mone;
  if (hi > one) hi = one;
  return Interval(lo, hi);
}

}  // namespace

Interval sqrt(const Interval& x) {
  if (x.lo().sign() < 0) fail(ErrorCode::InvalidArgument, "sqrt of a negative interval");
  return monotone(x, mpfr_sqrt);
}

Interval exp(const Interval& x) { return monotone(x, mpfr_exp); }

Interval log(const Interval& x) {
  if (x.lo().sign() <= 0) fail(ErrorCode::InvalidArgument, "log of a non-positive interval");
  return monotone(x, mpfr_log);
}

Interval digamma(const Interval& x) {
  if (x.lo().sign() <= 0) fail(ErrorCode::InvalidArgument, "digamma outside (0, inf)");
  return monotone(x, mpfr_digamma);
}

Interval sin(const Interval& x) { return lipschitz(x, mpfr_sin); }
Interval cos(const Interval& x) { return lipschitz(x, mpfr_cos); }

Interval pow(const Interval& x, unsigned long e) {
  if (e == 0) return Interval::from_int(1, x.prec());
  const Interval base = (e % 2 == 0) ? abs(x) : x;
  HPFloat lo(x.prec()), hi(x.prec());
  mpfr_pow_ui(lo.raw(), base.lo().raw(), e, MPFR_RNDD);
  mpfr_pow_ui(hi.raw(), base.hi().raw(), e, MPFR_RNDU);
  return Interval(lo, hi);
}

Interval hull(const Interval& a, const Interval& b) {
  return Interval(a.lo() < b.lo() ? a.lo() : b.lo(), a.hi() > b.hi() ? a.hi() : b.hi());
}

Interval eval(const RatPolynomial& p, const Interval& x) {
  Interval acc(x.prec());
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

StrictCheck certify_positive(const std::function<Interval(prec_t)>& margin, prec_t prec) {
  StrictCheck r;
  for (prec_t p = prec;; p *= 2) {
    r.margin = margin(p);
    r.prec_used = p;
    const HPFloat threshold = HPFloat::pow2(-static_cast<long>(p / 2), p);
    if (r.margin.lo() > threshold) {
      r.pass = true;
      return r;
    }
    if (r.margin.hi().sign() <= 0 || p >= kMaxPrec) {
      r.pass = r.margin.lo().sign() > 0;
      return r;
    }
  }
}

StrictCheck certify_inside(const std::function<Interval(prec_t)>& value, const BigRational& lo, const BigRational& hi,
                           prec_t prec) {
  StrictCheck r;
  for (prec_t p = prec;; p *= 2) {
    const Interval v = value(p);
    const Interval below = v - Interval::from_rational(lo, v.prec());
    const Interval above = Interval::from_rational(hi, v.prec()) - v;
    r.margin = below.lo() < above.lo() ? below : above;
    r.prec_used = p;
    const HPFloat threshold = HPFloat::pow2(-static_cast<long>(p / 2), p);
    if (r.margin.lo() > threshold) {
      r.pass = true;
      return r;
    }
    if (below.hi().sign() <= 0 || above.hi().sign() <= 0 || p >= kMaxPrec) {
      r.pass = r.margin.lo().sign() > 0;
      return r;
    }
  }
}

}  // namespace bern
