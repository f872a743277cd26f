#pragma once

#include <mpfr.h>

#include <functional>
#include <string>

#include "bernoulli/exact_core.hpp"

namespace bern {

using prec_t = mpfr_prec_t;
inline constexpr prec_t kDefaultPrec = 256;
inline constexpr prec_t kMaxPrec = 4096;

// Owning mpfr_t with an explicit precision. Arithmetic rounds to nearest at
// the larger operand precision.
class HPFloat {
 public:
  explicit HPFloat(prec_t prec = kDefaultPrec);
  HPFloat(long v, prec_t prec);
  HPFloat(const HPFloat& o);
  HPFloat(HPFloat&& o) noexcept;
  HPFloat& operator=(const HPFloat& o);
  HPFloat& operator=(HPFloat&& o) noexcept;
  ~HPFloat();

  static HPFloat from_double(double v, prec_t prec);
  static HPFloat from_rational(const BigRational& q, prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);
  static HPFloat from_string(const std::string& s, prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);
  static HPFloat pi(prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);
  // 2^e
  static HPFloat pow2(long e, prec_t prec);

  prec_t prec() const { return mpfr_get_prec(v_); }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  BigRational to_rational() const;
  // Significant-digit scientific rendering.
  std::string to_string(int digits = 0) const;
  // Fixed-point rendering with `decimals` digits after the point.
  std::string to_fixed(int decimals, mpfr_rnd_t rnd = MPFR_RNDN) const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  HPFloat& operator+=(const HPFloat& o);
  HPFloat& operator-=(const HPFloat& o);
  HPFloat& operator*=(const HPFloat& o);
  HPFloat& operator/=(const HPFloat& o);
  HPFloat& operator*=(long s);
  HPFloat& operator/=(long s);

  friend HPFloat operator+(HPFloat a, const HPFloat& b) { return a += b; }
  friend HPFloat operator-(HPFloat a, const HPFloat& b) { return a -= b; }
  friend HPFloat operator*(HPFloat a, const HPFloat& b) { return a *= b; }
  friend HPFloat operator/(HPFloat a, const HPFloat& b) { return a /= b; }
  friend HPFloat operator*(HPFloat a, long s) { return a *= s; }
  friend HPFloat operator*(long s, HPFloat a) { return a *= s; }
  friend HPFloat operator/(HPFloat a, long s) { return a /= s; }
  HPFloat operator-() const;

  friend bool operator<(const HPFloat& a, const HPFloat& b) { return mpfr_less_p(a.v_, b.v_); }
  friend bool operator>(const HPFloat& a, const HPFloat& b) { return mpfr_greater_p(a.v_, b.v_); }
  friend bool operator<=(const HPFloat& a, const HPFloat& b) { return mpfr_lessequal_p(a.v_, b.v_); }
  friend bool operator>=(const HPFloat& a, const HPFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_); }
  friend bool operator==(const HPFloat& a, const HPFloat& b) { return mpfr_equal_p(a.v_, b.v_); }

 private:
  mpfr_t v_;
};

HPFloat abs(const HPFloat& x);
HPFloat sqrt(const HPFloat& x);
HPFloat exp(const HPFloat& x);
HPFloat log(const HPFloat& x);
HPFloat sin(const HPFloat& x);
HPFloat cos(const HPFloat& x);
HPFloat floor(const HPFloat& x);
HPFloat pow(const HPFloat& x, unsigned long e);
HPFloat max(const HPFloat& a, const HPFloat& b);
// Spacing of representable numbers at x.
HPFloat ulp(const HPFloat& x);

// Closed interval [lo, hi] with outward rounding on every operation.
class Interval {
 public:
  explicit Interval(prec_t prec = kDefaultPrec);
  Interval(HPFloat lo, HPFloat hi);
  explicit Interval(const HPFloat& point) : Interval(point, point) {}

  static Interval from_int(long v, prec_t prec);
  static Interval from_rational(const BigRational& q, prec_t prec);
  static Interval pi(prec_t prec);
  static Interval ln2(prec_t prec);
  static Interval hull(const HPFloat& a, const HPFloat& b);

  const HPFloat& lo() const { return lo_; }
  const HPFloat& hi() const { return hi_; }
  prec_t prec() const { return lo_.prec(); }

  HPFloat mid() const;
  HPFloat width() const;
  HPFloat mag() const;  // max |x|
  HPFloat mig() const;  // min |x|

  bool contains(const HPFloat& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const BigRational& q) const;
  bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
  bool positive() const { return lo_.sign() > 0; }
  bool negative() const { return hi_.sign() < 0; }
  bool overlaps(const Interval& o) const { return !(hi_ < o.lo_ || o.hi_ < lo_); }
  // Certainly a < b.
  friend bool certainly_less(const Interval& a, const Interval& b) { return a.hi_ < b.lo_; }

  Interval& operator+=(const Interval& o);
  Interval& operator-=(const Interval& o);
  Interval& operator*=(const Interval& o);
  Interval& operator/=(const Interval& o);
  Interval& operator*=(long s);
  Interval& operator/=(long s);

  friend Interval operator+(Interval a, const Interval& b) { return a += b; }
  friend Interval operator-(Interval a, const Interval& b) { return a -= b; }
  friend Interval operator*(Interval a, const Interval& b) { return a *= b; }
  friend Interval operator/(Interval a, const Interval& b) { return a /= b; }
  friend Interval operator*(Interval a, long s) { return a *= s; }
  friend Interval operator*(long s, Interval a) { return a *= s; }
  friend Interval operator/(Interval a, long s) { return a /= s; }
  Interval operator-() const { return Interval(-hi_, -lo_); }

  // "[lo, hi]" with the given significant digits.
  std::string to_string(int digits = 0) const;

 private:
  HPFloat lo_, hi_;
};

Interval operator+(const Interval& a, const BigRational& q);
Interval operator*(const Interval& a, const BigRational& q);
Interval abs(const Interval& x);
Interval sqrt(const Interval& x);
Interval exp(const Interval& x);
Interval log(const Interval& x);
Interval sin(const Interval& x);
Interval cos(const Interval& x);
Interval pow(const Interval& x, unsigned long e);
Interval digamma(const Interval& x);
Interval hull(const Interval& a, const Interval& b);
// Interval Horner evaluation of an exact polynomial.
Interval eval(const RatPolynomial& p, const Interval& x);

// Strict inequality certification. `margin(prec)` encloses a quantity that
// must be positive. Passes at once when the lower end clears 2^{-prec/2};
// undecided enclosures are recomputed at doubled precision up to kMaxPrec.
struct StrictCheck {
  bool pass = false;
  Interval margin;
  prec_t prec_used = 0;
};
StrictCheck certify_positive(const std::function<Interval(prec_t)>& margin, prec_t prec);
// lo < value < hi under the same rule; `margin` holds the smaller side.
StrictCheck certify_inside(const std::function<Interval(prec_t)>& value, const BigRational& lo, const BigRational& hi,
                           prec_t prec);

}  // namespace bern
