#pragma once

#include "bernoulli/exact_core.hpp"
#include "bernoulli/hpfloat.hpp"

namespace bern {

HPFloat pi(prec_t prec);

// B_n({x}); precision follows x.
HPFloat periodic_bernoulli(unsigned n, const HPFloat& x);

struct SupNormReport {
  unsigned n = 0;
  BigRational even_sup;           // |b_{2n}|
  Interval odd_bound;             // (2n+1)|b_{2n}|/(2 pi)
  Interval odd_quarter_lower;     // (1 - 4/2^{2n}) odd_bound
  BigRational grid_max;           // max |B_{2n+1}| over the grid
  BigRational quarter_value;      // |B_{2n+1}(1/4)|
  Interval sharpness_ratio;       // grid_max / odd_bound
  bool grid_ok = false;
  bool quarter_ok = false;
  explicit operator bool() const { return grid_ok && quarter_ok; }
};
// Grid: `grid` uniform steps on [0, 1]; 1/4, 1/2, 3/4 are added when absent.
SupNormReport sup_norm_report(unsigned n, prec_t prec = kDefaultPrec, unsigned grid = 10000);

struct AlphaZero {
  unsigned n = 0;
  BigRational lo, hi;   // exact dyadic bracket
  Interval bracket;
  HPFloat width;
  unsigned steps = 0;
  BigRational initial_width;
  bool used_fallback = false;
  bool bounds_ok = false;   // 1/4 - 1/(pi 4^n) < alpha_n < 1/4
};
// Bisection with exact sign evaluation of (-1)^n B_{2n} at dyadic points.
AlphaZero find_alpha(unsigned n, const HPFloat& tol);
// Certified alpha_a < alpha_b from the brackets.
bool alpha_less(const AlphaZero& a, const AlphaZero& b);

// Enclosure of the L1 norm of B_n on [0, 1]; throws BoundViolation if the
// 16 n!/(2 pi)^{n+1} bound is not certified.
Interval l1_norm(unsigned n, prec_t prec = kDefaultPrec);
Interval l1_norm_bound(unsigned n, prec_t prec);

struct Complex {
  HPFloat re, im;
};
struct ComplexInterval {
  Interval re, im;
};

Complex dilcher_truncation(unsigned n, const Complex& z);

struct DilcherCheck {
  Interval deviation;  // |normalized B_n(z + 1/2) - T_n(z)|
  Interval bound;      // e^{4 pi |z|} / 2^n
  bool pass = false;
};
DilcherCheck dilcher_check(unsigned n, const Complex& z);

struct ConvergenceCheck {
  HPFloat even_deviation;   // certified upper bounds of the grid maxima
  HPFloat odd_deviation;
  bool even_ok = false;     // < 3 / 2^{2n}
  bool odd_ok = false;      // < 3 / 2^{2n+1}
  explicit operator bool() const { return even_ok && odd_ok; }
};
ConvergenceCheck normalized_convergence_check(unsigned n, unsigned grid, prec_t prec = kDefaultPrec);

struct GrowthReport {
  Interval zeta_ratio;   // |b_{2n}| (2 pi)^{2n} / (2 (2n)!)
  bool ratio_in_range = false;
  bool bound_ok = false; // |b_{2n}| < 2 (1 + 3/2^{2n}) (2n)! / (2 pi)^{2n}
};
GrowthReport bernoulli_growth_report(unsigned n, prec_t prec = kDefaultPrec);

}  // namespace bern
