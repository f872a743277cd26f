#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "bernoulli/hpfloat.hpp"

namespace bern {

// A function on [0, 1] with closed-form derivatives.
struct IntegrandSpec {
  std::string name;
  unsigned max_order = 64;
  std::function<HPFloat(unsigned k, const HPFloat& x)> deriv;
  // f^{(k)}(1) - f^{(k)}(0)
  std::function<HPFloat(unsigned k, prec_t prec)> delta;
  // upper bound of sup |f^{(m)}| on [0, 1]
  std::function<HPFloat(unsigned m, prec_t prec)> sup_deriv;
  // orders k whose derivative f^{(k)} is non-increasing on [0, 1]
  std::set<unsigned> monotone_flags;

  HPFloat eval(const HPFloat& x) const { return deriv(0, x); }
};

IntegrandSpec exp_integrand();
IntegrandSpec reciprocal1p_integrand();
IntegrandSpec cos2pi_integrand();
IntegrandSpec log1p_integrand();
IntegrandSpec polynomial_integrand(const RatPolynomial& p, const std::string& name = "");
// "exp", "reciprocal1p", "cos2pi", "log1p", "poly:c0,c1,..." (ascending powers).
IntegrandSpec make_integrand(const std::string& name);
// exp, reciprocal1p, cos2pi, t^0..t^6, log1p
std::vector<IntegrandSpec> builtin_corpus();

struct QuadResult {
  HPFloat value;
  HPFloat error;  // estimate, not a bound
};
// Adaptive composite 15-point Gauss-Legendre on [a, b].
QuadResult integrate(const std::function<HPFloat(const HPFloat&)>& g, const HPFloat& a, const HPFloat& b,
                     const HPFloat& tol);
HPFloat gauss_legendre(const std::function<HPFloat(const HPFloat&)>& g, const HPFloat& a, const HPFloat& b,
                       unsigned points);
// Reference value of the integral over [0, 1] at tolerance 2^{-3 prec / 4}; memoized by name.
QuadResult reference_integral(const IntegrandSpec& f, prec_t prec);
HPFloat default_quad_tol(prec_t prec);

HPFloat composite_mean(const IntegrandSpec& f, unsigned p, const HPFloat& x);

struct EMResult {
  HPFloat estimate;                     // H_p(f; x)
  std::vector<HPFloat> correction_terms;  // B_k(x)/k! delta f^{(k-1)} / p^k, k = 1..m
  Interval remainder;                   // E(p, m, f; x)
  unsigned p = 0;
  unsigned m = 0;
  HPFloat x;
  HPFloat defining_value;               // integral - H_p + sum of terms
  HPFloat kernel_value;                 // p^{-m} / m! * int B~_m(x - p t) f^{(m)}(t) dt
  HPFloat tolerance;
  HPFloat bound;                        // 8/pi (2 pi p)^{-m} sup |f^{(m)}|

  // integral = estimate - sum(terms) + E
  HPFloat reconstructed_integral() const;
};
EMResult em_identity_check(const IntegrandSpec& f, unsigned p, unsigned m, const HPFloat& x,
                           const HPFloat& quad_tol);
HPFloat em_kernel_integral(const IntegrandSpec& f, unsigned p, unsigned m, const HPFloat& x);

struct DecayReport {
  std::vector<HPFloat> scaled;  // p^m E(p, m, f; x)
  bool decreasing = false;      // |last| < |first|, or all zero to tolerance
};
DecayReport decay_check(const IntegrandSpec& f, unsigned m, const HPFloat& x, const std::vector<unsigned>& p_list);

// R_m of the trapezoid-form expansion with a monotone odd derivative.
Interval signed_remainder_monotone(const IntegrandSpec& f, unsigned m, prec_t prec = kDefaultPrec);

// Finite-difference cross-check of deriv at 10 fixed pseudo-random points.
bool validate_derivatives(const IntegrandSpec& f, prec_t prec, unsigned max_k = 8);
// sup_deriv(m) >= max over a 10^3 grid of |f^{(m)}|.
bool validate_sup_bound(const IntegrandSpec& f, unsigned m, prec_t prec);
// Flags spot-checked on a 10^3 grid.
bool validate_monotone_flags(const IntegrandSpec& f, prec_t prec, unsigned max_k = 12);

}  // namespace bern
