#pragma once

#include <string>
#include <vector>

#include "bernoulli/hpfloat.hpp"

namespace bern {

BigRational harmonic(unsigned long n);
// H_n summed in interval arithmetic.
Interval harmonic_interval(unsigned long n, prec_t prec);

// Certified enclosure of Euler's constant, width <= 2^{-prec+4}. Memoized.
Interval euler_gamma(prec_t prec = kDefaultPrec);
// gamma rounded to `digits` decimals; both ends of the enclosure must agree.
std::string gamma_digits(unsigned digits);

struct GammaBoundsRow {
  unsigned long n = 0;
  Interval lower, upper;          // gamma_n^-, gamma_n^+
  std::string lower_text, upper_text;  // rounded to 10 decimals
};
// gamma_n^+ = H_n - ln n - 1/(2n) + 1/(12 n^2), gamma_n^- = gamma_n^+ - 1/(120 n^4)
std::vector<GammaBoundsRow> gamma_bounds_table(const std::vector<unsigned long>& n_list, prec_t prec = kDefaultPrec);

struct HarmonicExpansion {
  unsigned long n = 0;
  unsigned m = 0;
  Interval truncated_value;  // ln n + gamma + 1/(2n) - sum_{k<m} b_{2k}/(2k n^{2k})
  Interval error_enclosure;  // H_n - truncated_value
  Interval gamma_used;
  BigRational bound;         // |b_{2m}|/(2m n^{2m})
  bool pass = false;         // 0 < (-1)^m error < bound, certified
};
HarmonicExpansion harmonic_expansion(unsigned long n, unsigned m, prec_t prec = kDefaultPrec);

enum class SeriesKind { C, D, E };
std::string series_name(SeriesKind kind);
SeriesKind parse_series_kind(const std::string& text);

struct SeriesValue {
  SeriesKind kind = SeriesKind::C;
  unsigned p = 0;
  Interval value;
  unsigned terms = 0;      // directly summed terms
  unsigned tail_order = 0; // order of the tail expansion, 0 for none
};

// Direct sum of `terms` terms plus an enclosed tail. For C and D the tail is
// expanded to `tail_order`; for E a closed-form tail is used when
// `exact_tail`, the alternating-series bound otherwise.
SeriesValue series_C_budget(unsigned p, unsigned terms, unsigned tail_order, prec_t prec);
SeriesValue series_D_budget(unsigned p, unsigned terms, unsigned tail_order, prec_t prec);
SeriesValue series_E_budget(unsigned p, unsigned terms, bool exact_tail, prec_t prec);

// Enclosures of width <= tol; PrecisionUnreachable otherwise.
SeriesValue series_C(unsigned p, const HPFloat& tol, prec_t prec = kDefaultPrec);
SeriesValue series_D(unsigned p, const HPFloat& tol, prec_t prec = kDefaultPrec);
SeriesValue series_E(unsigned p, const HPFloat& tol, prec_t prec = kDefaultPrec);
SeriesValue series_value(SeriesKind kind, unsigned p, const HPFloat& tol, prec_t prec = kDefaultPrec);

struct SandwichCheck {
  Interval witness;  // eps_{p,m} or eps'_{p,m}
  BigRational bound; // |b_{2m}|
  bool pass = false;
};
// C_p = -sum_{k<m} b_{2k} zeta(2k)/(2k p^{2k}) + (-1)^m zeta(2m)/(2m p^{2m}) eps
SandwichCheck series_C_sandwich(unsigned p, unsigned m, prec_t prec = kDefaultPrec);
// D_p = ln2/(2p) - sum_{k<m} b_{2k} eta(2k)/(2k p^{2k}) + (-1)^m eta(2m)/(2m p^{2m}) eps'
SandwichCheck series_D_sandwich(unsigned p, unsigned m, prec_t prec = kDefaultPrec);

struct IdentityCheck {
  Interval residual;
  bool pass = false;  // residual encloses 0
};
// E_p = ln p + gamma - ln(pi/2) + 2 D_p
IdentityCheck series_E_identity(unsigned p, prec_t prec = kDefaultPrec);

}  // namespace bern
