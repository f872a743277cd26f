#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bernoulli/euler_maclaurin.hpp"

namespace bern {

enum class RuleKind { LeftRiemann, RightRiemann, Midpoint, Trapezoid, Simpson, Gauss2, Romberg };

struct RuleId {
  RuleKind kind = RuleKind::Trapezoid;
  unsigned level = 0;  // Romberg only

  // "left", "right", "midpoint", "trapezoid", "simpson", "gauss2", "romberg:L"
  static RuleId parse(const std::string& text);
  std::string name() const;
  friend bool operator==(const RuleId&, const RuleId&) = default;
};

RuleId romberg(unsigned level);
// Power of 1/p of the leading error term.
unsigned rule_order(const RuleId& rule);

HPFloat apply_rule(const RuleId& rule, const IntegrandSpec& f, unsigned p, prec_t prec = kDefaultPrec);

// alpha = 1/2 - 1/sqrt(12), the Gauss-2 node offset.
HPFloat gauss2_alpha(prec_t prec);

struct ExpansionTerm {
  unsigned power = 0;        // of 1/p
  BigRational factor;        // exact multiplier of delta f^{(deriv)}
  unsigned deriv = 0;
  HPFloat coefficient;       // factor * delta f^{(deriv)}
};

// integral - rule_p = sum_j coefficient_j / p^{power_j} + O(p^{-m-1})
struct ErrorExpansion {
  RuleId rule;
  std::vector<ExpansionTerm> terms;
  unsigned truncation_order = 0;

  HPFloat value(unsigned p, prec_t prec) const;
};
ErrorExpansion error_expansion(const RuleId& rule, const IntegrandSpec& f, unsigned m, prec_t prec = kDefaultPrec);

struct OrderLimit {
  std::vector<HPFloat> scaled;  // p^r (integral - rule_p)
  HPFloat extrapolated;
  HPFloat expected;             // leading expansion coefficient
  double rel_error_last = 0;    // scaled.back() vs expected
  double rel_error_extrapolated = 0;
};
// Throws OrderMismatch when the 1% agreement fails.
OrderLimit order_limit_check(const RuleId& rule, const IntegrandSpec& f, const std::vector<unsigned>& p_list,
                             prec_t prec = kDefaultPrec);

BigRational q_binomial(unsigned n, unsigned m, const BigRational& q);
// Multiplier of -b_{2k}/(2k)! delta f^{(2k-1)} in the level-l Romberg expansion.
BigRational romberg_coefficient(unsigned level, unsigned k);
// The same coefficient as prod_{j=1}^{l} (4^{j-k} - 1)/(4^j - 1).
BigRational romberg_coefficient_product(unsigned level, unsigned k);

struct RombergCheck {
  HPFloat value;         // T_p^{(l)}
  ErrorExpansion expansion;
  Interval residual;     // integral - T - sum of terms
  HPFloat bound;         // 16/pi 2^{-l(l+1)} (2 pi p)^{-m} sup |f^{(m)}|
  unsigned first_k = 0;  // smallest k with a nonzero coefficient
};
RombergCheck romberg_expansion_check(const IntegrandSpec& f, unsigned p, unsigned level, unsigned m,
                                     prec_t prec = kDefaultPrec);

struct SinglePanelCheck {
  Interval error;  // integral - T_1^{(l)}
  HPFloat bound;   // 10 2^{-(l+2)(l+1)} pi^{-2l-2} sup |f^{(2l+2)}|
  bool pass = false;
};
SinglePanelCheck romberg_single_panel_check(const IntegrandSpec& f, unsigned level, prec_t prec = kDefaultPrec);

// R_{m,p} of the trapezoid expansion when f^{(2m-1)} is decreasing.
Interval trapezoid_monotone_remainder(const IntegrandSpec& f, unsigned p, unsigned m, prec_t prec = kDefaultPrec);

struct ConvergenceRow {
  std::string rule;
  unsigned p = 0;
  HPFloat value;
  HPFloat error;
  HPFloat scaled_error;
  std::optional<double> measured_order;
};
std::vector<ConvergenceRow> convergence_table(const RuleId& rule, const IntegrandSpec& f,
                                              const std::vector<unsigned>& p_list, prec_t prec = kDefaultPrec);
// rule,p,value,error,scaled_error,measured_order
std::string convergence_csv(const std::vector<ConvergenceRow>& rows, int digits, bool header = true);

}  // namespace bern
