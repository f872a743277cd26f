#include "bernoulli/quadrature.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "bernoulli/errors.hpp"

namespace bern {

namespace {

Interval two_pi(prec_t prec) { return Interval::pi(prec) * 2; }

HPFloat rat(const BigRational& q, prec_t prec) { return HPFloat::from_rational(q, prec); }

BigRational bk_over_fact(unsigned k) { return bernoulli_number(2 * k) / BigRational(factorial(2 * k)); }

// sum_{j<p} f((j + x)/p) / p
HPFloat panel_mean(const IntegrandSpec& f, unsigned p, const HPFloat& x) {
  const prec_t prec = x.prec();
  HPFloat s(prec);
  for (unsigned j = 0; j < p; ++j) s += f.eval((HPFloat(static_cast<long>(j), prec) + x) / static_cast<long>(p));
  return s / static_cast<long>(p);
}

HPFloat trapezoid(const IntegrandSpec& f, unsigned p, prec_t prec) {
  HPFloat s = (f.eval(HPFloat(0, prec)) + f.eval(HPFloat(1, prec))) / 2;
  for (unsigned j = 1; j < p; ++j) s += f.eval(HPFloat(static_cast<long>(j), prec) / static_cast<long>(p));
  return s / static_cast<long>(p);
}

// B_{2k}(1/2 - 1/sqrt(12)), exact: B_{2k}(1/2 + u) is even in u and u^2 = 1/12.
BigRational gauss2_bernoulli(unsigned k) {
  const RatPolynomial q = bernoulli_polynomial(2 * k).shift(BigRational(1, 2));
  BigRational v = 0;
  BigRational u2pow = 1;
  for (size_t j = 0; j < q.coeffs().size(); ++j) {
    if (j % 2 == 0) {
      v += q.coeffs()[j] * u2pow;
      u2pow /= 12;
    } else if (q.coeffs()[j] != 0) {
      fail(ErrorCode::IdentityViolation, "B_" + std::to_string(2 * k) + "(1/2 + u) is not even in u");
    }
  }
  return v;
}

// Multiplier of delta f^{(2k-1)} in integral - rule.
BigRational even_factor(const RuleId& rule, unsigned k) {
  const BigRational base = -bk_over_fact(k);
  switch (rule.kind) {
    case RuleKind::LeftRiemann:
    case RuleKind::RightRiemann:
    case RuleKind::Trapezoid: return base;
    case RuleKind::Midpoint: return base * (make_rational(2, BigInt(1) << (2 * k)) - 1);
    case RuleKind::Simpson: return -base * (1 - make_rational(4, BigInt(1) << (2 * k))) / 3;
    case RuleKind::Gauss2: return -gauss2_bernoulli(k) / BigRational(factorial(2 * k));
    case RuleKind::Romberg: return base * romberg_coefficient(rule.level, k);
  }
  return 0;
}

HPFloat log_ratio(const HPFloat& a, const HPFloat& b) { return log(abs(a) / abs(b)); }

}  // namespace

// ---------------------------------------------------------------------------
// Rules

RuleId RuleId::parse(const std::string& text) {
  std::string t;
  for (char c : text) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "left" || t == "leftriemann" || t == "left_riemann") return {RuleKind::LeftRiemann};
  if (t == "right" || t == "rightriemann" || t == "right_riemann") return {RuleKind::RightRiemann};
  if (t == "midpoint" || t == "mid") return {RuleKind::Midpoint};
  if (t == "trapezoid" || t == "trap") return {RuleKind::Trapezoid};
  if (t == "simpson") return {RuleKind::Simpson};
  if (t == "gauss2" || t == "gauss") return {RuleKind::Gauss2};
  if (t.rfind("romberg", 0) == 0) {
    std::string lv = t.substr(7);
    if (!lv.empty() && lv[0] == ':') lv.erase(0, 1);
    if (lv.empty()) return romberg(1);
    unsigned level = 0;
    for (char c : lv) {
      if (!std::isdigit(static_cast<unsigned char>(c)) || level > 64) fail(ErrorCode::InvalidArgument, "bad Romberg level in '" + text + "'");
      level = level * 10 + static_cast<unsigned>(c - '0');
    }
    return romberg(level);
  }
  fail(ErrorCode::InvalidArgument, "unknown rule '" + text + "'");
}

std::string RuleId::name() const {
  switch (kind) {
    case RuleKind::LeftRiemann: return "left";
    case RuleKind::RightRiemann: return "right";
    case RuleKind::Midpoint: return "midpoint";
    case RuleKind::Trapezoid: return "trapezoid";
    case RuleKind::Simpson: return "simpson";
    case RuleKind::Gauss2: return "gauss2";
    case RuleKind::Romberg: return "romberg:" + std::to_string(level);
  }
  return "?";
}

RuleId romberg(unsigned level) { return {RuleKind::Romberg, level}; }

unsigned rule_order(const RuleId& rule) {
  switch (rule.kind) {
    case RuleKind::LeftRiemann:
    case RuleKind::RightRiemann: return 1;
    case RuleKind::Midpoint:
    case RuleKind::Trapezoid: return 2;
    case RuleKind::Simpson:
    case RuleKind::Gauss2: return 4;
    case RuleKind::Romberg: return 2 * rule.level + 2;
  }
  return 0;
}

HPFloat gauss2_alpha(prec_t prec) {
  return HPFloat::from_rational(BigRational(1, 2), prec) - HPFloat(1, prec) / sqrt(HPFloat(12, prec));
}

HPFloat apply_rule(const RuleId& rule, const IntegrandSpec& f, unsigned p, prec_t prec) {
  require(p >= 1, "apply_rule needs p >= 1");
  switch (rule.kind) {
    case RuleKind::LeftRiemann: return panel_mean(f, p, HPFloat(0, prec));
    case RuleKind::RightRiemann: return panel_mean(f, p, HPFloat(1, prec));
    case RuleKind::Midpoint: return panel_mean(f, p, HPFloat::from_rational(BigRational(1, 2), prec));
    case RuleKind::Trapezoid: return trapezoid(f, p, prec);
    case RuleKind::Simpson: return (trapezoid(f, p, prec) + panel_mean(f, p, HPFloat::from_rational(BigRational(1, 2), prec)) * 2) / 3;
    case RuleKind::Gauss2: {
      const HPFloat a = gauss2_alpha(prec);
      return (panel_mean(f, p, a) + panel_mean(f, p, HPFloat(1, prec) - a)) / 2;
    }
    case RuleKind::Romberg: {
      std::vector<HPFloat> t;
      for (unsigned j = 0; j <= rule.level; ++j) t.push_back(trapezoid(f, p << j, prec));
      for (unsigned l = 1; l <= rule.level; ++l) {
        const long four = 1L << (2 * l);
        for (unsigned j = 0; j + l <= rule.level; ++j) t[j] = (t[j + 1] * four - t[j]) / (four - 1);
      }
      return t[0];
    }
  }
  return HPFloat(prec);
}

// ---------------------------------------------------------------------------
// Expansions

HPFloat ErrorExpansion::value(unsigned p, prec_t prec) const {
  HPFloat s(prec);
  for (const auto& t : terms) s += t.coefficient / pow(HPFloat(static_cast<long>(p), prec), t.power);
  return s;
}

ErrorExpansion error_expansion(const RuleId& rule, const IntegrandSpec& f, unsigned m, prec_t prec) {
  require(m <= f.max_order, "error_expansion: order exceeds the integrand's derivatives");
  ErrorExpansion e;
  e.rule = rule;
  e.truncation_order = m;
  const auto push = [&](unsigned power, const BigRational& factor, unsigned deriv) {
    if (factor == 0) return;
    e.terms.push_back({power, factor, deriv, rat(factor, prec) * f.delta(deriv, prec)});
  };
  if (m >= 1 && rule.kind == RuleKind::LeftRiemann) push(1, BigRational(1, 2), 0);
  if (m >= 1 && rule.kind == RuleKind::RightRiemann) push(1, BigRational(-1, 2), 0);
  for (unsigned k = 1; 2 * k <= m; ++k) push(2 * k, even_factor(rule, k), 2 * k - 1);
  return e;
}

OrderLimit order_limit_check(const RuleId& rule, const IntegrandSpec& f, const std::vector<unsigned>& p_list,
                             prec_t prec) {
  require(p_list.size() >= 3, "order_limit_check needs at least three p values");
  for (size_t i = 1; i < p_list.size(); ++i)
    require(p_list[i] == 2 * p_list[i - 1], "order_limit_check needs doubling p values");
  const unsigned r = rule_order(rule);
  const unsigned step = (r == 1) ? 1 : 2;  // exponent gap to the next error term
  const HPFloat I = reference_integral(f, prec).value;

  OrderLimit out;
  for (unsigned p : p_list)
    out.scaled.push_back((I - apply_rule(rule, f, p, prec)) * pow(HPFloat(static_cast<long>(p), prec), r));

  const long g1 = 1L << step;
  const long g2 = 1L << (2 * step);
  const size_t n = out.scaled.size();
  const HPFloat r1a = (out.scaled[n - 2] * g1 - out.scaled[n - 3]) / (g1 - 1);
  const HPFloat r1b = (out.scaled[n - 1] * g1 - out.scaled[n - 2]) / (g1 - 1);
  out.extrapolated = (r1b * g2 - r1a) / (g2 - 1);

  out.expected = HPFloat(prec);
  for (const auto& t : error_expansion(rule, f, r, prec).terms)
    if (t.power == r) out.expected = t.coefficient;

  const HPFloat tiny = HPFloat::pow2(-static_cast<long>(prec) / 2, prec);
  const auto rel = [&](const HPFloat& v) {
    if (abs(out.expected) <= tiny) return abs(v) <= tiny ? 0.0 : HUGE_VAL;
    return (abs(v - out.expected) / abs(out.expected)).to_double();
  };
  out.rel_error_last = rel(out.scaled.back());
  out.rel_error_extrapolated = rel(out.extrapolated);
  if (!(out.rel_error_last <= 0.01 && out.rel_error_extrapolated <= 0.01))
    fail(ErrorCode::OrderMismatch, rule.name() + " on " + f.name + ": scaled error " + out.scaled.back().to_string(10) +
                                       " (extrapolated " + out.extrapolated.to_string(10) + ") vs expected " +
                                       out.expected.to_string(10));
  return out;
}

// ---------------------------------------------------------------------------
// Romberg

BigRational q_binomial(unsigned n, unsigned m, const BigRational& q) {
  require(m <= n, "q_binomial needs 0 <= m <= n");
  // [i, j] = [i-1, j-1] + q^j [i-1, j]
  std::vector<BigRational> row(m + 1, BigRational(0));
  row[0] = 1;
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = std::min(i, m); j >= 1; --j) row[j] = row[j - 1] + rational_pow(q, j) * row[j];
  return row[m];
}

BigRational romberg_coefficient(unsigned level, unsigned k) {
  if (k <= level) return 0;
  BigRational c = make_rational(1, BigInt(1) << (level * (level + 1))) * q_binomial(k - 1, level, BigRational(1, 4));
  return level % 2 ? BigRational(-c) : c;
}

BigRational romberg_coefficient_product(unsigned level, unsigned k) {
  BigRational c = 1;
  for (unsigned j = 1; j <= level; ++j) {
    const BigRational fj = j >= k ? BigRational(BigInt(1) << (2 * (j - k))) : make_rational(1, BigInt(1) << (2 * (k - j)));
    c *= (fj - 1) / BigRational((BigInt(1) << (2 * j)) - 1);
  }
  return c;
}

RombergCheck romberg_expansion_check(const IntegrandSpec& f, unsigned p, unsigned level, unsigned m, prec_t prec) {
  require(p >= 1, "romberg_expansion_check needs p >= 1");
  require(m >= 2 * level + 2, "romberg_expansion_check needs m >= 2l + 2");
  RombergCheck r;
  r.value = apply_rule(romberg(level), f, p, prec);
  r.expansion = error_expansion(romberg(level), f, m, prec);
  r.first_k = r.expansion.terms.empty() ? 0 : r.expansion.terms.front().power / 2;
  for (unsigned k = 1; k <= level; ++k)
    if (romberg_coefficient(level, k) != 0)
      fail(ErrorCode::IdentityViolation, "Romberg level " + std::to_string(level) + " keeps the k=" + std::to_string(k) + " term");
  if (romberg_coefficient(level, level + 1) == 0)
    fail(ErrorCode::IdentityViolation, "Romberg level " + std::to_string(level) + " loses the k=l+1 term");

  const QuadResult ref = reference_integral(f, prec);
  const HPFloat v = ref.value - r.value - r.expansion.value(p, prec);
  const HPFloat slack = ref.error + default_quad_tol(prec) +
                        HPFloat::pow2(-static_cast<long>(prec) + 16, prec) * (abs(r.value) + HPFloat(1, prec));
  r.residual = Interval(v - slack, v + slack);
  const Interval b = Interval::from_int(16, prec) / Interval::pi(prec) /
                     Interval::from_rational(BigRational(BigInt(1) << (level * (level + 1))), prec) /
                     pow(two_pi(prec) * static_cast<long>(p), m) * Interval(f.sup_deriv(m, prec));
  r.bound = b.hi();
  if (r.residual.mig() > r.bound)
    fail(ErrorCode::BoundViolation, f.name + " Romberg l=" + std::to_string(level) + " p=" + std::to_string(p) +
                                        " m=" + std::to_string(m) + ": residual " + v.to_string(8) + " exceeds " +
                                        r.bound.to_string(8));
  return r;
}

SinglePanelCheck romberg_single_panel_check(const IntegrandSpec& f, unsigned level, prec_t prec) {
  SinglePanelCheck c;
  const QuadResult ref = reference_integral(f, prec);
  const HPFloat v = ref.value - apply_rule(romberg(level), f, 1, prec);
  const HPFloat slack = ref.error + default_quad_tol(prec);
  c.error = Interval(v - slack, v + slack);
  const unsigned e = 2 * level + 2;
  const Interval b = Interval::from_int(10, prec) /
                     Interval::from_rational(BigRational(BigInt(1) << ((level + 2) * (level + 1))), prec) /
                     pow(Interval::pi(prec), e) * Interval(f.sup_deriv(e, prec));
  c.bound = b.hi();
  c.pass = c.error.mig() <= c.bound;
  return c;
}

Interval trapezoid_monotone_remainder(const IntegrandSpec& f, unsigned p, unsigned m, prec_t prec) {
  require(p >= 1 && m >= 1, "trapezoid_monotone_remainder needs p >= 1 and m >= 1");
  if (!f.monotone_flags.count(2 * m - 1))
    fail(ErrorCode::PreconditionViolated, f.name + ": derivative of order " + std::to_string(2 * m - 1) +
                                              " is not flagged as decreasing");
  const QuadResult ref = reference_integral(f, prec);
  const HPFloat T = trapezoid(f, p, prec);
  HPFloat v = ref.value - T;
  HPFloat pk(1, prec);
  for (unsigned k = 1; k < m; ++k) {
    pk *= static_cast<long>(p) * static_cast<long>(p);
    v += rat(bk_over_fact(k), prec) * f.delta(2 * k - 1, prec) / pk;
  }
  if (m % 2 == 0) v = -v;
  const HPFloat slack = ref.error + default_quad_tol(prec) +
                        HPFloat::pow2(-static_cast<long>(prec) + 16, prec) * (abs(T) + HPFloat(1, prec));
  Interval R(v - slack, v + slack);
  const Interval upper = Interval::from_int(6, prec) / pow(two_pi(prec) * static_cast<long>(p), 2 * m) *
                         Interval(-f.delta(2 * m - 1, prec));
  if (R.hi().sign() < 0 || R.lo() > upper.hi())
    fail(ErrorCode::BoundViolation, f.name + " p=" + std::to_string(p) + " m=" + std::to_string(m) + ": R = " +
                                        R.to_string(10) + " outside [0, " + upper.hi().to_string(10) + "]");
  return R;
}

// ---------------------------------------------------------------------------
// Tables

std::vector<ConvergenceRow> convergence_table(const RuleId& rule, const IntegrandSpec& f,
                                              const std::vector<unsigned>& p_list, prec_t prec) {
  const HPFloat I = reference_integral(f, prec).value;
  const unsigned r = rule_order(rule);
  std::vector<ConvergenceRow> rows;
  for (unsigned p : p_list) {
    ConvergenceRow row;
    row.rule = rule.name();
    row.p = p;
    row.value = apply_rule(rule, f, p, prec);
    row.error = I - row.value;
    row.scaled_error = row.error * pow(HPFloat(static_cast<long>(p), prec), r);
    if (!rows.empty() && !row.error.is_zero() && !rows.back().error.is_zero() && p != rows.back().p) {
      const HPFloat num = log_ratio(rows.back().error, row.error);
      const HPFloat den = log(HPFloat(static_cast<long>(p), prec) / HPFloat(static_cast<long>(rows.back().p), prec));
      row.measured_order = (num / den).to_double();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string convergence_csv(const std::vector<ConvergenceRow>& rows, int digits, bool header) {
  std::ostringstream os;
  if (header) os << "rule,p,value,error,scaled_error,measured_order\n";
  for (const auto& r : rows) {
    os << r.rule << ',' << r.p << ',' << r.value.to_string(digits) << ',' << r.error.to_string(digits) << ','
       << r.scaled_error.to_string(digits) << ',';
    if (r.measured_order) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.6f", *r.measured_order);
      os << buf;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace bern
