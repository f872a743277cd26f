#include "bernoulli/trig_sums.hpp"

#include <sstream>

#include "bernoulli/asymptotic_series.hpp"
#include "bernoulli/errors.hpp"

namespace bern {

namespace {

prec_t work(prec_t prec) { return prec + 64; }

Interval iv(const BigRational& q, prec_t prec) { return Interval::from_rational(q, prec); }

Interval num(long v, prec_t prec) { return Interval::from_int(v, prec); }

// k pi / q
Interval angle(const Interval& pi, unsigned long k, unsigned long q) {
  return pi * static_cast<long>(k) / static_cast<long>(q);
}

// 1/sin(x) for x inside (0, pi)
Interval csc(const Interval& x) {
  const Interval s = sin(x);
  if (!s.positive()) fail(ErrorCode::InvalidArgument, "csc argument outside (0, pi)");
  HPFloat lo(x.prec()), hi(x.prec());
  mpfr_ui_div(lo.raw(), 1, s.hi().raw(), MPFR_RNDD);
  mpfr_ui_div(hi.raw(), 1, s.lo().raw(), MPFR_RNDU);
  return Interval(lo, hi);
}

Interval cot(const Interval& x) { return cos(x) / sin(x); }

Interval tan(const Interval& x) { return sin(x) / cos(x); }

Interval sum_I(unsigned p, prec_t w) {
  const Interval pi = Interval::pi(w);
  Interval s(w);
  for (unsigned k = 1; 2 * k < p; ++k) s += csc(angle(pi, k, p));
  s *= 2;
  if (p % 2 == 0 && p >= 2) s += num(1, w);
  return s;
}

// k cot(k pi/p) + (p-k) cot((p-k) pi/p) = (2k - p) cot(k pi/p)
Interval sum_J(unsigned p, prec_t w) {
  const Interval pi = Interval::pi(w);
  Interval s(w);
  for (unsigned k = 1; 2 * k < p; ++k) s += cot(angle(pi, k, p)) * (2L * k - p);
  return s;
}

Interval sum_direct(TrigKind kind, unsigned p, prec_t w) {
  const Interval pi = Interval::pi(w);
  Interval s(w);
  switch (kind) {
    case TrigKind::K:
      for (unsigned k = 1; k < p; ++k) s += tan(angle(pi, k, 2UL * p));
      break;
    case TrigKind::Ktilde:
      for (unsigned k = 1; k < p; ++k) s += cot(angle(pi, k, 2UL * p));
      break;
    case TrigKind::L:
      for (unsigned k = 1; k < p; ++k) s += csc(angle(pi, k, p)) * static_cast<long>(k);
      break;
    case TrigKind::M:
      for (unsigned k = 0; k < p; ++k) s += cot(angle(pi, 2UL * k + 1, 2UL * p)) * (2L * k + 1);
      break;
    default:
      fail(ErrorCode::InvalidArgument, "not a direct sum");
  }
  return s;
}

Interval trig_value(TrigKind kind, unsigned p, prec_t w) {
  if (kind == TrigKind::I) return sum_I(p, w);
  if (kind == TrigKind::J) return sum_J(p, w);
  return sum_direct(kind, p, w);
}

bool ulp_close(const Interval& a, const Interval& b, prec_t prec) {
  if (!a.overlaps(b)) return false;
  HPFloat ma(prec), mb(prec);
  mpfr_set(ma.raw(), a.mid().raw(), MPFR_RNDN);
  mpfr_set(mb.raw(), b.mid().raw(), MPFR_RNDN);
  const HPFloat scale = max(abs(ma), abs(mb));
  return abs(ma - mb) <= ulp(scale) * 8;
}

Interval log_half_pi(prec_t w) { return log(Interval::pi(w) / 2); }

// (2p/pi)(ln p + gamma - ln(pi/2))
Interval I_main(unsigned p, prec_t w) {
  const Interval pi = Interval::pi(w);
  return num(2L * p, w) / pi * (log(num(p, w)) + euler_gamma(w) - log_half_pi(w));
}

// (1/pi)(-p^2 ln p + (ln 2pi - gamma) p^2 - p)
Interval J_main(unsigned p, prec_t w) {
  const Interval pi = Interval::pi(w);
  const Interval P = num(p, w);
  const Interval p2 = P * P;
  return (-(p2 * log(P)) + (log(pi * 2) - euler_gamma(w)) * p2 - P) / pi;
}

Interval smaller(const Interval& a, const Interval& b) { return a.lo() < b.lo() ? a : b; }

WitnessCheck witness_check(const std::function<Interval(prec_t)>& witness,
                           const std::function<Interval(prec_t)>& bound, prec_t prec, const std::string& what) {
  WitnessCheck c;
  const StrictCheck s = certify_positive(
      [&](prec_t w) {
        c.witness = witness(w);
        c.bound = bound(w);
        return smaller(c.witness, c.bound - c.witness);
      },
      prec);
  c.pass = s.pass;
  if (!c.pass) fail(ErrorCode::SandwichViolation, what + ": witness " + c.witness.to_string(12) + " outside (0, " + c.bound.hi().to_string(12) + ")");
  return c;
}

}  // namespace

std::string trig_name(TrigKind kind) {
  switch (kind) {
    case TrigKind::I: return "I";
    case TrigKind::J: return "J";
    case TrigKind::K: return "K";
    case TrigKind::Ktilde: return "Ktilde";
    case TrigKind::L: return "L";
    case TrigKind::M: return "M";
  }
  return "?";
}

TrigKind parse_trig_kind(const std::string& text) {
  for (TrigKind k : {TrigKind::I, TrigKind::J, TrigKind::K, TrigKind::Ktilde, TrigKind::L, TrigKind::M})
    if (text == trig_name(k)) return k;
  fail(ErrorCode::InvalidArgument, "unknown trigonometric sum '" + text + "'");
}

TrigSumValue trig_sum(TrigKind kind, unsigned p, prec_t prec) {
  require(p >= 1, "trig_sum needs p >= 1");
  return {kind, p, trig_value(kind, p, work(prec))};
}

Interval csc_sum_unpaired(unsigned p, prec_t prec) {
  const prec_t w = work(prec);
  const Interval pi = Interval::pi(w);
  Interval s(w);
  for (unsigned k = 1; k < p; ++k) s += csc(angle(pi, k, p));
  return s;
}

bool identity_suite(unsigned p, prec_t prec) {
  require(p >= 2, "identity_suite needs p >= 2");
  const prec_t w = work(prec);
  const Interval I = sum_I(p, w);
  const Interval J = sum_J(p, w);
  const auto check = [&](const char* name, const Interval& a, const Interval& b) {
    if (!ulp_close(a, b, prec))
      fail(ErrorCode::IdentityViolation, std::string(name) + " at p=" + std::to_string(p) + ": " + a.to_string(20) +
                                             " vs " + b.to_string(20));
  };
  check("K = I", sum_direct(TrigKind::K, p, w), I);
  check("Ktilde = I", sum_direct(TrigKind::Ktilde, p, w), I);
  check("L = (p/2) I", sum_direct(TrigKind::L, p, w), I * static_cast<long>(p) / 2);
  const Interval M = sum_direct(TrigKind::M, p, w);
  check("M = J_2p - 2 J_p", M, sum_J(2 * p, w) - J * 2);
  check("M = -p I", M, I * -static_cast<long>(p));
  return true;
}

WitnessCheck I_expansion_check(unsigned p, unsigned m, prec_t prec) {
  require(p >= 2 && m >= 1, "I_expansion_check needs p >= 2 and m >= 1");
  const auto witness = [&](prec_t w0) {
    const prec_t w = work(w0);
    const Interval pi = Interval::pi(w);
    const Interval pi2 = pi * pi;
    const Interval P = num(p, w);
    Interval x = pi * sum_I(p, w) - P * 2 * log(P) - (euler_gamma(w) - log_half_pi(w)) * P * 2;
    for (unsigned k = 1; k < m; ++k)
      x += pow(pi2, k) * (bernoulli_number(2 * k) * eta_even_exact(k) * 2 / (BigRational(k) * rational_pow(p, 2 * k - 1)));
    // eps' = (-1)^m x m p^{2m-1} / (2 eta(2m))
    Interval e = x * (BigRational(m) * rational_pow(p, 2 * m - 1) / (eta_even_exact(m) * 2)) / pow(pi2, m);
    return (m % 2) ? -e : e;
  };
  const BigRational b = abs(bernoulli_number(2 * m));
  return witness_check(witness, [&](prec_t w) { return iv(b, work(w)); }, prec,
                       "I expansion p=" + std::to_string(p) + " m=" + std::to_string(m));
}

WitnessCheck J_expansion_check(unsigned p, unsigned m, prec_t prec) {
  require(p >= 2 && m >= 1, "J_expansion_check needs p >= 2 and m >= 1");
  const auto witness = [&](prec_t w0) {
    const prec_t w = work(w0);
    const Interval pi = Interval::pi(w);
    const Interval pi2 = pi * pi;
    Interval x = pi * sum_J(p, w) - pi * J_main(p, w);
    for (unsigned k = 1; k < m; ++k)
      x += pow(pi2, k) * (bernoulli_number(2 * k) * zeta_even_exact(k) / (BigRational(k) * rational_pow(p, 2 * k - 2)));
    // eps = (-1)^m x m p^{2m-2} / zeta(2m)
    Interval e = x * (BigRational(m) * rational_pow(p, 2 * m - 2) / zeta_even_exact(m)) / pow(pi2, m);
    return (m % 2) ? -e : e;
  };
  const BigRational b = abs(bernoulli_number(2 * m));
  return witness_check(witness, [&](prec_t w) { return iv(b, work(w)); }, prec,
                       "J expansion p=" + std::to_string(p) + " m=" + std::to_string(m));
}

WitnessCheck J_harmonic_expansion_check(unsigned p, unsigned m, prec_t prec) {
  require(p >= 2 && m >= 1, "J_harmonic_expansion_check needs p >= 2 and m >= 1");
  const auto zeta = [](unsigned k, prec_t w) { return pow(Interval::pi(w), 2 * k) * zeta_even_exact(k); };
  const auto witness = [&](prec_t w0) {
    const prec_t w = work(w0);
    const Interval pi = Interval::pi(w);
    const BigRational p2(static_cast<unsigned long>(p) * p);
    Interval x = sum_J(p, w) + iv(p2 * harmonic(p), w) / pi - log(pi * 2) * iv(p2, w) / pi +
                 num(p, w) / (pi * 2);
    for (unsigned k = 1; k < m; ++k)
      x += (zeta(k, w) * 2 + num(1, w)) * (bernoulli_number(2 * k) / (BigRational(2 * k) * rational_pow(p, 2 * k - 2))) / pi;
    // theta = (-1)^m p^{2m-2} x
    Interval t = x * rational_pow(p, 2 * m - 2);
    return (m % 2) ? -t : t;
  };
  const auto bound = [&](prec_t w0) {
    const prec_t w = work(w0);
    return (zeta(m, w) * 2 + num(1, w)) * (abs(bernoulli_number(2 * m)) / BigRational(2 * m)) / Interval::pi(w);
  };
  return witness_check(witness, bound, prec, "J/H_p expansion p=" + std::to_string(p) + " m=" + std::to_string(m));
}

namespace {

// sum_{k=1}^{j} (-1)^k c_k x^{e(k)} with exact c_k
template <class Coef>
Interval alternating_sum(unsigned j, const Interval& x, Coef coef, int offset) {
  Interval s(x.prec());
  for (unsigned k = 1; k <= j; ++k) {
    Interval t = pow(x, 2 * k + offset) * coef(k);
    s = (k % 2) ? s - t : s + t;
  }
  return s;
}

BracketCheck bracket(TrigKind kind, unsigned p, unsigned n, prec_t prec) {
  BracketCheck b;
  b.p = p;
  const auto margin = [&](prec_t w0) {
    const prec_t w = work(w0);
    const Interval pi = Interval::pi(w);
    Interval base(w), lo_sum(w), hi_sum(w);
    if (kind == TrigKind::I) {
      b.value = sum_I(p, w);
      base = I_main(p, w);
      // (2^{2k}-2) b_{2k}^2 / (k (2k)!) (pi/p)^{2k-1}
      const auto c = [](unsigned k) -> BigRational {
        const BigRational bk = bernoulli_number(2 * k);
        return BigRational((BigInt(1) << (2 * k)) - 2) * bk * bk / (BigRational(k) * BigRational(factorial(2 * k)));
      };
      const Interval x = pi / num(p, w);
      hi_sum = alternating_sum(2 * n, x, c, -1);
      lo_sum = alternating_sum(2 * n + 1, x, c, -1);
    } else {
      b.value = sum_J(p, w);
      base = J_main(p, w);
      // 2 pi b_{2k}^2 / (k (2k)!) (2pi/p)^{2k-2}
      const auto c = [](unsigned k) -> BigRational {
        const BigRational bk = bernoulli_number(2 * k);
        return bk * bk / (BigRational(k) * BigRational(factorial(2 * k)));
      };
      const Interval x = pi * 2 / num(p, w);
      hi_sum = alternating_sum(2 * n, x, c, -2) * pi * 2;
      lo_sum = alternating_sum(2 * n + 1, x, c, -2) * pi * 2;
    }
    b.upper = base + hi_sum;
    b.lower = base + lo_sum;
    b.margin = smaller(b.value - b.lower, b.upper - b.value);
    return b.margin;
  };
  b.pass = certify_positive(margin, prec).pass;
  return b;
}

}  // namespace

BracketCheck I_bracket(unsigned p, unsigned n, prec_t prec) {
  require(p >= 1, "I_bracket needs p >= 1");
  return bracket(TrigKind::I, p, n, prec);
}

BracketCheck J_bracket(unsigned p, unsigned n, prec_t prec) {
  require(p >= 1, "J_bracket needs p >= 1");
  return bracket(TrigKind::J, p, n, prec);
}

SeriesTrigReport series_trig_identities(unsigned p, prec_t prec) {
  require(p >= 1, "series_trig_identities needs p >= 1");
  const prec_t w = work(prec);
  const HPFloat tol = HPFloat::pow2(-static_cast<long>(prec) / 2, prec);
  const Interval C = series_C(p, tol, prec).value;
  const Interval D = series_D(p, tol, prec).value;
  const Interval E = series_E(p, tol, prec).value;
  const Interval I = sum_I(p, w);
  const Interval J = sum_J(p, w);
  const Interval pi = Interval::pi(w);
  const Interval ln2 = Interval::ln2(w);
  const Interval g = euler_gamma(w);
  const Interval P = num(p, w);
  const Interval lnp = log(P);

  SeriesTrigReport r;
  r.residuals.emplace_back("D = (ln(pi/2) - gamma - ln p)/2 + ln2/(2p) + pi I/(4p)",
                           D - ((log_half_pi(w) - g - lnp) / 2 + ln2 / (P * 2) + pi * I / (P * 4)));
  r.residuals.emplace_back("E = ln2/p + pi I/(2p)", E - (ln2 / P + pi * I / (P * 2)));
  r.residuals.emplace_back("C = (ln p + gamma - ln 2pi)/2 + 1/(2p) + pi J/(2p^2)",
                           C - ((lnp + g - log(pi * 2)) / 2 + num(1, w) / (P * 2) + pi * J / (P * P * 2)));
  r.residuals.emplace_back("I = -2 ln2/pi + (2p/pi) E", I - (-(ln2 * 2) / pi + P * 2 / pi * E));
  r.residuals.emplace_back("pi J = -p^2 ln p + (ln 2pi - gamma) p^2 - p + 2 p^2 C",
                           pi * J - (pi * J_main(p, w) + P * P * C * 2));
  r.pass = true;
  for (const auto& [name, res] : r.residuals)
    if (!res.contains_zero()) {
      r.pass = false;
      fail(ErrorCode::IdentityViolation, name + " at p=" + std::to_string(p) + ": residual " + res.to_string(10));
    }
  return r;
}

std::vector<BracketCheck> bracket_sweep(TrigKind kind, unsigned first, unsigned max_p, unsigned n, prec_t prec) {
  require(kind == TrigKind::I || kind == TrigKind::J, "bracket sweeps exist for I and J only");
  std::vector<BracketCheck> rows;
  for (unsigned p = first; p <= max_p; ++p) rows.push_back(kind == TrigKind::I ? I_bracket(p, n, prec) : J_bracket(p, n, prec));
  return rows;
}

std::string bracket_csv(const std::vector<BracketCheck>& rows, int digits, bool header) {
  std::ostringstream os;
  if (header) os << "p,value,lower,upper,margin\n";
  for (const auto& r : rows)
    os << r.p << ',' << r.value.mid().to_string(digits) << ',' << r.lower.mid().to_string(digits) << ','
       << r.upper.mid().to_string(digits) << ',' << r.margin.lo().to_string(digits) << '\n';
  return os.str();
}

}  // namespace bern
