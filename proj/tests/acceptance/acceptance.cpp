// One line per acceptance criterion: PASS/FAIL, number, summary, wall time.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "bernoulli/analytic_core.hpp"
#include "bernoulli/asymptotic_series.hpp"
#include "bernoulli/errors.hpp"
#include "bernoulli/euler_maclaurin.hpp"
#include "bernoulli/exact_core.hpp"
#include "bernoulli/quadrature.hpp"
#include "bernoulli/trig_sums.hpp"

using namespace bern;

namespace {

int g_failed = 0;

BigRational q(long a, long b = 1) { return make_rational(a, b); }

// `body` returns an empty string on success, otherwise the first failure.
void criterion(int id, const char* summary, double limit_s, const std::function<std::string()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  std::string why;
  try {
    why = body();
  } catch (const Error& e) {
    why = e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (why.empty() && limit_s > 0 && secs > limit_s) why = "runtime " + std::to_string(secs) + " s over the limit";
  if (!why.empty()) ++g_failed;
  std::printf("%s %2d %s (%.2f s)%s%s\n", why.empty() ? "PASS" : "FAIL", id, summary, secs, why.empty() ? "" : ": ",
              why.c_str());
  std::fflush(stdout);
}

std::string n_str(unsigned long n) { return std::to_string(n); }

}  // namespace

int main() {
  criterion(1, "even Bernoulli numbers b_0..b_10", 1, [] {
    const BigRational want[] = {q(1), q(1, 6), q(-1, 30), q(1, 42), q(-1, 30), q(5, 66)};
    for (unsigned n = 0; n < 6; ++n)
      if (bernoulli_number(2 * n) != want[n]) return "b_" + n_str(2 * n) + " = " + to_string(bernoulli_number(2 * n));
    return std::string();
  });

  criterion(2, "Bernoulli polynomials B_0..B_6", 1, [] {
    const std::vector<std::vector<BigRational>> want = {
        {q(1)},
        {q(-1, 2), q(1)},
        {q(1, 6), q(-1), q(1)},
        {q(0), q(1, 2), q(-3, 2), q(1)},
        {q(-1, 30), q(0), q(1), q(-2), q(1)},
        {q(0), q(-1, 6), q(0), q(5, 3), q(-5, 2), q(1)},
        {q(1, 42), q(0), q(-1, 2), q(0), q(5, 2), q(-3), q(1)},
    };
    for (unsigned n = 0; n < want.size(); ++n)
      if (!(bernoulli_polynomial(n) == RatPolynomial(want[n]))) return "B_" + n_str(n);
    return std::string();
  });

  criterion(3, "identity battery for n <= 30", 30, [] {
    if (!(bernoulli_polynomial(0) == RatPolynomial({q(1)}))) return std::string("B_0 != 1");
    const BigRational ys[] = {q(1, 3), q(-2), q(5, 7)};
    for (unsigned n = 1; n <= 30; ++n) {
      const std::string at = " at n=" + n_str(n);
      if (!forward_difference_check(n)) return "forward difference" + at;
      if (!integral_zero_check(n)) return "zero mean" + at;
      if (!reflection_check(n)) return "reflection" + at;
      if (!derivative_check(n)) return "derivative" + at;
      for (unsigned p = 1; p <= 5; ++p)
        if (!raabe_check(n, p)) return "Raabe p=" + n_str(p) + at;
      for (const auto& y : ys)
        if (!(addition_formula(n, y) == bernoulli_polynomial(n).shift(y))) return "addition" + at;
      const auto c = monomial_in_bernoulli_basis(n);
      RatPolynomial sum;
      for (unsigned k = 0; k < c.size(); ++k) sum += bernoulli_polynomial(k) * c[k];
      if (!(sum == RatPolynomial::monomial(n))) return "monomial basis" + at;
      if (!convolution_identity_check(n)) return "convolution" + at;
      if (!multiplication_formula_check(n, q(3), q(1, 2)) || !multiplication_formula_check(n, q(2), q(-1, 3)))
        return "multiplication formula" + at;
    }
    return std::string();
  });

  criterion(4, "alternative formulas reproduce b_m for m <= 20", 0, [] {
    for (unsigned m = 1; m <= 20; ++m) {
      const BigRational& b = bernoulli_number(m);
      if (gould_formula(m) != b) return "double-sum formula at m=" + n_str(m);
      if (binomial_sum_formula(m) != b) return "binomial-sum formula at m=" + n_str(m);
      if (doubling_recurrence(m) != b) return "doubling recurrence at m=" + n_str(m);
      if (m >= 4 && m % 2 == 0 && !quadratic_recurrence_check(m / 2)) return "quadratic recurrence at m=" + n_str(m);
    }
    return std::string();
  });

  criterion(5, "von Staudt-Clausen for n <= 30 and m(m^k - 1) b_k integrality", 0, [] {
    for (unsigned n = 1; n <= 30; ++n) {
      const auto v = von_staudt_clausen(n);
      BigInt prod = 1;
      for (auto p : v.primes) prod *= p;
      if (bernoulli_number(2 * n).get_den() != prod) return "denominator at n=" + n_str(n);
    }
    if (von_staudt_clausen(1).integer_part != 1 || von_staudt_clausen(2).integer_part != 1)
      return std::string("integer part of n = 1, 2");
    for (unsigned long m = 1; m <= 10; ++m)
      for (unsigned k = 1; k <= 20; ++k)
        if (!power_integrality(m, k)) return "m=" + n_str(m) + " k=" + n_str(k);
    return std::string();
  });

  criterion(6, "gamma bound table, 10 decimals", 5, [] {
    const std::vector<std::pair<const char*, const char*>> want = {
        {"0.5750000000", "0.5833333333"}, {"0.5771653194", "0.5776861528"}, {"0.5772147535", "0.5772473055"},
        {"0.5772156500", "0.5772176845"}, {"0.5772156647", "0.5772157918"}, {"0.5772156649", "0.5772156728"},
        {"0.5772156649", "0.5772156654"}, {"0.5772156649", "0.5772156649"}};
    const auto rows = gamma_bounds_table({1, 2, 4, 8, 16, 32, 64, 128});
    for (size_t i = 0; i < rows.size(); ++i)
      if (rows[i].lower_text != want[i].first || rows[i].upper_text != want[i].second)
        return "n=" + n_str(rows[i].n) + ": " + rows[i].lower_text + " " + rows[i].upper_text;
    return std::string();
  });

  criterion(7, "euler_gamma(100) agrees with 0.57721566490153286060651209", 0, [] {
    const Interval g = euler_gamma(100);
    const std::string d = "0.57721566490153286060651209";
    if (g.lo().to_fixed(26, MPFR_RNDZ) != d || g.hi().to_fixed(26, MPFR_RNDZ) != d) return "enclosure " + g.to_string(30);
    return std::string();
  });

  criterion(8, "order limits for e^t at p = 256", 60, [] {
    const prec_t prec = 256;
    const HPFloat e1 = exp(HPFloat(1, prec)) - HPFloat(1, prec);
    const std::vector<std::pair<RuleId, HPFloat>> cases = {
        {RuleId{RuleKind::Midpoint}, e1 / 24},
        {RuleId{RuleKind::Trapezoid}, -(e1 / 12)},
        {RuleId{RuleKind::Simpson}, -(e1 / 2880)},
        {RuleId{RuleKind::Gauss2}, e1 / 4320},
    };
    for (const auto& [rule, closed] : cases) {
      const OrderLimit o = order_limit_check(rule, exp_integrand(), {64, 128, 256}, prec);
      for (const HPFloat& v : {o.extrapolated, o.scaled.back()}) {
        const double rel = (abs(v - closed) / abs(closed)).to_double();
        if (!(rel < 0.01)) return rule.name() + ": relative deviation " + std::to_string(rel);
      }
    }
    return std::string();
  });

  criterion(9, "Romberg recurrence and error bounds", 0, [] {
    const prec_t prec = 256;
    const auto corpus = builtin_corpus();
    for (const auto& f : corpus)
      for (unsigned l = 1; l <= 4; ++l) {
        const RuleId prev = l == 1 ? RuleId{RuleKind::Trapezoid} : romberg(l - 1);
        const long g = 1L << (2 * l);
        const HPFloat rhs = (apply_rule(prev, f, 2, prec) * g - apply_rule(prev, f, 1, prec)) / (g - 1);
        const HPFloat d = abs(apply_rule(romberg(l), f, 1, prec) - rhs);
        if (d > HPFloat::pow2(-prec + 16, prec)) return "recurrence " + f.name + " l=" + n_str(l);
      }
    for (const auto& f : corpus)
      for (unsigned l = 1; l <= 3; ++l) {
        for (unsigned p : {1u, 2u, 4u}) romberg_expansion_check(f, p, l, 2 * l + 2, prec);
        if (!romberg_single_panel_check(f, l, prec).pass) return "single panel " + f.name + " l=" + n_str(l);
      }
    return std::string();
  });

  criterion(10, "Euler-Maclaurin two-path agreement and remainder bound, >= 500 tuples", 300, [] {
    const prec_t prec = 256;
    const HPFloat tol = default_quad_tol(prec);
    unsigned count = 0;
    for (const auto& f : builtin_corpus())
      for (unsigned p : {2u, 4u, 8u, 16u})
        for (unsigned m = 1; m <= 6; ++m)
          for (const BigRational& x : {q(0), q(1, 4), q(1, 2), q(1)}) {
            em_identity_check(f, p, m, HPFloat::from_rational(x, prec), tol);
            ++count;
          }
    return count >= 500 ? std::string() : "only " + n_str(count) + " tuples";
  });

  criterion(11, "harmonic expansion sandwich, n <= 50, m <= 6", 0, [] {
    for (unsigned long n = 1; n <= 50; ++n)
      for (unsigned m = 1; m <= 6; ++m)
        if (!harmonic_expansion(n, m).pass) return "n=" + n_str(n) + " m=" + n_str(m);
    return std::string();
  });

  criterion(12, "C_p and D_p expansion sandwiches and the E_p identity", 0, [] {
    for (unsigned p = 2; p <= 16; ++p)
      for (unsigned m = 1; m <= 3; ++m) {
        if (!series_C_sandwich(p, m).pass) return "C p=" + n_str(p) + " m=" + n_str(m);
        if (!series_D_sandwich(p, m).pass) return "D p=" + n_str(p) + " m=" + n_str(m);
      }
    for (unsigned p = 1; p <= 8; ++p)
      if (!series_E_identity(p).pass) return "E identity p=" + n_str(p);
    return std::string();
  });

  criterion(13, "K, Ktilde, L, M identities within 8 ulps for p <= 512", 0, [] {
    for (unsigned p = 2; p <= 512; ++p) identity_suite(p, 256);
    return std::string();
  });

  criterion(14, "two-sided bound on I_p for p = 2..10^4 at 128 bits", 600, [] {
    for (const auto& r : bracket_sweep(TrigKind::I, 2, 10000, 0, 128))
      if (!r.pass) return "p=" + n_str(r.p);
    return std::string();
  });

  criterion(15, "two-sided bound on J_p for p = 1..1000", 0, [] {
    for (const auto& r : bracket_sweep(TrigKind::J, 1, 1000, 0, 128))
      if (!r.pass) return "p=" + n_str(r.p);
    return std::string();
  });

  criterion(16, "zeros alpha_n of B_2n: bounds, monotonicity, alpha_1 to 40 digits", 0, [] {
    const HPFloat tol = HPFloat::pow2(-140, 256);
    std::vector<AlphaZero> z;
    for (unsigned n = 1; n <= 21; ++n) z.push_back(find_alpha(n, tol));
    for (unsigned i = 0; i < 20; ++i) {
      if (!z[i].bounds_ok) return "bounds n=" + n_str(i + 1);
      if (!alpha_less(z[i], z[i + 1])) return "alpha_" + n_str(i + 1) + " < alpha_" + n_str(i + 2);
    }
    const Interval exact = Interval::from_rational(q(1, 2), 256) -
                           Interval::from_int(1, 256) / (sqrt(Interval::from_int(3, 256)) * 2);
    const Interval a1 = z[0].bracket;
    if (!a1.overlaps(exact)) return std::string("alpha_1 misses 1/2 - 1/(2 sqrt 3)");
    if (a1.lo().to_fixed(40, MPFR_RNDN) != exact.mid().to_fixed(40, MPFR_RNDN) ||
        a1.hi().to_fixed(40, MPFR_RNDN) != exact.mid().to_fixed(40, MPFR_RNDN))
      return "alpha_1 = " + a1.to_string(45);
    return std::string();
  });

  criterion(17, "Dilcher bound for n <= 24 and normalized convergence for n <= 10", 0, [] {
    const auto h = [](const char* v) { return HPFloat::from_string(v, 256); };
    const std::vector<Complex> zs = {{h("0"), h("0")}, {h("0.3"), h("0")}, {h("-0.3"), h("0")},
                                     {h("0.5"), h("0.2")}, {h("-0.5"), h("0.2")}};
    for (unsigned n = 2; n <= 24; ++n)
      for (const auto& z : zs)
        if (!dilcher_check(n, z).pass) return "n=" + n_str(n) + " z=" + z.re.to_string(2) + "+" + z.im.to_string(2) + "i";
    for (unsigned n = 1; n <= 10; ++n)
      if (!static_cast<bool>(normalized_convergence_check(n, 1000, 256))) return "convergence n=" + n_str(n);
    return std::string();
  });

  std::printf("%d criteria failed\n", g_failed);
  return g_failed ? 1 : 0;
}
