#include "bernoulli/euler_maclaurin.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <random>
#include <sstream>

#include "bernoulli/errors.hpp"

namespace bern {

namespace {

HPFloat rounded_up(const Interval& v) { return v.hi(); }

Interval two_pi(prec_t prec) { return Interval::pi(prec) * 2; }

HPFloat rat(const BigRational& q, prec_t prec) { return HPFloat::from_rational(q, prec); }

}  // namespace

// ---------------------------------------------------------------------------
// Corpus

IntegrandSpec exp_integrand() {
  IntegrandSpec f;
  f.name = "exp";
  f.deriv = [](unsigned, const HPFloat& x) { return exp(x); };
  f.delta = [](unsigned, prec_t prec) { return exp(HPFloat(1, prec)) - HPFloat(1, prec); };
  f.sup_deriv = [](unsigned, prec_t prec) { return rounded_up(exp(Interval::from_int(1, prec))); };
  return f;
}

IntegrandSpec reciprocal1p_integrand() {
  IntegrandSpec f;
  f.name = "reciprocal1p";
  f.deriv = [](unsigned k, const HPFloat& x) {
    const prec_t prec = x.prec();
    HPFloat c = HPFloat::from_rational(BigRational(factorial(k)), prec);
    if (k % 2) c = -c;
    return c / pow(HPFloat(1, prec) + x, k + 1);
  };
  f.delta = [](unsigned k, prec_t prec) {
    BigRational d = BigRational(factorial(k)) * (make_rational(1, BigInt(1) << (k + 1)) - 1);
    return rat(k % 2 ? BigRational(-d) : d, prec);
  };
  f.sup_deriv = [](unsigned m, prec_t prec) { return HPFloat::from_rational(BigRational(factorial(m)), prec, MPFR_RNDU); };
  for (unsigned k = 0; k <= f.max_order; k += 2) f.monotone_flags.insert(k);
  return f;
}

IntegrandSpec cos2pi_integrand() {
  IntegrandSpec f;
  f.name = "cos2pi";
  f.deriv = [](unsigned k, const HPFloat& x) {
    const prec_t prec = x.prec();
    const HPFloat tp = HPFloat::pi(prec) * 2;
    const HPFloat arg = tp * x;
    HPFloat v(prec);
    switch (k % 4) {
      case 0: v = cos(arg); break;
      case 1: v = -sin(arg); break;
      case 2: v = -cos(arg); break;
      default: v = sin(arg); break;
    }
    return v * pow(tp, k);
  };
  f.delta = [](unsigned, prec_t prec) { return HPFloat(prec); };
  f.sup_deriv = [](unsigned m, prec_t prec) { return rounded_up(pow(two_pi(prec), m)); };
  return f;
}

IntegrandSpec log1p_integrand() {
  IntegrandSpec f;
  f.name = "log1p";
  f.deriv = [](unsigned k, const HPFloat& x) {
    const prec_t prec = x.prec();
    const HPFloat y = HPFloat(1, prec) + x;
    if (k == 0) return log(y);
    HPFloat c = HPFloat::from_rational(BigRational(factorial(k - 1)), prec);
    if (k % 2 == 0) c = -c;
    return c / pow(y, k);
  };
  f.delta = [](unsigned k, prec_t prec) {
    if (k == 0) return Interval::ln2(prec).mid();
    BigRational d = BigRational(factorial(k - 1)) * (make_rational(1, BigInt(1) << k) - 1);
    return rat(k % 2 ? d : BigRational(-d), prec);
  };
  f.sup_deriv = [](unsigned m, prec_t prec) {
    if (m == 0) return Interval::ln2(prec).hi();
    return HPFloat::from_rational(BigRational(factorial(m - 1)), prec, MPFR_RNDU);
  };
  for (unsigned k = 1; k <= f.max_order; k += 2) f.monotone_flags.insert(k);
  return f;
}

IntegrandSpec polynomial_integrand(const RatPolynomial& poly, const std::string& name) {
  IntegrandSpec f;
  if (name.empty()) {
    std::ostringstream os;
    os << "poly:";
    for (size_t k = 0; k < poly.coeffs().size(); ++k) os << (k ? "," : "") << to_string(poly.coeffs()[k]);
    if (poly.is_zero()) os << "0";
    f.name = os.str();
  } else {
    f.name = name;
  }
  std::vector<RatPolynomial> d{poly};
  for (unsigned k = 1; k <= f.max_order + 1; ++k) d.push_back(d.back().derivative());
  f.deriv = [d](unsigned k, const HPFloat& x) {
    HPFloat acc(x.prec());
    if (k >= d.size()) return acc;
    const auto& c = d[k].coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + HPFloat::from_rational(*it, x.prec());
    return acc;
  };
  f.delta = [d](unsigned k, prec_t prec) {
    if (k >= d.size()) return HPFloat(prec);
    return HPFloat::from_rational(d[k](1) - d[k](0), prec);
  };
  f.sup_deriv = [d](unsigned m, prec_t prec) {
    BigRational s = 0;
    if (m < d.size())
      for (const auto& c : d[m].coeffs()) s += abs(c);
    return HPFloat::from_rational(s, prec, MPFR_RNDU);
  };
  for (unsigned k = 0; k <= f.max_order; ++k) {
    bool nonpos = true;
    for (const auto& c : d[k + 1].coeffs()) nonpos = nonpos && c <= 0;
    if (nonpos) f.monotone_flags.insert(k);
  }
  return f;
}

IntegrandSpec make_integrand(const std::string& name) {
  if (name == "exp") return exp_integrand();
  if (name == "reciprocal1p") return reciprocal1p_integrand();
  if (name == "cos2pi") return cos2pi_integrand();
  if (name == "log1p") return log1p_integrand();
  if (name.rfind("poly:", 0) == 0) {
    std::vector<BigRational> c;
    std::stringstream ss(name.substr(5));
    std::string item;
    while (std::getline(ss, item, ',')) c.push_back(parse_rational(item));
    if (c.empty()) fail(ErrorCode::InvalidArgument, "empty polynomial '" + name + "'");
    return polynomial_integrand(RatPolynomial(std::move(c)), name);
  }
  fail(ErrorCode::InvalidArgument, "unknown integrand '" + name + "'");
}

std::vector<IntegrandSpec> builtin_corpus() {
  std::vector<IntegrandSpec> c{exp_integrand(), reciprocal1p_integrand(), cos2pi_integrand()};
  for (unsigned j = 0; j <= 6; ++j) c.push_back(polynomial_integrand(RatPolynomial::monomial(j)));
  c.push_back(log1p_integrand());
  return c;
}

// ---------------------------------------------------------------------------
// Gauss-Legendre

namespace {

struct GLRule {
  std::vector<HPFloat> nodes, weights;  // on [-1, 1]
};

const GLRule& gl_rule(unsigned n, prec_t prec) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, prec_t>, GLRule> cache;
  std::lock_guard lock(mu);
  auto it = cache.find({n, prec});
  if (it != cache.end()) return it->second;

  const prec_t wp = prec + 32;
  GLRule rule;
  const HPFloat one(1, wp);
  for (unsigned i = 1; i <= n; ++i) {
    HPFloat x = HPFloat::from_double(std::cos(M_PI * (i - 0.25) / (n + 0.5)), wp);
    HPFloat dp(wp);
    for (int iter = 0;; ++iter) {
      HPFloat p0(1, wp), p1 = x;
      for (unsigned j = 1; j < n; ++j) {
        HPFloat p2 = (x * p1 * static_cast<long>(2 * j + 1) - p0 * static_cast<long>(j)) / static_cast<long>(j + 1);
        p0 = std::move(p1);
        p1 = std::move(p2);
      }
      dp = (x * p1 - p0) * static_cast<long>(n) / (x * x - one);
      const HPFloat step = p1 / dp;
      x -= step;
      if (step.is_zero() || mpfr_get_exp(step.raw()) < -static_cast<long>(wp) || iter > 64) break;
    }
    rule.nodes.push_back(x);
    rule.weights.push_back(HPFloat(2, wp) / ((one - x * x) * dp * dp));
  }
  for (auto& v : rule.nodes) mpfr_prec_round(v.raw(), prec, MPFR_RNDN);
  for (auto& v : rule.weights) mpfr_prec_round(v.raw(), prec, MPFR_RNDN);
  return cache.emplace(std::make_pair(n, prec), std::move(rule)).first->second;
}

}  // namespace

HPFloat gauss_legendre(const std::function<HPFloat(const HPFloat&)>& g, const HPFloat& a, const HPFloat& b,
                       unsigned points) {
  const prec_t prec = std::max(a.prec(), b.prec());
  const GLRule& rule = gl_rule(points, prec);
  const HPFloat c = (a + b) / 2;
  const HPFloat h = (b - a) / 2;
  HPFloat s(prec);
  for (unsigned i = 0; i < points; ++i) s += rule.weights[i] * g(c + h * rule.nodes[i]);
  return s * h;
}

QuadResult integrate(const std::function<HPFloat(const HPFloat&)>& g, const HPFloat& a, const HPFloat& b,
                     const HPFloat& tol) {
  const prec_t prec = std::max(a.prec(), b.prec());
  const HPFloat total_width = b - a;
  QuadResult out{HPFloat(prec), HPFloat(prec)};
  struct Panel {
    HPFloat a, b, q;
    int depth;
  };
  std::vector<Panel> stack;
  stack.push_back({a, b, gauss_legendre(g, a, b, 15), 0});
  while (!stack.empty()) {
    Panel pnl = std::move(stack.back());
    stack.pop_back();
    const HPFloat m = (pnl.a + pnl.b) / 2;
    HPFloat left = gauss_legendre(g, pnl.a, m, 15);
    HPFloat right = gauss_legendre(g, m, pnl.b, 15);
    const HPFloat refined = left + right;
    const HPFloat err = abs(refined - pnl.q);
    if (err <= tol * ((pnl.b - pnl.a) / total_width) || pnl.depth >= 48) {
      out.value += refined;
      out.error += err;
      continue;
    }
    // right first so the left half is summed first
    stack.push_back({m, pnl.b, std::move(right), pnl.depth + 1});
    stack.push_back({pnl.a, m, std::move(left), pnl.depth + 1});
  }
  return out;
}

HPFloat default_quad_tol(prec_t prec) { return HPFloat::pow2(-static_cast<long>(3 * prec / 4), prec); }

QuadResult reference_integral(const IntegrandSpec& f, prec_t prec) {
  static std::mutex mu;
  static std::map<std::pair<std::string, prec_t>, QuadResult> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find({f.name, prec});
    if (it != cache.end()) return it->second;
  }
  const auto g = [&f](const HPFloat& t) { return f.deriv(0, t); };
  QuadResult r = integrate(g, HPFloat(0, prec), HPFloat(1, prec), default_quad_tol(prec));
  std::lock_guard lock(mu);
  cache.emplace(std::make_pair(f.name, prec), r);
  return r;
}

// ---------------------------------------------------------------------------
// Euler-Maclaurin

HPFloat composite_mean(const IntegrandSpec& f, unsigned p, const HPFloat& x) {
  require(p >= 1, "composite_mean needs p >= 1");
  HPFloat s(x.prec());
  for (unsigned k = 0; k < p; ++k) s += f.eval((x + HPFloat(k, x.prec())) / static_cast<long>(p));
  return s / static_cast<long>(p);
}

HPFloat EMResult::reconstructed_integral() const {
  HPFloat v = estimate;
  for (const auto& t : correction_terms) v -= t;
  return v + remainder.mid();
}

HPFloat em_kernel_integral(const IntegrandSpec& f, unsigned p, unsigned m, const HPFloat& x) {
  const prec_t prec = x.prec();
  // breakpoints t = (x - j)/p inside (0, 1)
  std::vector<HPFloat> cuts{HPFloat(0, prec)};
  const long jlo = static_cast<long>(std::floor(x.to_double())) - static_cast<long>(p) - 1;
  const long jhi = static_cast<long>(std::ceil(x.to_double())) + 1;
  for (long j = jhi; j >= jlo; --j) {
    const HPFloat t = (x - HPFloat(j, prec)) / static_cast<long>(p);
    if (t.sign() > 0 && t < HPFloat(1, prec)) cuts.push_back(t);
  }
  cuts.push_back(HPFloat(1, prec));

  std::vector<HPFloat> bc;
  for (const auto& c : bernoulli_polynomial(m).coeffs()) bc.push_back(HPFloat::from_rational(c, prec));

  HPFloat total(prec);
  const HPFloat quarter = HPFloat::from_rational(BigRational(1, 4), prec);
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    const HPFloat& a = cuts[i];
    const HPFloat& b = cuts[i + 1];
    if (!(a < b)) continue;
    const HPFloat shift = floor(x - (a + b) / 2 * static_cast<long>(p));
    const auto kernel = [&](const HPFloat& t) {
      const HPFloat u = x - t * static_cast<long>(p) - shift;
      HPFloat acc(prec);
      for (auto it = bc.rbegin(); it != bc.rend(); ++it) acc = acc * u + *it;
      return acc * f.deriv(m, t);
    };
    const HPFloat len = b - a;
    const long pieces = std::max(1L, static_cast<long>(std::ceil((len / quarter).to_double() - 1e-12)));
    for (long s = 0; s < pieces; ++s) {
      const HPFloat sa = a + len * s / pieces;
      const HPFloat sb = (s + 1 == pieces) ? b : a + len * (s + 1) / pieces;
      total += gauss_legendre(kernel, sa, sb, 31);
    }
  }
  const HPFloat scale = pow(HPFloat(static_cast<long>(p), prec), m) * HPFloat::from_rational(BigRational(factorial(m)), prec);
  return total / scale;
}

EMResult em_identity_check(const IntegrandSpec& f, unsigned p, unsigned m, const HPFloat& x, const HPFloat& quad_tol) {
  require(p >= 1 && m >= 1, "em_identity_check needs p >= 1 and m >= 1");
  require(m <= f.max_order, "em_identity_check: order exceeds the integrand's derivatives");
  const prec_t prec = x.prec();
  EMResult r;
  r.p = p;
  r.m = m;
  r.x = x;
  r.estimate = composite_mean(f, p, x);

  const QuadResult ref = (quad_tol >= default_quad_tol(prec))
                             ? reference_integral(f, prec)
                             : integrate([&f](const HPFloat& t) { return f.eval(t); }, HPFloat(0, prec), HPFloat(1, prec), quad_tol);
  r.defining_value = ref.value - r.estimate;
  HPFloat pk(1, prec);
  HPFloat scale_sum = abs(ref.value) + abs(r.estimate);
  for (unsigned k = 1; k <= m; ++k) {
    pk *= static_cast<long>(p);
    const HPFloat bk = HPFloat::from_rational(bernoulli_polynomial(k)(x.to_rational()) / BigRational(factorial(k)), prec);
    HPFloat term = bk * f.delta(k - 1, prec) / pk;
    scale_sum += abs(term);
    r.defining_value += term;
    r.correction_terms.push_back(std::move(term));
  }
  r.kernel_value = em_kernel_integral(f, p, m, x);

  r.tolerance = ref.error + quad_tol + HPFloat::pow2(-static_cast<long>(prec) + 24, prec) * (scale_sum + HPFloat(1, prec));
  const HPFloat diff = abs(r.defining_value - r.kernel_value);
  if (diff > r.tolerance)
    fail(ErrorCode::ToleranceFailure, f.name + " p=" + std::to_string(p) + " m=" + std::to_string(m) +
                                          ": two computations of E differ by " + diff.to_string(6));
  r.remainder = Interval(r.kernel_value - r.tolerance, r.kernel_value + r.tolerance);

  const Interval b = Interval::from_int(8, prec) / Interval::pi(prec) /
                     pow(two_pi(prec) * static_cast<long>(p), m) * Interval(f.sup_deriv(m, prec));
  r.bound = b.hi();
  if (r.remainder.mig() > r.bound)
    fail(ErrorCode::BoundViolation, f.name + " p=" + std::to_string(p) + " m=" + std::to_string(m) +
                                        ": |E| = " + r.kernel_value.to_string(8) + " exceeds " + r.bound.to_string(8));
  return r;
}

DecayReport decay_check(const IntegrandSpec& f, unsigned m, const HPFloat& x, const std::vector<unsigned>& p_list) {
  require(!p_list.empty(), "decay_check needs p values");
  const prec_t prec = x.prec();
  DecayReport r;
  for (unsigned p : p_list) r.scaled.push_back(em_kernel_integral(f, p, m, x) * pow(HPFloat(static_cast<long>(p), prec), m));
  const HPFloat tiny = HPFloat::pow2(-static_cast<long>(prec) / 2, prec);
  bool all_zero = true;
  for (const auto& v : r.scaled) all_zero = all_zero && abs(v) <= tiny;
  r.decreasing = all_zero || abs(r.scaled.back()) < abs(r.scaled.front());
  return r;
}

Interval signed_remainder_monotone(const IntegrandSpec& f, unsigned m, prec_t prec) {
  require(m >= 1, "signed_remainder_monotone needs m >= 1");
  if (!f.monotone_flags.count(2 * m - 1))
    fail(ErrorCode::PreconditionViolated, f.name + ": derivative of order " + std::to_string(2 * m - 1) +
                                              " is not flagged as decreasing");
  const QuadResult ref = reference_integral(f, prec);
  HPFloat v = ref.value - (f.eval(HPFloat(0, prec)) + f.eval(HPFloat(1, prec))) / 2;
  for (unsigned k = 1; k < m; ++k)
    v += HPFloat::from_rational(bernoulli_number(2 * k) / BigRational(factorial(2 * k)), prec) * f.delta(2 * k - 1, prec);
  if (m % 2 == 0) v = -v;
  const HPFloat slack = ref.error + default_quad_tol(prec);
  Interval R(v - slack, v + slack);
  const Interval upper = Interval::from_int(6, prec) / pow(two_pi(prec), 2 * m) * Interval(-f.delta(2 * m - 1, prec));
  if (R.hi().sign() < 0 || R.lo() > upper.hi())
    fail(ErrorCode::BoundViolation, f.name + " m=" + std::to_string(m) + ": R = " + R.to_string(10) +
                                        " outside [0, " + upper.hi().to_string(10) + "]");
  return R;
}

// ---------------------------------------------------------------------------
// Validators

bool validate_derivatives(const IntegrandSpec& f, prec_t prec, unsigned max_k) {
  std::mt19937_64 rng(20240517);
  std::uniform_real_distribution<double> u(0.05, 0.95);
  const HPFloat h = HPFloat::pow2(-static_cast<long>(prec / 4), prec);
  const HPFloat rtol = HPFloat::pow2(-static_cast<long>(prec / 8), prec);
  for (int i = 0; i < 10; ++i) {
    const HPFloat x = HPFloat::from_double(u(rng), prec);
    for (unsigned k = 0; k < std::min(max_k, f.max_order); ++k) {
      const HPFloat fd = (f.deriv(k, x + h) - f.deriv(k, x - h)) / (h * 2);
      const HPFloat exact = f.deriv(k + 1, x);
      if (abs(fd - exact) > rtol * (abs(exact) + HPFloat(1, prec))) return false;
    }
  }
  return true;
}

bool validate_sup_bound(const IntegrandSpec& f, unsigned m, prec_t prec) {
  const HPFloat bound = f.sup_deriv(m, prec);
  for (unsigned j = 0; j <= 1000; ++j) {
    const HPFloat x = HPFloat::from_rational(make_rational(j, 1000), prec);
    if (abs(f.deriv(m, x)) > bound) return false;
  }
  return true;
}

bool validate_monotone_flags(const IntegrandSpec& f, prec_t prec, unsigned max_k) {
  for (unsigned k : f.monotone_flags) {
    if (k > max_k) break;
    HPFloat prev = f.deriv(k, HPFloat(0, prec));
    for (unsigned j = 1; j <= 1000; ++j) {
      HPFloat cur = f.deriv(k, HPFloat::from_rational(make_rational(j, 1000), prec));
      if (cur > prev + HPFloat::pow2(-static_cast<long>(prec) / 2, prec) * (abs(prev) + HPFloat(1, prec))) return false;
      prev = std::move(cur);
    }
  }
  return true;
}

}  // namespace bern
