#include "bernoulli/asymptotic_series.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "bernoulli/errors.hpp"

namespace bern {

namespace {

constexpr unsigned kDirectTerms = 1000;

Interval iv(const BigRational& q, prec_t prec) { return Interval::from_rational(q, prec); }

Interval recip(unsigned long n, prec_t prec) { return Interval::from_int(1, prec) / Interval::from_int(static_cast<long>(n), prec); }

// sum_{k=1}^{m-1} b_{2k} / (2k n^{2k}) with n an interval
Interval correction_sum(const Interval& n, unsigned m) {
  const prec_t prec = n.prec();
  Interval s(prec);
  const Interval inv2 = Interval::from_int(1, prec) / (n * n);
  Interval pw = Interval::from_int(1, prec);
  for (unsigned k = 1; k < m; ++k) {
    pw = pw * inv2;
    s += pw * (bernoulli_number(2 * k) / BigRational(2 * k));
  }
  return s;
}

BigRational sandwich_bound(unsigned m, const BigRational& n) {
  return abs(bernoulli_number(2 * m)) / (BigRational(2 * m) * rational_pow(n, 2 * m));
}

// |b_{2M}|/(2M p^{2M}) * N^{1-2M}/(2M-1), the remainder bound of the C/D tails
HPFloat tail_remainder_bound(unsigned p, unsigned N, unsigned M) {
  const BigRational b = sandwich_bound(M, p) * rational_pow(make_rational(1, N), 2 * M - 1) / BigRational(2 * M - 1);
  return HPFloat::from_rational(b, 64, MPFR_RNDU);
}

unsigned choose_tail_order(unsigned p, unsigned N, const HPFloat& tol) {
  const HPFloat target = tol / 4;
  for (unsigned M = 1; M <= 200; ++M)
    if (tail_remainder_bound(p, N, M) < target) return M;
  fail(ErrorCode::PrecisionUnreachable, "no tail order reaches the requested tolerance");
}

// Working precision absorbing the cancellation in zeta(2k) - partial sums.
prec_t working_prec(prec_t prec, unsigned N, unsigned M) {
  return prec + 64 + static_cast<prec_t>(std::ceil((2.0 * M) * std::log2(static_cast<double>(N))));
}

// Shared skeleton of C_p and D_p.
SeriesValue harmonic_series(SeriesKind kind, unsigned p, unsigned N, unsigned M, prec_t prec) {
  require(p >= 1 && N >= 1 && M >= 1, "series needs p, terms and tail order >= 1");
  const bool alternating = kind == SeriesKind::D;
  const prec_t w = working_prec(prec, N, M);
  const Interval g = euler_gamma(w);
  const Interval P = Interval::from_int(static_cast<long>(p), w);

  Interval sum(w);
  Interval H(w);
  unsigned long k = 0;
  for (unsigned n = 1; n <= N; ++n) {
    while (k < static_cast<unsigned long>(p) * n) H += recip(++k, w);
    Interval term = H - log(Interval::from_int(static_cast<long>(k), w)) - g;
    if (!alternating) term -= recip(2 * k, w);
    if (alternating && n % 2 == 0) term = -term;
    sum += term;
  }

  // Tail of the expansion c_{pn} = -sum_{j<M} b_{2j}/(2j p^{2j}) n^{-2j} + O(n^{-2M}).
  const Interval pi2 = pow(Interval::pi(w), 2);
  Interval pi_pow = Interval::from_int(1, w);
  Interval tail(w);
  for (unsigned j = 1; j < M; ++j) {
    pi_pow = pi_pow * pi2;
    const BigRational c = alternating ? eta_even_exact(j) : zeta_even_exact(j);
    Interval rest = pi_pow * c;  // zeta(2j) or eta(2j)
    for (unsigned n = 1; n <= N; ++n) {
      Interval t = Interval::from_int(1, w) / pow(Interval::from_int(static_cast<long>(n), w), 2 * j);
      if (alternating && n % 2 == 0) t = -t;
      rest -= t;
    }
    tail -= rest * (bernoulli_number(2 * j) / (BigRational(2 * j) * rational_pow(p, 2 * j)));
  }
  if (alternating) {
    // d_{pn} = c_{pn} + 1/(2pn)
    Interval rest = Interval::ln2(w);
    for (unsigned n = 1; n <= N; ++n) {
      const Interval t = recip(n, w);
      rest = (n % 2) ? rest - t : rest + t;
    }
    tail += rest / (P * 2);
  }
  const HPFloat r = tail_remainder_bound(p, N, M);
  HPFloat rr(w);
  mpfr_set(rr.raw(), r.raw(), MPFR_RNDU);
  Interval rem(-rr, rr);
  if (!alternating) rem = (M % 2) ? Interval(-rr, HPFloat(w)) : Interval(HPFloat(w), rr);
  tail += rem;

  SeriesValue v;
  v.kind = kind;
  v.p = p;
  v.terms = N;
  v.tail_order = M;
  v.value = sum + tail;
  return v;
}

SeriesValue checked(SeriesValue v, const HPFloat& tol) {
  if (v.value.width() > tol)
    fail(ErrorCode::PrecisionUnreachable, series_name(v.kind) + " p=" + std::to_string(v.p) + ": width " +
                                               v.value.width().to_string(6) + " above tolerance " + tol.to_string(6));
  return v;
}

}  // namespace

// ---------------------------------------------------------------------------
// Harmonic numbers and gamma

BigRational harmonic(unsigned long n) {
  BigRational h = 0;
  for (unsigned long k = 1; k <= n; ++k) h += make_rational(1, k);
  return h;
}

Interval harmonic_interval(unsigned long n, prec_t prec) {
  Interval h(prec);
  for (unsigned long k = 1; k <= n; ++k) h += recip(k, prec);
  return h;
}

Interval euler_gamma(prec_t prec) {
  require(prec >= 2 && prec <= 2 * kMaxPrec, "euler_gamma needs 2 <= prec <= 8192");
  static std::mutex mu;
  static std::map<prec_t, Interval> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(prec);
    if (it != cache.end()) return it->second;
  }
  const prec_t w = prec + 64;
  const HPFloat target = HPFloat::pow2(-static_cast<long>(prec) - 4, 64);
  for (unsigned long n : {10000UL, 100000UL, 1000000UL}) {
    unsigned m = 0;
    for (unsigned j = 1; j <= 400 && m == 0; ++j)
      if (HPFloat::from_rational(sandwich_bound(j, n), 64, MPFR_RNDU) < target) m = j;
    if (m == 0) continue;
    const Interval N = Interval::from_int(static_cast<long>(n), w);
    // X = H_n - ln n - 1/(2n) + sum_{k<m} b_{2k}/(2k n^{2k}), and 0 < (-1)^m (X - gamma) < B
    const Interval X = harmonic_interval(n, w) - log(N) - recip(2 * n, w) + correction_sum(N, m);
    const Interval B = iv(sandwich_bound(m, n), w);
    const Interval offset = (m % 2) ? Interval::hull(HPFloat(w), B.hi()) : Interval::hull(-B.hi(), HPFloat(w));
    Interval g = X + offset;
    // round outward to the requested precision
    HPFloat lo(prec), hi(prec);
    mpfr_set(lo.raw(), g.lo().raw(), MPFR_RNDD);
    mpfr_set(hi.raw(), g.hi().raw(), MPFR_RNDU);
    g = Interval(lo, hi);
    if (g.width() > HPFloat::pow2(-static_cast<long>(prec) + 4, prec)) continue;
    std::lock_guard lock(mu);
    cache.emplace(prec, g);
    return g;
  }
  fail(ErrorCode::PrecisionUnreachable, "no (n, m) reaches " + std::to_string(prec) + " bits for gamma");
}

std::string gamma_digits(unsigned digits) {
  require(digits >= 1, "gamma_digits needs at least one digit");
  prec_t prec = static_cast<prec_t>(std::ceil(digits * 3.3219280948873623)) + 10;
  for (; prec <= kMaxPrec; prec += 32) {
    const Interval g = euler_gamma(prec);
    const std::string lo = g.lo().to_fixed(static_cast<int>(digits));
    if (lo == g.hi().to_fixed(static_cast<int>(digits))) return lo;
  }
  fail(ErrorCode::PrecisionUnreachable, "cannot certify " + std::to_string(digits) + " digits of gamma");
}

std::vector<GammaBoundsRow> gamma_bounds_table(const std::vector<unsigned long>& n_list, prec_t prec) {
  std::vector<GammaBoundsRow> rows;
  for (unsigned long n : n_list) {
    require(n >= 1, "gamma_bounds_table needs n >= 1");
    GammaBoundsRow r;
    r.n = n;
    for (prec_t w = prec;; w *= 2) {
      const BigRational nn(n);
      r.upper = iv(harmonic(n) - make_rational(1, 2 * n) + make_rational(1, 12) / (nn * nn), w) -
                log(Interval::from_int(static_cast<long>(n), w));
      r.lower = r.upper - iv(make_rational(1, 120) / rational_pow(nn, 4), w);
      r.lower_text = r.lower.lo().to_fixed(10);
      r.upper_text = r.upper.lo().to_fixed(10);
      if ((r.lower_text == r.lower.hi().to_fixed(10) && r.upper_text == r.upper.hi().to_fixed(10)) || w >= kMaxPrec) break;
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

HarmonicExpansion harmonic_expansion(unsigned long n, unsigned m, prec_t prec) {
  require(n >= 1 && m >= 1, "harmonic_expansion needs n >= 1 and m >= 1");
  HarmonicExpansion h;
  h.n = n;
  h.m = m;
  h.bound = sandwich_bound(m, n);
  const auto compute = [&](prec_t w) {
    const Interval N = Interval::from_int(static_cast<long>(n), w);
    h.gamma_used = euler_gamma(w);
    h.truncated_value = log(N) + h.gamma_used + recip(2 * n, w) - correction_sum(N, m);
    h.error_enclosure = iv(harmonic(n), w) - h.truncated_value;
    return (m % 2) ? -h.error_enclosure : h.error_enclosure;
  };
  h.pass = certify_inside(compute, 0, h.bound, prec).pass;
  return h;
}

// ---------------------------------------------------------------------------
// Series

std::string series_name(SeriesKind kind) {
  switch (kind) {
    case SeriesKind::C: return "C";
    case SeriesKind::D: return "D";
    case SeriesKind::E: return "E";
  }
  return "?";
}

SeriesKind parse_series_kind(const std::string& text) {
  if (text == "C" || text == "c") return SeriesKind::C;
  if (text == "D" || text == "d") return SeriesKind::D;
  if (text == "E" || text == "e") return SeriesKind::E;
  fail(ErrorCode::InvalidArgument, "unknown series '" + text + "'");
}

SeriesValue series_C_budget(unsigned p, unsigned terms, unsigned tail_order, prec_t prec) {
  return harmonic_series(SeriesKind::C, p, terms, tail_order, prec);
}

SeriesValue series_D_budget(unsigned p, unsigned terms, unsigned tail_order, prec_t prec) {
  return harmonic_series(SeriesKind::D, p, terms, tail_order, prec);
}

SeriesValue series_E_budget(unsigned p, unsigned terms, bool exact_tail, prec_t prec) {
  require(p >= 1 && terms >= 1, "series_E needs p >= 1 and terms >= 1");
  const prec_t w = prec + 64;
  Interval sum(w);
  unsigned long k = 0;
  for (unsigned n = 0; n < terms; ++n) {
    Interval block(w);
    for (unsigned j = 0; j < p; ++j) block += recip(++k, w);
    sum = (n % 2) ? sum - block : sum + block;
  }
  // tail: sum_{n >= N} (-1)^n (H_{p(n+1)} - H_{pn})
  Interval tail(w);
  if (exact_tail) {
    // sum_{n>=N} (-1)^n/(n+a) = (-1)^N (psi((N+a+1)/2) - psi((N+a)/2))/2, a = j/p
    const Interval P = Interval::from_int(static_cast<long>(p), w);
    for (unsigned j = 1; j <= p; ++j) {
      const Interval x = Interval::from_int(static_cast<long>(terms), w) + Interval::from_int(static_cast<long>(j), w) / P;
      const Interval beta = (digamma((x + Interval::from_int(1, w)) / 2) - digamma(x / 2)) / 2;
      tail += beta;
    }
    tail = tail / P;
    if (terms % 2) tail = -tail;
  } else {
    // alternating terms decrease, so the tail lies between 0 and its first term
    Interval first(w);
    for (unsigned j = 1; j <= p; ++j) first += recip(static_cast<unsigned long>(p) * terms + j, w);
    tail = (terms % 2) ? Interval::hull(-first.hi(), HPFloat(w)) : Interval::hull(HPFloat(w), first.hi());
  }
  SeriesValue v;
  v.kind = SeriesKind::E;
  v.p = p;
  v.terms = terms;
  v.value = sum + tail;
  return v;
}

SeriesValue series_C(unsigned p, const HPFloat& tol, prec_t prec) {
  require(p >= 1 && tol.sign() > 0, "series_C needs p >= 1 and tol > 0");
  return checked(series_C_budget(p, kDirectTerms, choose_tail_order(p, kDirectTerms, tol), prec), tol);
}

SeriesValue series_D(unsigned p, const HPFloat& tol, prec_t prec) {
  require(p >= 1 && tol.sign() > 0, "series_D needs p >= 1 and tol > 0");
  return checked(series_D_budget(p, kDirectTerms, choose_tail_order(p, kDirectTerms, tol), prec), tol);
}

SeriesValue series_E(unsigned p, const HPFloat& tol, prec_t prec) {
  require(p >= 1 && tol.sign() > 0, "series_E needs p >= 1 and tol > 0");
  return checked(series_E_budget(p, kDirectTerms, true, prec), tol);
}

SeriesValue series_value(SeriesKind kind, unsigned p, const HPFloat& tol, prec_t prec) {
  switch (kind) {
    case SeriesKind::C: return series_C(p, tol, prec);
    case SeriesKind::D: return series_D(p, tol, prec);
    case SeriesKind::E: return series_E(p, tol, prec);
  }
  fail(ErrorCode::InvalidArgument, "unknown series kind");
}

// ---------------------------------------------------------------------------
// Sandwiches

namespace {

SandwichCheck series_sandwich(bool alternating, unsigned p, unsigned m, prec_t prec) {
  require(p >= 1 && m >= 1, "sandwich check needs p >= 1 and m >= 1");
  SandwichCheck s;
  s.bound = abs(bernoulli_number(2 * m));
  const auto witness = [&](prec_t w) {
    const HPFloat tol = HPFloat::pow2(-static_cast<long>(w) / 2 - 16, w);
    const SeriesValue v = alternating ? series_D(p, tol, w) : series_C(p, tol, w);
    const prec_t wp = v.value.prec();
    const Interval pi2 = pow(Interval::pi(wp), 2);
    Interval x = v.value;
    if (alternating) x -= Interval::ln2(wp) / Interval::from_int(2L * p, wp);
    for (unsigned k = 1; k < m; ++k) {
      const BigRational c = alternating ? eta_even_exact(k) : zeta_even_exact(k);
      x += pow(pi2, k) * (c * bernoulli_number(2 * k) / (BigRational(2 * k) * rational_pow(p, 2 * k)));
    }
    const BigRational cm = alternating ? eta_even_exact(m) : zeta_even_exact(m);
    // eps = (-1)^m x 2m p^{2m} / zeta(2m)
    s.witness = x * (BigRational(2 * m) * rational_pow(p, 2 * m) / cm) / pow(pi2, m);
    if (m % 2) s.witness = -s.witness;
    return s.witness;
  };
  s.pass = certify_inside(witness, 0, s.bound, prec).pass;
  return s;
}

}  // namespace

SandwichCheck series_C_sandwich(unsigned p, unsigned m, prec_t prec) { return series_sandwich(false, p, m, prec); }

SandwichCheck series_D_sandwich(unsigned p, unsigned m, prec_t prec) { return series_sandwich(true, p, m, prec); }

IdentityCheck series_E_identity(unsigned p, prec_t prec) {
  require(p >= 1, "series_E_identity needs p >= 1");
  const HPFloat tol = HPFloat::pow2(-static_cast<long>(prec) / 2, prec);
  const SeriesValue E = series_E(p, tol, prec);
  const SeriesValue D = series_D(p, tol, prec);
  const prec_t w = std::max(E.value.prec(), D.value.prec());
  const Interval rhs = log(Interval::from_int(static_cast<long>(p), w)) + euler_gamma(w) -
                       log(Interval::pi(w) / 2) + D.value * 2;
  IdentityCheck c;
  c.residual = E.value - rhs;
  c.pass = c.residual.contains_zero();
  return c;
}

}  // namespace bern
