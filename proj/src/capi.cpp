#include "bernoulli/bernoulli.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include <json.hpp>

#include "bernoulli/asymptotic_series.hpp"
#include "bernoulli/errors.hpp"
#include "bernoulli/exact_core.hpp"
#include "bernoulli/hpfloat.hpp"
#include "bernoulli/quadrature.hpp"
#include "bernoulli/trig_sums.hpp"
#include "bernoulli/verify.hpp"

struct bern_context {
  bern::prec_t prec = bern::kDefaultPrec;
  int digits = 0;
  std::string error;
};

namespace {

using json = nlohmann::ordered_json;

int max_digits(bern::prec_t prec) { return static_cast<int>(std::floor(static_cast<double>(prec) * std::log10(2.0))); }

int digits_of(const bern_context* ctx) {
  const int cap = max_digits(ctx->prec);
  return ctx->digits ? std::min(ctx->digits, cap) : std::min(30, cap);
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

// Scientific rendering rounded toward -inf (down) or +inf.
std::string render(const bern::HPFloat& x, int digits, bool up) {
  char* buf = nullptr;
  mpfr_asprintf(&buf, up ? "%.*RUe" : "%.*RDe", digits - 1, x.raw());
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

// Runs `body`, mapping exceptions onto status codes and the context error.
template <class F>
bern_status guarded(bern_context* ctx, F&& body) {
  if (!ctx) return BERN_E_INVALID_ARGUMENT;
  ctx->error.clear();
  try {
    body();
    return BERN_OK;
  } catch (const bern::Error& e) {
    ctx->error = e.what();
    return static_cast<bern_status>(static_cast<int>(e.code()));
  } catch (const std::exception& e) {
    ctx->error = e.what();
    return BERN_E_INTERNAL;
  }
}

bern_status invalid(bern_context* ctx, const char* what) {
  if (ctx) ctx->error = std::string("InvalidArgument: ") + what;
  return BERN_E_INVALID_ARGUMENT;
}

std::string enclosure_text(bern_format fmt, const std::string& kind, unsigned p, const bern::Interval& v, int digits,
                           bool header) {
  const std::string lo = render(v.lo(), digits, false);
  const std::string hi = render(v.hi(), digits, true);
  switch (fmt) {
    case BERN_FORMAT_JSON: {
      json j;
      j["kind"] = kind;
      j["p"] = p;
      j["lo"] = lo;
      j["hi"] = hi;
      return j.dump(2) + "\n";
    }
    case BERN_FORMAT_CSV:
      return (header ? "kind,p,lo,hi\n" : "") + kind + "," + std::to_string(p) + "," + lo + "," + hi + "\n";
    default:
      return kind + "_" + std::to_string(p) + " in [" + lo + ", " + hi + "]\n";
  }
}

}  // namespace

extern "C" {

bern_status bern_context_new(long prec_bits, bern_context** out) {
  if (!out) return BERN_E_INVALID_ARGUMENT;
  *out = nullptr;
  long prec = prec_bits;
  if (prec == 0) {
    prec = bern::kDefaultPrec;
    if (const char* env = std::getenv("BERN_PREC"); env && *env) {
      char* end = nullptr;
      prec = std::strtol(env, &end, 10);
      if (*end != '\0') return BERN_E_INVALID_ARGUMENT;
    }
  }
  if (prec < 64 || prec > bern::kMaxPrec) return BERN_E_INVALID_ARGUMENT;
  auto* ctx = new (std::nothrow) bern_context;
  if (!ctx) return BERN_E_INTERNAL;
  ctx->prec = prec;
  *out = ctx;
  return BERN_OK;
}

void bern_context_free(bern_context* ctx) { delete ctx; }

long bern_context_precision(const bern_context* ctx) { return ctx ? ctx->prec : 0; }

bern_status bern_context_set_digits(bern_context* ctx, int digits) {
  if (!ctx) return BERN_E_INVALID_ARGUMENT;
  if (digits < 0 || digits > max_digits(ctx->prec)) return invalid(ctx, "digits exceed the working precision");
  ctx->digits = digits;
  return BERN_OK;
}

const char* bern_last_error(const bern_context* ctx) { return ctx ? ctx->error.c_str() : ""; }

const char* bern_status_name(bern_status status) {
  if (status == BERN_OK) return "OK";
  if (status == BERN_E_INTERNAL) return "Internal";
  if (status >= BERN_E_INVALID_ARGUMENT && status <= BERN_E_PRECISION_UNREACHABLE)
    return bern::error_name(static_cast<bern::ErrorCode>(status));
  return "Unknown";
}

void bern_string_free(char* s) { std::free(s); }

bern_status bern_bernoulli_number(bern_context* ctx, unsigned n, char** out) {
  if (!out) return invalid(ctx, "null output");
  return guarded(ctx, [&] { *out = dup(bern::to_string(bern::bernoulli_number(n))); });
}

bern_status bern_bernoulli_polynomial(bern_context* ctx, unsigned n, char** out) {
  if (!out) return invalid(ctx, "null output");
  return guarded(ctx, [&] { *out = dup(bern::bernoulli_polynomial(n).to_string()); });
}

bern_status bern_bernoulli_table(bern_context* ctx, unsigned max, bern_format fmt, char** out) {
  if (!out) return invalid(ctx, "null output");
  return guarded(ctx, [&] {
    std::vector<std::string> vals;
    for (unsigned n = 0; n <= max; ++n) vals.push_back(bern::to_string(bern::bernoulli_number(2 * n)));
    std::ostringstream os;
    if (fmt == BERN_FORMAT_JSON) {
      json rows = json::array();
      for (unsigned n = 0; n <= max; ++n) rows.push_back({{"n", n}, {"b_2n", vals[n]}});
      os << rows.dump(2) << "\n";
    } else if (fmt == BERN_FORMAT_CSV) {
      os << "n,b_2n\n";
      for (unsigned n = 0; n <= max; ++n) os << n << ',' << vals[n] << '\n';
    } else {
      std::vector<size_t> width;
      for (unsigned n = 0; n <= max; ++n) width.push_back(std::max(vals[n].size(), std::to_string(n).size()));
      const auto row = [&](const std::string& label, auto cell) {
        os << label;
        for (unsigned n = 0; n <= max; ++n) {
          const std::string c = cell(n);
          os << " | " << std::string(width[n] - c.size(), ' ') << c;
        }
        os << '\n';
      };
      row("   n", [](unsigned n) { return std::to_string(n); });
      row("b_2n", [&](unsigned n) { return vals[n]; });
    }
    *out = dup(os.str());
  });
}

bern_status bern_power_sum(bern_context* ctx, unsigned n, unsigned long m, char** out) {
  if (!out) return invalid(ctx, "null output");
  return guarded(ctx, [&] { *out = dup(bern::to_string(bern::power_sum(n, m))); });
}

bern_status bern_gamma(bern_context* ctx, unsigned digits, char** out) {
  if (!out) return invalid(ctx, "null output");
  return guarded(ctx, [&] {
    bern::require(digits >= 1 && digits <= 1000, "digits must lie in [1, 1000]");
    *out = dup(bern::gamma_digits(digits));
  });
}

bern_status bern_series(bern_context* ctx, const char* kind, unsigned p, const char* tol, bern_format fmt, char** out) {
  if (!out || !kind) return invalid(ctx, "null argument");
  return guarded(ctx, [&] {
    const bern::SeriesKind k = bern::parse_series_kind(kind);
    const bern::HPFloat t = bern::HPFloat::from_string(tol ? tol : "1e-25", ctx->prec);
    bern::require(t.sign() > 0, "tolerance must be positive");
    const bern::SeriesValue v = bern::series_value(k, p, t, ctx->prec);
    *out = dup(enclosure_text(fmt, bern::series_name(k), p, v.value, digits_of(ctx), true));
  });
}

bern_status bern_trig_sum(bern_context* ctx, const char* kind, unsigned p, bern_format fmt, char** out) {
  if (!out || !kind) return invalid(ctx, "null argument");
  return guarded(ctx, [&] {
    const bern::TrigKind k = bern::parse_trig_kind(kind);
    const bern::TrigSumValue v = bern::trig_sum(k, p, ctx->prec);
    *out = dup(enclosure_text(fmt, bern::trig_name(k), p, v.value, digits_of(ctx), true));
  });
}

bern_status bern_trig_verify(bern_context* ctx, const char* kind, unsigned max_p, unsigned n, int header, char** out,
                             int* all_pass) {
  if (!out || !kind) return invalid(ctx, "null argument");
  return guarded(ctx, [&] {
    const bern::TrigKind k = bern::parse_trig_kind(kind);
    bern::require(k == bern::TrigKind::I || k == bern::TrigKind::J, "trig verify supports I and J");
    const unsigned first = k == bern::TrigKind::I ? 2 : 1;
    bern::require(max_p >= first, "max_p below the first swept p");
    const auto rows = bern::bracket_sweep(k, first, max_p, n, ctx->prec);
    bool ok = true;
    for (const auto& r : rows) ok = ok && r.pass;
    if (all_pass) *all_pass = ok ? 1 : 0;
    *out = dup(bern::bracket_csv(rows, digits_of(ctx), header != 0));
  });
}

bern_status bern_quadrature_table(bern_context* ctx, const char* rule, const char* fn, unsigned first, unsigned last,
                                  unsigned factor, bern_format fmt, int header, char** out) {
  if (!out || !rule || !fn) return invalid(ctx, "null argument");
  return guarded(ctx, [&] {
    bern::require(first >= 1 && first <= last && factor >= 2, "p range needs 1 <= first <= last and factor >= 2");
    const bern::RuleId r = bern::RuleId::parse(rule);
    const bern::IntegrandSpec f = bern::make_integrand(fn);
    std::vector<unsigned> ps;
    for (unsigned long p = first; p <= last; p *= factor) ps.push_back(static_cast<unsigned>(p));
    const auto rows = bern::convergence_table(r, f, ps, ctx->prec);
    const int d = digits_of(ctx);
    if (fmt == BERN_FORMAT_CSV) {
      *out = dup(bern::convergence_csv(rows, d, header != 0));
      return;
    }
    if (fmt == BERN_FORMAT_JSON) {
      json j;
      j["rule"] = r.name();
      j["function"] = f.name;
      j["rows"] = json::array();
      for (const auto& row : rows) {
        json e;
        e["p"] = row.p;
        e["value"] = row.value.to_string(d);
        e["error"] = row.error.to_string(d);
        e["scaled_error"] = row.scaled_error.to_string(d);
        e["measured_order"] = row.measured_order ? json(*row.measured_order) : json(nullptr);
        j["rows"].push_back(std::move(e));
      }
      *out = dup(j.dump(2) + "\n");
      return;
    }
    std::ostringstream os;
    os << r.name() << " on " << f.name << '\n';
    for (const auto& row : rows) {
      os << "  p=" << row.p << "  error=" << row.error.to_string(8);
      if (row.measured_order) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.4f", *row.measured_order);
        os << "  order=" << buf;
      }
      os << '\n';
    }
    *out = dup(os.str());
  });
}

bern_status bern_verify(bern_context* ctx, const char* suite, const bern_verify_options* opts, bern_format fmt,
                        int header, char** out, int* passed) {
  if (!out || !suite) return invalid(ctx, "null argument");
  return guarded(ctx, [&] {
    bern::VerifyOptions o;
    o.prec = ctx->prec;
    if (opts) {
      if (opts->max_n) o.max_n = opts->max_n;
      o.max_p = opts->max_p;
      if (opts->m) o.m = opts->m;
      o.fast = opts->fast != 0;
    }
    const bern::SuiteReport r = bern::run_suite(suite, o);
    if (passed) *passed = r.passed() ? 1 : 0;
    switch (fmt) {
      case BERN_FORMAT_JSON: *out = dup(r.to_json()); break;
      case BERN_FORMAT_CSV: *out = dup(r.to_csv(header != 0)); break;
      default: *out = dup(r.to_pretty()); break;
    }
  });
}

}  // extern "C"
