#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <string>

#include <CLI11.hpp>

#include "bernoulli/bernoulli.h"

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2 };

struct Globals {
  long prec = 0;
  int digits = 0;
  std::string format;  // empty: the command's natural format
  std::string out;
  bool fast = false;
  bool no_header = false;
};

bern_format pick_format(const Globals& g, bern_format natural) {
  if (g.format == "json") return BERN_FORMAT_JSON;
  if (g.format == "csv") return BERN_FORMAT_CSV;
  if (g.format == "pretty") return BERN_FORMAT_PRETTY;
  return natural;
}

class Session {
 public:
  explicit Session(const Globals& g) : g_(g) {}
  ~Session() { bern_context_free(ctx_); }

  bool open() {
    if (bern_context_new(g_.prec, &ctx_) != BERN_OK) {
      std::cerr << "error: precision must lie in [64, 4096] bits\n";
      return false;
    }
    if (bern_context_set_digits(ctx_, g_.digits) != BERN_OK) {
      std::cerr << "error: " << bern_last_error(ctx_) << '\n';
      return false;
    }
    return true;
  }

  bern_context* ctx() { return ctx_; }

  // Emits the result text, or reports the failure. Returns the exit code.
  int finish(bern_status st, char** result, bool verdict = true) {
    char* text = *result;
    *result = nullptr;
    if (st != BERN_OK) {
      std::cerr << "error: " << bern_last_error(ctx_) << '\n';
      bern_string_free(text);
      return st == BERN_E_INVALID_ARGUMENT ? kUsage : kFail;
    }
    const std::string body = text ? text : "";
    bern_string_free(text);
    if (!emit(body)) return kFail;
    return verdict ? kPass : kFail;
  }

 private:
  bool emit(const std::string& body) {
    if (g_.out.empty()) {
      std::cout << body;
      if (!body.empty() && body.back() != '\n') std::cout << '\n';
      return true;
    }
    std::ofstream f(g_.out, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << g_.out << '\n';
      return false;
    }
    f << body;
    if (!body.empty() && body.back() != '\n') f << '\n';
    return static_cast<bool>(f);
  }

  const Globals& g_;
  bern_context* ctx_ = nullptr;
};

// "a:b" or "a:b:xk"
bool parse_range(const std::string& text, unsigned& first, unsigned& last, unsigned& factor) {
  static const std::regex re(R"((\d+):(\d+)(?::x(\d+))?)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) return false;
  try {
    first = static_cast<unsigned>(std::stoul(m[1]));
    last = static_cast<unsigned>(std::stoul(m[2]));
    factor = m[3].matched ? static_cast<unsigned>(std::stoul(m[3])) : 2;
  } catch (const std::exception&) {
    return false;
  }
  return first >= 1 && first <= last && factor >= 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bernoulli numbers and polynomials: exact tables, certified enclosures, verification suites"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--prec", g.prec, "working precision in bits (default $BERN_PREC or 256)")->check(CLI::Range(64, 4096));
  app.add_option("--digits", g.digits, "significant digits of printed decimals")->check(CLI::NonNegativeNumber);
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
  app.add_option("--out", g.out, "write output to this file");
  app.add_flag("--fast", g.fast, "capped verification budgets");
  app.add_flag("--no-header", g.no_header, "omit CSV header rows");

  // bernoulli
  auto* bern = app.add_subcommand("bernoulli", "exact Bernoulli numbers and polynomials");
  bern->require_subcommand(1);
  unsigned bn = 0;
  auto* numbers = bern->add_subcommand("numbers", "b_n as a reduced fraction");
  numbers->add_option("n", bn, "index")->required();
  auto* poly = bern->add_subcommand("poly", "B_n(X)");
  poly->add_option("n", bn, "degree")->required();
  auto* table = bern->add_subcommand("table", "b_0, b_2, ..., b_{2 max}");
  table->add_option("max", bn, "last n")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "run an invariant suite");
  std::string suite;
  bern_verify_options vopt{};
  verify->add_option("suite", suite, "core, vonstaudt, analytic, em, quadrature, series, trig or all")
      ->required()
      ->check(CLI::IsMember({"core", "vonstaudt", "analytic", "em", "quadrature", "series", "trig", "all"}));
  verify->add_option("--max-n", vopt.max_n, "largest n of the exact identity checks")->check(CLI::Range(1, 200));
  verify->add_option("--max-p", vopt.max_p, "largest p of the swept checks");
  verify->add_option("--m", vopt.m, "largest expansion order of the witness checks")->check(CLI::Range(1, 12));

  // quadrature
  auto* quad = app.add_subcommand("quadrature", "convergence table of a composite rule");
  std::string rule = "trapezoid", fn = "exp", range = "1:64:x2";
  quad->add_option("--rule", rule, "left, right, midpoint, trapezoid, simpson, gauss2 or romberg:L");
  quad->add_option("--fn", fn, "exp, reciprocal1p, cos2pi, log1p or poly:c0,c1,...");
  quad->add_option("--p", range, "p range first:last[:xfactor]");

  // gamma
  auto* gamma = app.add_subcommand("gamma", "Euler's constant");
  unsigned gdigits = 30;
  gamma->add_option("--digits", gdigits, "decimals")->check(CLI::Range(1, 1000));

  // series
  auto* series = app.add_subcommand("series", "enclosure of C_p, D_p or E_p");
  std::string skind;
  unsigned sp = 1;
  std::string tol = "1e-25";
  series->add_option("kind", skind, "C, D or E")->required()->check(CLI::IsMember({"C", "D", "E"}));
  series->add_option("--p", sp, "p >= 1")->check(CLI::PositiveNumber);
  series->add_option("--tol", tol, "enclosure width");

  // trig
  auto* trig = app.add_subcommand("trig", "cosecant and cotangent sums");
  std::string tkind;
  unsigned tp = 2;
  trig->add_option("sum", tkind, "I, J, K, Ktilde, L or M")->check(CLI::IsMember({"I", "J", "K", "Ktilde", "L", "M"}));
  trig->add_option("--p", tp, "p >= 1")->check(CLI::PositiveNumber);
  auto* tverify = trig->add_subcommand("verify", "two-sided bracket sweep, CSV p,value,lower,upper,margin");
  unsigned tmax = 1000, tm = 0;
  std::string vkind = "I";
  tverify->add_option("--max-p", tmax, "last p")->check(CLI::PositiveNumber);
  tverify->add_option("--m", tm, "truncation index n of the alternating corrections");
  tverify->add_option("--kind", vkind, "I or J")->check(CLI::IsMember({"I", "J"}));

  for (auto* sub : {bern, numbers, poly, table, verify, quad, gamma, series, trig, tverify}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }

  Session s(g);
  if (!s.open()) return kUsage;
  const int header = g.no_header ? 0 : 1;
  char* text = nullptr;

  if (*bern) {
    if (*numbers) return s.finish(bern_bernoulli_number(s.ctx(), bn, &text), &text);
    if (*poly) return s.finish(bern_bernoulli_polynomial(s.ctx(), bn, &text), &text);
    return s.finish(bern_bernoulli_table(s.ctx(), bn, pick_format(g, BERN_FORMAT_PRETTY), &text), &text);
  }
  if (*verify) {
    vopt.fast = g.fast ? 1 : 0;
    int passed = 0;
    const bern_status st =
        bern_verify(s.ctx(), suite.c_str(), &vopt, pick_format(g, BERN_FORMAT_JSON), header, &text, &passed);
    return s.finish(st, &text, passed != 0);
  }
  if (*quad) {
    unsigned first = 0, last = 0, factor = 0;
    if (!parse_range(range, first, last, factor)) {
      std::cerr << "error: --p expects first:last[:xfactor], got '" << range << "'\n";
      return kUsage;
    }
    return s.finish(bern_quadrature_table(s.ctx(), rule.c_str(), fn.c_str(), first, last, factor,
                                          pick_format(g, BERN_FORMAT_CSV), header, &text),
                    &text);
  }
  if (*gamma) return s.finish(bern_gamma(s.ctx(), gdigits, &text), &text);
  if (*series)
    return s.finish(bern_series(s.ctx(), skind.c_str(), sp, tol.c_str(), pick_format(g, BERN_FORMAT_JSON), &text), &text);
  if (*trig) {
    if (*tverify) {
      if (g.fast) tmax = std::min(tmax, 1000u);
      int ok = 0;
      const bern_status st = bern_trig_verify(s.ctx(), vkind.c_str(), tmax, tm, header, &text, &ok);
      return s.finish(st, &text, ok != 0);
    }
    if (tkind.empty()) {
      std::cerr << "error: trig needs a kind or the verify subcommand\n";
      return kUsage;
    }
    return s.finish(bern_trig_sum(s.ctx(), tkind.c_str(), tp, pick_format(g, BERN_FORMAT_JSON), &text), &text);
  }
  return kUsage;
}
