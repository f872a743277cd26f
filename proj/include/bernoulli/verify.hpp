#pragma once

#include <string>
#include <vector>

#include "bernoulli/hpfloat.hpp"

namespace bern {

struct VerifyOptions {
  unsigned max_n = 30;
  unsigned max_p = 0;  // 0 picks the suite default
  unsigned m = 2;
  bool fast = false;
  prec_t prec = kDefaultPrec;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string margin;  // smallest certified margin, empty when not applicable
  unsigned covers = 0; // number of instances checked
  std::string detail;  // first failure, if any
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const;
  // {"suite": ..., "checks": [{"name", "status", "margin", "covers", "detail"}]}
  std::string to_json() const;
  std::string to_csv(bool header = true) const;
  std::string to_pretty() const;
};

// core, vonstaudt, analytic, em, quadrature, series, trig, all
std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& suite, const VerifyOptions& opts);

}  // namespace bern
