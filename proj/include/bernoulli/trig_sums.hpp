#pragma once

#include <string>
#include <vector>

#include "bernoulli/hpfloat.hpp"

namespace bern {

enum class TrigKind { I, J, K, Ktilde, L, M };
std::string trig_name(TrigKind kind);
TrigKind parse_trig_kind(const std::string& text);

struct TrigSumValue {
  TrigKind kind = TrigKind::I;
  unsigned p = 0;
  Interval value;
};

// I_p = sum csc(k pi/p), J_p = sum k cot(k pi/p), K_p = sum tan(k pi/(2p)),
// Ktilde_p = sum cot(k pi/(2p)), L_p = sum k csc(k pi/p) over k = 1..p-1, and
// M_p = sum_{k=0}^{p-1} (2k+1) cot((2k+1) pi/(2p)).
TrigSumValue trig_sum(TrigKind kind, unsigned p, prec_t prec = kDefaultPrec);
// I_p summed over k = 1..p-1 without pairing.
Interval csc_sum_unpaired(unsigned p, prec_t prec);

// K = Ktilde = I, L = (p/2) I, M = J_{2p} - 2 J_p = -p I. Throws IdentityViolation.
bool identity_suite(unsigned p, prec_t prec = kDefaultPrec);

struct WitnessCheck {
  Interval witness;
  Interval bound;
  bool pass = false;
};
// eps'_{p,m}: pi I_p = 2p ln p + 2(gamma - ln(pi/2)) p - sum_{k<m} 2 b_{2k} eta(2k)/(k p^{2k-1})
//                      + (-1)^m 2 eta(2m)/(m p^{2m-1}) eps'
WitnessCheck I_expansion_check(unsigned p, unsigned m, prec_t prec = kDefaultPrec);
// eps_{p,m}: pi J_p = -p^2 ln p + (ln 2pi - gamma) p^2 - p - sum_{k<m} b_{2k} zeta(2k)/(k p^{2k-2})
//                     + (-1)^m zeta(2m)/(m p^{2m-2}) eps
WitnessCheck J_expansion_check(unsigned p, unsigned m, prec_t prec = kDefaultPrec);
// theta_{p,m} of the expansion of J_p around p^2 H_p.
WitnessCheck J_harmonic_expansion_check(unsigned p, unsigned m, prec_t prec = kDefaultPrec);

struct BracketCheck {
  unsigned p = 0;
  Interval value;
  Interval lower, upper;
  Interval margin;  // the smaller of value - lower and upper - value
  bool pass = false;
};
// Alternating truncations with 2n+1 (lower) and 2n (upper) terms.
BracketCheck I_bracket(unsigned p, unsigned n, prec_t prec = kDefaultPrec);
BracketCheck J_bracket(unsigned p, unsigned n, prec_t prec = kDefaultPrec);

// Identities tying C_p, D_p, E_p to I_p and J_p.
struct SeriesTrigReport {
  std::vector<std::pair<std::string, Interval>> residuals;
  bool pass = false;
};
SeriesTrigReport series_trig_identities(unsigned p, prec_t prec = kDefaultPrec);

// Bracket sweep p = first..max_p; CSV columns p,value,lower,upper,margin.
std::vector<BracketCheck> bracket_sweep(TrigKind kind, unsigned first, unsigned max_p, unsigned n, prec_t prec);
std::string bracket_csv(const std::vector<BracketCheck>& rows, int digits, bool header = true);

}  // namespace bern
