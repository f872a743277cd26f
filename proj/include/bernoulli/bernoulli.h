#ifndef BERNOULLI_BERNOULLI_H
#define BERNOULLI_BERNOULLI_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct bern_context bern_context;

typedef enum bern_status {
  BERN_OK = 0,
  BERN_E_INVALID_ARGUMENT = 1,
  BERN_E_NOT_INTEGER = 2,
  BERN_E_BRACKET_FAILURE = 3,
  BERN_E_TOLERANCE_FAILURE = 4,
  BERN_E_PRECONDITION = 5,
  BERN_E_ORDER_MISMATCH = 6,
  BERN_E_BOUND_VIOLATION = 7,
  BERN_E_SANDWICH_VIOLATION = 8,
  BERN_E_IDENTITY_VIOLATION = 9,
  BERN_E_PRECISION_UNREACHABLE = 10,
  BERN_E_INTERNAL = 99
} bern_status;

typedef enum bern_format { BERN_FORMAT_JSON = 0, BERN_FORMAT_CSV = 1, BERN_FORMAT_PRETTY = 2 } bern_format;

/* Working precision 0 selects $BERN_PREC, or 256 bits when unset. */
bern_status bern_context_new(long prec_bits, bern_context** out);
void bern_context_free(bern_context* ctx);
long bern_context_precision(const bern_context* ctx);
/* Significant digits in printed decimals; 0 picks a default, capped by the precision. */
bern_status bern_context_set_digits(bern_context* ctx, int digits);
/* Message of the last failed call on this context, "" when none. */
const char* bern_last_error(const bern_context* ctx);
const char* bern_status_name(bern_status status);

/* Every char** result is heap-allocated; release it with bern_string_free. */
void bern_string_free(char* s);

/* b_n as "num/den". */
bern_status bern_bernoulli_number(bern_context* ctx, unsigned n, char** out);
/* B_n(X), e.g. "X^2 - X + 1/6". */
bern_status bern_bernoulli_polynomial(bern_context* ctx, unsigned n, char** out);
/* b_0, b_2, ..., b_{2 max} as a two-row table (pretty) or one row per n. */
bern_status bern_bernoulli_table(bern_context* ctx, unsigned max, bern_format fmt, char** out);
/* sum_{k=1}^{m} k^n */
bern_status bern_power_sum(bern_context* ctx, unsigned n, unsigned long m, char** out);

/* Euler's constant to `digits` decimals, certified by its enclosure. */
bern_status bern_gamma(bern_context* ctx, unsigned digits, char** out);

/* kind "C", "D" or "E"; tol as a decimal string, NULL for 1e-25. */
bern_status bern_series(bern_context* ctx, const char* kind, unsigned p, const char* tol, bern_format fmt, char** out);
/* kind "I", "J", "K", "Ktilde", "L" or "M". */
bern_status bern_trig_sum(bern_context* ctx, const char* kind, unsigned p, bern_format fmt, char** out);
/* Two-sided bracket sweep with 2n (upper) and 2n+1 (lower) correction terms.
   *all_pass is set to 1 when every row is certified. */
bern_status bern_trig_verify(bern_context* ctx, const char* kind, unsigned max_p, unsigned n, int header, char** out,
                             int* all_pass);

/* Convergence table for p = first, first*factor, ... <= last. */
bern_status bern_quadrature_table(bern_context* ctx, const char* rule, const char* fn, unsigned first, unsigned last,
                                  unsigned factor, bern_format fmt, int header, char** out);

typedef struct bern_verify_options {
  unsigned max_n; /* 0 for 30 */
  unsigned max_p; /* 0 for the suite default */
  unsigned m;     /* 0 for 2 */
  int fast;
} bern_verify_options;

/* Runs a suite ("core", "vonstaudt", "analytic", "em", "quadrature", "series", "trig", "all").
   *passed is set to 1 when every check passes. opts may be NULL. */
bern_status bern_verify(bern_context* ctx, const char* suite, const bern_verify_options* opts, bern_format fmt,
                        int header, char** out, int* passed);

#ifdef __cplusplus
}
#endif

#endif
