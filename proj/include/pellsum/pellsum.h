#ifndef PELLSUM_PELLSUM_H
#define PELLSUM_PELLSUM_H

#if defined(_WIN32)
#define PELLSUM_API __declspec(dllexport)
#else
#define PELLSUM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes, also used as process exit codes by the CLI. */
typedef enum pellsum_status {
  PELLSUM_OK = 0,
  PELLSUM_VERIFICATION_FAILED = 1,
  PELLSUM_USAGE_ERROR = 2,
  PELLSUM_DEGENERATE_INPUT = 3
} pellsum_status;

/* Result of one command: a JSON document plus its text rendering. */
typedef struct pellsum_report pellsum_report;

/* Exact rational, always in lowest terms. */
typedef struct pellsum_rational pellsum_rational;

PELLSUM_API const char* pellsum_version(void);

/*
 * Commands. Rational arguments are strings "p", "-p" or "p/q". Passing NULL
 * for R selects symbolic mode where the command supports it. Every command
 * stores a report in *out (also on failure, carrying an "error" object)
 * unless out is NULL, and returns the report status.
 */

/* method: "iter", "fast", "binet" or "all" (NULL means "fast"). */
PELLSUM_API int pellsum_pell(const char* R, long n, const char* method, pellsum_report** out);
PELLSUM_API int pellsum_q(const char* R, long n, pellsum_report** out);
/* series < 0 skips the series expansion. */
PELLSUM_API int pellsum_gf(const char* R, long m, long series, pellsum_report** out);
PELLSUM_API int pellsum_weighted_sum(const char* R, long m, const char* sigma, long n, pellsum_report** out);
/* mode: "closed", "brute" or "both" (NULL means "closed"). */
PELLSUM_API int pellsum_power_sum(const char* R, long m, long ell, long n, const char* mode, pellsum_report** out);
/* check_n < 0 skips the oracle check. */
PELLSUM_API int pellsum_linearize(long ell, const char* R, long check_n, pellsum_report** out);
PELLSUM_API int pellsum_powersum_gf(long m, long ell, pellsum_report** out);
/* suite: "all", "core", "identities", "sums" or "examples"; quick != 0 uses reduced grids. */
PELLSUM_API int pellsum_verify(const char* suite, int quick, pellsum_report** out);
/* R == NULL runs the default grid and ignores m, ell, n. */
PELLSUM_API int pellsum_bench(const char* R, long m, long ell, long n, pellsum_report** out);

/* Report accessors. Returned strings are owned by the report. */
PELLSUM_API int pellsum_report_status(const pellsum_report* r);
PELLSUM_API const char* pellsum_report_json(const pellsum_report* r);
PELLSUM_API const char* pellsum_report_text(const pellsum_report* r);
/* NULL when the command succeeded or only verification records failed. */
PELLSUM_API const char* pellsum_report_error(const pellsum_report* r);
PELLSUM_API void pellsum_report_free(pellsum_report* r);

/* Rationals. parse returns NULL on malformed input. */
PELLSUM_API pellsum_rational* pellsum_rational_parse(const char* text);
/* Caller frees the result with pellsum_string_free. */
PELLSUM_API char* pellsum_rational_str(const pellsum_rational* q);
PELLSUM_API int pellsum_rational_equal(const pellsum_rational* a, const pellsum_rational* b);
PELLSUM_API void pellsum_rational_free(pellsum_rational* q);
PELLSUM_API void pellsum_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
