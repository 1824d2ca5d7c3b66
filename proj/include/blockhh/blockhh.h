/*
 * C interface to the blockhh library.
 *
 * Every object is an opaque handle created by a *_new / bhh_verify_* call and
 * released with the matching *_free. Functions that can fail return a
 * bhh_status; on failure bhh_last_error() describes the problem (per thread).
 * Arbitrary-precision integers are returned as decimal strings owned by the
 * handle they were read from and valid until that handle is freed.
 */
#ifndef BLOCKHH_BLOCKHH_H
#define BLOCKHH_BLOCKHH_H

#include <stddef.h>
#include <stdint.h>

#if defined(BLOCKHH_BUILDING_LIBRARY)
#define BHH_API __attribute__((visibility("default")))
#else
#define BHH_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bhh_status {
  BHH_OK = 0,
  BHH_E_INVALID_ARGUMENT = 1, /* out of range or malformed input */
  BHH_E_NOT_PRIME = 2,        /* an argument documented as prime is not */
  BHH_E_DOMAIN = 3,           /* mathematically undefined (e.g. non-unit inverse) */
  BHH_E_INTERNAL = 4          /* consistency check failed or allocation failure */
} bhh_status;

BHH_API const char* bhh_status_string(bhh_status status);
BHH_API const char* bhh_last_error(void);
BHH_API const char* bhh_version(void);
BHH_API int bhh_is_prime(uint64_t n);

/* ---- series ------------------------------------------------------------ */

typedef enum bhh_series_kind {
  BHH_SERIES_P = 0,         /* partition generating function P(t) */
  BHH_SERIES_Z = 1,         /* centers of principal blocks, Z(t) */
  BHH_SERIES_Y = 2,         /* HH^1 of principal blocks, Y(t) */
  BHH_SERIES_HH1_GROUP = 3, /* HH^1 of kS_n */
  BHH_SERIES_CS = 4         /* s-th p-section of the p-core counts, C_s(t) */
} bhh_series_kind;

typedef struct bhh_series bhh_series;

/* `p` is ignored for BHH_SERIES_P; `s` is used only for BHH_SERIES_CS. */
BHH_API bhh_status bhh_series_new(bhh_series_kind kind, uint32_t p, uint32_t order, uint32_t s, bhh_series** out);
BHH_API void bhh_series_free(bhh_series* series);
BHH_API uint32_t bhh_series_order(const bhh_series* series);
BHH_API bhh_status bhh_series_coeff(const bhh_series* series, uint32_t exponent, const char** out);

/* ---- blocks ------------------------------------------------------------ */

typedef struct bhh_blocks bhh_blocks;

typedef struct bhh_block_info {
  uint32_t p;
  uint32_t n;
  uint32_t weight;
  uint64_t defect_order_exp;
  const uint32_t* core_parts; /* owned by the bhh_blocks handle */
  size_t core_length;
  const char* dim_center;     /* decimal */
  const char* dim_hh1;        /* decimal */
} bhh_block_info;

BHH_API bhh_status bhh_blocks_new(uint32_t p, uint32_t n, bhh_blocks** out);
BHH_API void bhh_blocks_free(bhh_blocks* blocks);
BHH_API size_t bhh_blocks_count(const bhh_blocks* blocks);
BHH_API bhh_status bhh_blocks_get(const bhh_blocks* blocks, size_t index, bhh_block_info* out);

/* ---- scalar queries ---------------------------------------------------- */

BHH_API bhh_status bhh_y1_formula(uint32_t p, uint32_t r, uint32_t* out);
BHH_API bhh_status bhh_hh1_group_oracle(uint32_t p, uint32_t n, uint64_t* out);
BHH_API bhh_status bhh_sylow_exponent(uint32_t p, uint64_t m, uint64_t* out);

/* ---- verification ------------------------------------------------------ */

typedef struct bhh_report bhh_report;

/* `fault` < 0 runs the check as is; fault = k >= 0 bumps one input
 * coefficient (index k of C_s, Y(t) or Y(t) respectively) before checking. */
BHH_API bhh_status bhh_verify_block_decomposition(uint32_t p, uint32_t s, uint32_t order, int64_t fault,
                                                  bhh_report** out);
BHH_API bhh_status bhh_verify_theorem2(uint32_t p, uint32_t max_weight, int64_t fault, bhh_report** out);
BHH_API bhh_status bhh_verify_theorem3(uint32_t p, uint32_t order, int64_t fault, bhh_report** out);

BHH_API void bhh_report_free(bhh_report* report);
BHH_API const char* bhh_report_identity(const bhh_report* report);
BHH_API uint32_t bhh_report_p(const bhh_report* report);
BHH_API uint32_t bhh_report_order(const bhh_report* report);
BHH_API int bhh_report_holds(const bhh_report* report);
BHH_API const char* bhh_report_detail(const bhh_report* report);
/* Returns 1 and fills the outputs when a discrepancy was recorded, else 0.
 * lhs/rhs are exact rationals rendered as "a" or "a/b". */
BHH_API int bhh_report_discrepancy(const bhh_report* report, uint64_t* exponent, const char** lhs,
                                   const char** rhs);

#ifdef __cplusplus
}
#endif

#endif /* BLOCKHH_BLOCKHH_H */
