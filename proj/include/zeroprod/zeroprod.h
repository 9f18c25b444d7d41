/*
 * zeroprod: exact zero-product probabilities of finite commutative rings.
 *
 * C interface to the shared library. Every object is an opaque handle owned
 * by the caller and released with the matching *_free function. Functions
 * that can fail return a zp_status; the message for the most recent failure
 * on a context is available from zp_context_last_error(). Strings returned
 * through char** out-parameters are heap allocated and released with
 * zp_string_free().
 *
 * Integers that may exceed 64 bits (ring orders, rational parts) cross the
 * boundary as decimal strings.
 */
#ifndef ZEROPROD_ZEROPROD_H
#define ZEROPROD_ZEROPROD_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(ZEROPROD_BUILDING)
#    define ZP_API __declspec(dllexport)
#  else
#    define ZP_API __declspec(dllimport)
#  endif
#else
#  define ZP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum zp_status {
  ZP_OK = 0,
  ZP_ERR_INVALID_ARGUMENT = 1,
  ZP_ERR_EXCLUDED_RING = 2,
  ZP_ERR_RESOURCE_LIMIT = 3,
  ZP_ERR_VERIFICATION = 4,
  ZP_ERR_IO = 5,
  ZP_ERR_PARSE = 6,
  ZP_ERR_OUT_OF_RANGE = 7,
  ZP_ERR_ZERO_DENOMINATOR = 8,
  ZP_ERR_CONTRACT = 9,
  ZP_ERR_INTERNAL = 10
} zp_status;

typedef enum zp_format {
  ZP_FORMAT_TABLE = 0,
  ZP_FORMAT_JSON = 1,
  ZP_FORMAT_CSV = 2
} zp_format;

typedef enum zp_prob_path {
  ZP_PATH_CLOSED_FORM = 0,
  ZP_PATH_PRODUCT = 1
} zp_prob_path;

typedef enum zp_bounds_field {
  ZP_BOUNDS_LOWER = 0,
  ZP_BOUNDS_EXACT = 1,
  ZP_BOUNDS_UPPER = 2,
  ZP_BOUNDS_REFINED_CAP = 3,
  ZP_BOUNDS_GLOBAL_CAP = 4
} zp_bounds_field;

typedef struct zp_context zp_context;
typedef struct zp_ring zp_ring;
typedef struct zp_rational zp_rational;
typedef struct zp_factorization zp_factorization;
typedef struct zp_prob zp_prob;
typedef struct zp_bounds zp_bounds;
typedef struct zp_graph zp_graph;
typedef struct zp_scan zp_scan;
typedef struct zp_verify zp_verify;
typedef struct zp_montecarlo zp_montecarlo;

typedef struct zp_graph_stats {
  size_t vertices;
  size_t edges;
  size_t self_annihilators;
} zp_graph_stats;

ZP_API const char* zp_version(void);
ZP_API const char* zp_status_name(zp_status status);
ZP_API void zp_string_free(char* s);

/* Context: enumeration caps, worker count, last error. Defaults are a
 * single-enumeration cap of 65536, a pairwise cap of 4096 and one worker. */
ZP_API zp_status zp_context_new(zp_context** out);
ZP_API void zp_context_free(zp_context* ctx);
ZP_API const char* zp_context_last_error(const zp_context* ctx);
ZP_API zp_status zp_context_set_caps(zp_context* ctx, uint64_t single_cap, uint64_t pair_cap);
/* Accepts "<single>" or "<single>:<pair>", as used by --cap and ZEROPROD_CAP. */
ZP_API zp_status zp_context_set_caps_text(zp_context* ctx, const char* text);
ZP_API void zp_context_get_caps(const zp_context* ctx, uint64_t* single_cap, uint64_t* pair_cap);
ZP_API zp_status zp_context_set_jobs(zp_context* ctx, unsigned jobs);

/* Rings. */
ZP_API zp_status zp_ring_parse(zp_context* ctx, const char* text, zp_ring** out);
ZP_API zp_status zp_ring_zn(zp_context* ctx, uint64_t n, zp_ring** out);
ZP_API void zp_ring_free(zp_ring* ring);
ZP_API zp_status zp_ring_text(zp_context* ctx, const zp_ring* ring, char** out);
ZP_API zp_status zp_ring_order(zp_context* ctx, const zp_ring* ring, char** out);

/* Rationals. */
ZP_API zp_status zp_rational_make(zp_context* ctx, const char* num, const char* den,
                                  zp_rational** out);
ZP_API void zp_rational_free(zp_rational* r);
ZP_API zp_status zp_rational_text(zp_context* ctx, const zp_rational* r, char** out);
ZP_API zp_status zp_rational_decimal(zp_context* ctx, const zp_rational* r, unsigned digits,
                                     char** out);
ZP_API zp_status zp_rational_mul(zp_context* ctx, const zp_rational* a, const zp_rational* b,
                                 zp_rational** out);
/* -1, 0 or 1 */
ZP_API int zp_rational_cmp(const zp_rational* a, const zp_rational* b);

/* Number theory. */
ZP_API zp_status zp_is_prime(zp_context* ctx, uint64_t n, int* out);
ZP_API zp_status zp_factorize(zp_context* ctx, uint64_t n, zp_factorization** out);
ZP_API void zp_factorization_free(zp_factorization* f);
ZP_API size_t zp_factorization_size(const zp_factorization* f);
ZP_API zp_status zp_factorization_get(zp_context* ctx, const zp_factorization* f, size_t index,
                                      uint64_t* prime, uint32_t* exponent);
ZP_API zp_status zp_factorization_text(zp_context* ctx, const zp_factorization* f, char** out);
ZP_API zp_status zp_factorization_json(zp_context* ctx, const zp_factorization* f, char** out);
ZP_API zp_status zp_gcd_sum(zp_context* ctx, uint64_t n, char** out);

/* Probabilities. zp_prob_compute uses the closed forms; with paranoid != 0
 * the value is also recomputed by pairwise enumeration and a disagreement
 * returns ZP_ERR_VERIFICATION. */
ZP_API zp_status zp_prob_compute(zp_context* ctx, const zp_ring* ring, int paranoid,
                                 zp_prob** out);
ZP_API void zp_prob_free(zp_prob* p);
ZP_API zp_status zp_prob_value(zp_context* ctx, const zp_prob* p, zp_rational** out);
ZP_API zp_prob_path zp_prob_get_path(const zp_prob* p);
ZP_API zp_status zp_prob_render(zp_context* ctx, const zp_prob* p, zp_format format,
                                unsigned digits, char** out);
ZP_API zp_status zp_prob_zn(zp_context* ctx, uint64_t n, zp_rational** out);
ZP_API zp_status zp_prob_zpk(zp_context* ctx, uint64_t p, uint64_t k, zp_rational** out);
ZP_API zp_status zp_prob_brute(zp_context* ctx, const zp_ring* ring, zp_rational** out);

/* Bounds report measured on the ring (single-enumeration cap). */
ZP_API zp_status zp_bounds_compute(zp_context* ctx, const zp_ring* ring, zp_bounds** out);
ZP_API void zp_bounds_free(zp_bounds* b);
ZP_API int zp_bounds_all_hold(const zp_bounds* b);
ZP_API zp_status zp_bounds_get(zp_context* ctx, const zp_bounds* b, zp_bounds_field field,
                               zp_rational** out);
ZP_API zp_status zp_bounds_render(zp_context* ctx, const zp_bounds* b, zp_format format,
                                  unsigned digits, char** out);

/* Zero-divisor graph (pairwise cap). */
ZP_API zp_status zp_graph_build(zp_context* ctx, const zp_ring* ring, zp_graph** out);
ZP_API void zp_graph_free(zp_graph* g);
ZP_API void zp_graph_get_stats(const zp_graph* g, zp_graph_stats* out);
/* Writes up to capacity degrees (descending) and stores the full count. */
ZP_API void zp_graph_degrees(const zp_graph* g, size_t* degrees, size_t capacity, size_t* count);
ZP_API zp_status zp_graph_dot(zp_context* ctx, const zp_graph* g, char** out);
ZP_API zp_status zp_graph_edges_csv(zp_context* ctx, const zp_graph* g, char** out);
ZP_API zp_status zp_graph_vertices_csv(zp_context* ctx, const zp_graph* g, char** out);
ZP_API zp_status zp_graph_render_stats(zp_context* ctx, const zp_graph* g, zp_format format,
                                       char** out);

/* Range scan over Z_n, closed forms only. */
ZP_API zp_status zp_scan_run(zp_context* ctx, uint64_t lo, uint64_t hi, zp_scan** out);
ZP_API void zp_scan_free(zp_scan* s);
ZP_API size_t zp_scan_row_count(const zp_scan* s);
ZP_API int zp_scan_all_hold(const zp_scan* s);
ZP_API zp_status zp_scan_render(zp_context* ctx, const zp_scan* s, zp_format format,
                                unsigned digits, char** out);

/* Oracle and invariant suite for every Z_n with 2 <= n <= max_n. */
ZP_API zp_status zp_verify_run(zp_context* ctx, uint64_t max_n, zp_verify** out);
ZP_API void zp_verify_free(zp_verify* v);
ZP_API int zp_verify_passed(const zp_verify* v);
ZP_API uint64_t zp_verify_rings_checked(const zp_verify* v);
ZP_API size_t zp_verify_failure_count(const zp_verify* v);
ZP_API zp_status zp_verify_render(zp_context* ctx, const zp_verify* v, zp_format format,
                                  char** out);

/* Seeded sampling of ordered pairs from Z_n (SplitMix64 generator). */
ZP_API uint64_t zp_montecarlo_default_seed(void);
ZP_API zp_status zp_montecarlo_run(zp_context* ctx, uint64_t n, uint64_t samples, uint64_t seed,
                                   zp_montecarlo** out);
ZP_API void zp_montecarlo_free(zp_montecarlo* m);
ZP_API uint64_t zp_montecarlo_hits(const zp_montecarlo* m);
ZP_API int zp_montecarlo_within(const zp_montecarlo* m, uint64_t sigmas);
ZP_API zp_status zp_montecarlo_render(zp_context* ctx, const zp_montecarlo* m, zp_format format,
                                      unsigned digits, char** out);

#ifdef __cplusplus
}
#endif

#endif /* ZEROPROD_ZEROPROD_H */
