#ifndef BIFLOQUET_H
#define BIFLOQUET_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define BFQ_API
#elif defined(BFQ_BUILDING_LIBRARY)
#define BFQ_API __attribute__((visibility("default")))
#else
#define BFQ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Energies in units of w_q, times in 1/w_q. */

typedef enum bfq_status {
  BFQ_OK = 0,
  BFQ_ERR_INVALID_ARGUMENT = 1,
  BFQ_ERR_NUMERICAL = 2,
  BFQ_ERR_NON_CONVERGENCE = 3,
  BFQ_ERR_TRACKING = 4,
  BFQ_ERR_POLE = 5,
  BFQ_ERR_PERTURBATIVE_REGIME = 6,
  BFQ_ERR_IO = 7,
  BFQ_ERR_PARSE = 8,
  BFQ_ERR_INTERNAL = 99
} bfq_status;

typedef enum bfq_format { BFQ_FORMAT_CSV = 0, BFQ_FORMAT_JSON = 1 } bfq_format;

typedef enum bfq_line_axis { BFQ_AXIS_BIAS = 0, BFQ_AXIS_TONE1 = 1 } bfq_line_axis;

#define BFQ_FLAG_DEGENERATE 0x01u
#define BFQ_FLAG_TRACKING_WARN 0x02u
#define BFQ_FLAG_GVV_INVALID 0x04u
#define BFQ_FLAG_ONE_SIDED 0x08u
#define BFQ_FLAG_TRUNCATION_WARN 0x10u
#define BFQ_FLAG_FAILED 0x20u

typedef struct bfq_context bfq_context;
typedef struct bfq_sweep bfq_sweep;
typedef struct bfq_table bfq_table;

/* d(t) = Omega cos(nu) cos(N1 w t) + Omega sin(nu) cos(N2 w t) + b */
typedef struct bfq_drive {
  double w_q;
  double b;
  double big_omega;
  double nu;
  int n1;
  int n2;
  double omega;
} bfq_drive;

typedef struct bfq_noise {
  double v_f;
  double v_d;
  double ir_factor;
  double temp_ratio;
} bfq_noise;

typedef struct bfq_range {
  double min;
  double max;
  int count;
} bfq_range;

typedef struct bfq_point {
  double b;
  double nu;
  double omega;
  double gap; /* distance of eps+ - eps- to the nearest multiple of omega */
  double dgap_db;
  double dgap_domega;
  double gamma_phi;
  double t_phi; /* +inf when gamma_phi vanishes */
  double omega_star; /* NaN unless per-point optimal */
  double g0;
  double g_n1;
  double g_n2;
  uint32_t flags;
} bfq_point;

BFQ_API const char* bfq_version(void);
BFQ_API const char* bfq_status_string(bfq_status status);

BFQ_API bfq_drive bfq_drive_default(void);
BFQ_API bfq_noise bfq_noise_default(void);

BFQ_API bfq_status bfq_context_create(bfq_context** out);
BFQ_API void bfq_context_destroy(bfq_context* ctx);
/* Message of the last failed call on this context; "" if none. */
BFQ_API const char* bfq_last_error(const bfq_context* ctx);
BFQ_API bfq_status bfq_context_set_noise(bfq_context* ctx, const bfq_noise* noise);
/* 0 selects the parameter-dependent default for either cutoff. */
BFQ_API bfq_status bfq_context_set_truncation(bfq_context* ctx, int n_max, int k_max);
/* 0 = hardware concurrency. */
BFQ_API bfq_status bfq_context_set_threads(bfq_context* ctx, int threads);

BFQ_API bfq_status bfq_point_evaluate(bfq_context* ctx, const bfq_drive* drive,
                                      bfq_point* out);
/* Folded quasienergies in [-omega/2, omega/2). */
BFQ_API bfq_status bfq_quasienergies(bfq_context* ctx, const bfq_drive* drive,
                                     double* eps_plus, double* eps_minus);
/* out[k + k_max] = g_k for k in [-k_max, k_max]; out_len >= 2 k_max + 1. */
BFQ_API bfq_status bfq_weights(bfq_context* ctx, const bfq_drive* drive, int k_max,
                               double* out, size_t out_len);
/* drive->omega is ignored. */
BFQ_API bfq_status bfq_optimal_omega(bfq_context* ctx, const bfq_drive* drive,
                                     double* omega_star);
/* Closed-form multimode gap, its alternate branch and the bias slope. */
BFQ_API bfq_status bfq_multimode(bfq_context* ctx, const bfq_drive* drive, double* gap,
                                 double* alternate, double* bias_sensitivity);

/* per_point_optimal != 0 ignores fixed_omega. */
BFQ_API bfq_status bfq_sweep2d(bfq_context* ctx, const bfq_drive* drive, bfq_range b,
                               bfq_range nu, int per_point_optimal, double fixed_omega,
                               bfq_sweep** out);
BFQ_API void bfq_sweep_size(const bfq_sweep* sweep, size_t* n_b, size_t* n_nu);
BFQ_API bfq_status bfq_sweep_point(const bfq_sweep* sweep, size_t i_nu, size_t i_b,
                                   bfq_point* out);
BFQ_API double bfq_sweep_max_t_phi(const bfq_sweep* sweep);
/* path "-" writes to stdout. */
BFQ_API bfq_status bfq_sweep_write(bfq_context* ctx, const bfq_sweep* sweep,
                                   const char* path, bfq_format format);
BFQ_API void bfq_sweep_destroy(bfq_sweep* sweep);

BFQ_API bfq_status bfq_sweet_spots(bfq_context* ctx, const bfq_sweep* sweep, double tol_dc,
                                   double tol_ac, double sour_threshold, size_t* n_dc,
                                   size_t* n_doubly, size_t* n_sour);
BFQ_API bfq_status bfq_sweet_spots_write(bfq_context* ctx, const bfq_sweep* sweep,
                                         double tol_dc, double tol_ac,
                                         double sour_threshold, const char* path);

BFQ_API bfq_status bfq_line(bfq_context* ctx, const bfq_drive* drive, bfq_line_axis axis,
                            bfq_range range, bfq_table** out);
/* Tone-1 scan at b = (m N1 + l N2) omega + delta; tone 2 from drive. */
BFQ_API bfq_status bfq_fastscan(bfq_context* ctx, const bfq_drive* drive, int m, int l,
                                double delta, bfq_range tone1, int j_max, bfq_table** out);
BFQ_API bfq_status bfq_deltascan(bfq_context* ctx, const bfq_drive* drive, int m, int l,
                                 const double* tone1, size_t n_tone1, const double* deltas,
                                 size_t n_deltas, bfq_table** out);

BFQ_API size_t bfq_table_rows(const bfq_table* table);
BFQ_API size_t bfq_table_columns(const bfq_table* table);
BFQ_API const char* bfq_table_column_name(const bfq_table* table, size_t column);
/* NaN for out-of-range indices. */
BFQ_API double bfq_table_value(const bfq_table* table, size_t row, size_t column);
BFQ_API uint32_t bfq_table_flags(const bfq_table* table, size_t row);
/* Interior local maxima of a column; writes up to cap indices, total in *count. */
BFQ_API bfq_status bfq_table_local_maxima(const bfq_table* table, const char* column,
                                          size_t* indices, size_t cap, size_t* count);
BFQ_API bfq_status bfq_table_write(bfq_context* ctx, const bfq_table* table,
                                   const char* path, bfq_format format, const char* name);
BFQ_API void bfq_table_destroy(bfq_table* table);

/* Runs the built-in oracle checks; the per-check report is available from
   bfq_selftest_report until the next call on ctx. */
BFQ_API bfq_status bfq_selftest(bfq_context* ctx, int* all_passed);
BFQ_API const char* bfq_selftest_report(const bfq_context* ctx);

#ifdef __cplusplus
}
#endif

#endif
