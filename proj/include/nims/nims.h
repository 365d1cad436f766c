/*
 * C interface to the nims library: sequence validation, signed-digit
 * representation, fault tolerance, array design, bias planning and device
 * records for programmable Josephson junction arrays.
 *
 * Objects are opaque handles created by nims_*_create/parse/load and
 * released with the matching nims_*_free. Every fallible call returns a
 * nims_status; on failure nims_last_error() describes the problem (the
 * message is per thread and valid until the next failing call). Strings
 * returned through char** are owned by the caller and released with
 * nims_string_free. Oracle caps <= 0 select the library default.
 */
#ifndef NIMS_H
#define NIMS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(NIMS_BUILDING)
#    define NIMS_API __declspec(dllexport)
#  else
#    define NIMS_API __declspec(dllimport)
#  endif
#else
#  define NIMS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nims_status {
    NIMS_OK = 0,
    NIMS_ERR_INVALID_INPUT = 1,
    NIMS_ERR_INVALID_SEQUENCE = 2,
    NIMS_ERR_RANGE = 3,
    NIMS_ERR_OUT_OF_RANGE = 4,
    NIMS_ERR_INFEASIBLE = 5,
    NIMS_ERR_DEGENERATE_TARGET = 6,
    NIMS_ERR_PARSE = 7,
    NIMS_ERR_IO = 8,
    NIMS_ERR_NULL_ARGUMENT = 9,
    NIMS_ERR_INTERNAL = 10
} nims_status;

typedef enum nims_format {
    NIMS_FORMAT_TEXT = 0,
    NIMS_FORMAT_JSON = 1,
    NIMS_FORMAT_CSV = 2
} nims_format;

typedef enum nims_standard_kind {
    NIMS_STANDARD_BINARY = 0,
    NIMS_STANDARD_TERNARY = 1
} nims_standard_kind;

typedef struct nims_sequence nims_sequence;
typedef struct nims_defects nims_defects;
typedef struct nims_device nims_device;
typedef struct nims_design_spec nims_design_spec;

typedef struct nims_plan_result {
    double target_voltage;
    double base_frequency;
    int64_t m_target;
    int64_t expressed;
    int64_t beta;
    double adjusted_frequency;
    double achieved_voltage;
    double frequency_shift;
    int in_band;
} nims_plan_result;

NIMS_API const char *nims_version(void);
NIMS_API const char *nims_status_name(nims_status status);
NIMS_API const char *nims_last_error(void);
NIMS_API void nims_string_free(char *str);
NIMS_API double nims_josephson_constant(void);
NIMS_API int64_t nims_default_oracle_cap(void);

/* Sequences */
NIMS_API nims_status nims_sequence_create(const int64_t *bits, size_t count, nims_sequence **out);
/* "1,3,8" or {"bits":[1,3,8]} */
NIMS_API nims_status nims_sequence_parse(const char *text, nims_sequence **out);
/* A file path, "binary:N", "ternary:N" or inline text. */
NIMS_API nims_status nims_sequence_resolve(const char *arg, nims_sequence **out);
NIMS_API nims_status nims_sequence_standard(nims_standard_kind kind, size_t count, nims_sequence **out);
NIMS_API void nims_sequence_free(nims_sequence *seq);
NIMS_API size_t nims_sequence_size(const nims_sequence *seq);
NIMS_API nims_status nims_sequence_bits(const nims_sequence *seq, int64_t *out, size_t capacity);

NIMS_API nims_status nims_validate(const nims_sequence *seq, int *strict_valid, int *complete_capable);
NIMS_API nims_status nims_prefix_sums(const nims_sequence *seq, int64_t *totals, int64_t *offset_totals,
                                      size_t capacity);
NIMS_API nims_status nims_is_complete(const nims_sequence *seq, int64_t cap, int *complete);
NIMS_API nims_status nims_represent(const nims_sequence *seq, int64_t m, int *signs, size_t capacity,
                                    int64_t *beta);
NIMS_API nims_status nims_evaluate(const nims_sequence *seq, const int *signs, size_t count, int64_t beta,
                                   int64_t *m);
/* Per-bit missing-junction tolerance; -1 marks the unbounded last bit. */
NIMS_API nims_status nims_tolerance(const nims_sequence *seq, int64_t *tolerance, size_t capacity);

/* Bias planning. band_low == band_high == 0 selects f +/- 0.5%; kj <= 0
 * selects 2e/h. signs may be NULL. */
NIMS_API nims_status nims_plan(const nims_sequence *seq, double volts, double hz, double band_low,
                               double band_high, double kj, nims_plan_result *out, int *signs,
                               size_t capacity);
NIMS_API nims_status nims_max_voltage(const nims_sequence *seq, double hz, double kj, double *volts);
NIMS_API nims_status nims_resolution(const nims_sequence *seq, double hz, double kj, double *volts);

/* Defect maps */
NIMS_API nims_status nims_defects_create(nims_defects **out);
/* {"defects":{"<bit>":count,...}} */
NIMS_API nims_status nims_defects_parse(const char *json, nims_defects **out);
NIMS_API nims_status nims_defects_load(const char *path, nims_defects **out);
NIMS_API nims_status nims_defects_set(nims_defects *defects, size_t bit, int64_t missing);
NIMS_API int64_t nims_defects_get(const nims_defects *defects, size_t bit);
NIMS_API void nims_defects_free(nims_defects *defects);
NIMS_API nims_status nims_apply_defects(const nims_sequence *seq, const nims_defects *defects,
                                        nims_sequence **defective, int *complete_capable);

/* Array design */
NIMS_API nims_status nims_design_spec_create(int64_t a0, int64_t msb_size, int64_t target_total,
                                             nims_design_spec **out);
NIMS_API nims_status nims_design_spec_parse(const char *json, nims_design_spec **out);
NIMS_API nims_status nims_design_spec_load(const char *path, nims_design_spec **out);
NIMS_API nims_status nims_design_spec_add_tolerance(nims_design_spec *spec, int64_t at_least,
                                                    int64_t tolerance);
NIMS_API nims_status nims_design_spec_set_max_ratio(nims_design_spec *spec, int64_t num, int64_t den);
NIMS_API void nims_design_spec_free(nims_design_spec *spec);
NIMS_API nims_status nims_design(const nims_design_spec *spec, nims_sequence **out);

/* Device records */
NIMS_API nims_status nims_device_parse(const char *text, nims_device **out);
NIMS_API nims_status nims_device_load(const char *path, nims_device **out);
NIMS_API void nims_device_free(nims_device *device);
NIMS_API nims_status nims_device_sequence(const nims_device *device, nims_sequence **out);
/* NIMS_ERR_INVALID_INPUT when the record carries no frequency. */
NIMS_API nims_status nims_device_frequency(const nims_device *device, double *hz);
NIMS_API nims_status nims_device_serialize(const nims_device *device, char **out);
NIMS_API nims_status nims_infer_defects(const nims_device *device, const nims_sequence *nominal,
                                        nims_defects **out);

/* Rendered documents */
NIMS_API nims_status nims_render_validation(const nims_sequence *seq, nims_format fmt, char **out);
NIMS_API nims_status nims_render_represent(const nims_sequence *seq, int64_t m, nims_format fmt, char **out);
NIMS_API nims_status nims_render_range_check(const nims_sequence *seq, int64_t cap, nims_format fmt,
                                             int *all_passed, char **out);
NIMS_API nims_status nims_render_tolerance(const nims_sequence *seq, nims_format fmt, char **out);
NIMS_API nims_status nims_render_scan(const nims_sequence *seq, int64_t budget, int64_t cap, nims_format fmt,
                                      int *consistent, char **out);
NIMS_API nims_status nims_render_defects(const nims_sequence *nominal, const nims_defects *defects, int64_t cap,
                                         nims_format fmt, int *complete_capable, char **out);
NIMS_API nims_status nims_render_design(const nims_design_spec *spec, nims_format fmt, char **out);
NIMS_API nims_status nims_render_plan(const nims_sequence *seq, double volts, double hz, double band_low,
                                      double band_high, double kj, nims_format fmt, int *in_band, char **out);
NIMS_API nims_status nims_render_compare(const nims_sequence *const *candidates, size_t count, size_t rows,
                                         int64_t msb_size, nims_format fmt, char **out);
/* nominal may be NULL. */
NIMS_API nims_status nims_render_device_report(const nims_device *device, double min_margin_ma,
                                               const nims_sequence *nominal, double kj, int64_t cap,
                                               nims_format fmt, int *margin_pass, char **out);
NIMS_API nims_status nims_render_enumeration(int64_t a0, size_t depth, int64_t max_bit, nims_format fmt,
                                             size_t *count, char **out);
NIMS_API nims_status nims_render_oracle(const nims_sequence *seq, int a0_offset, int64_t cap, nims_format fmt,
                                        int *complete, char **out);
NIMS_API nims_status nims_render_error(const char *code, const char *message, nims_format fmt, char **out);

#ifdef __cplusplus
}
#endif

#endif /* NIMS_H */
