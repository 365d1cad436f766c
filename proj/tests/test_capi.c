/* Exercises libnims through its C header only, compiled as C. */
#include <math.h>
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "nims/nims.h"

static int failures = 0;

#define CHECK(cond)                                                                                              \
    do {                                                                                                         \
        if (!(cond)) {                                                                                           \
            fprintf(stderr, "%s:%d: CHECK(%s) failed; last error: %s\n", __FILE__, __LINE__, #cond,              \
                    nims_last_error());                                                                          \
            ++failures;                                                                                          \
        }                                                                                                        \
    } while (0)

static char *data_path(const char *name) {
    static char buf[4096];
    snprintf(buf, sizeof buf, "%s/%s", NIMS_DATA_DIR, name);
    return buf;
}

static void test_sequences(void) {
    const int64_t bits[] = {1, 3, 8};
    nims_sequence *seq = NULL;
    CHECK(nims_sequence_create(bits, 3, &seq) == NIMS_OK);
    CHECK(nims_sequence_size(seq) == 3);

    int64_t copy[3] = {0};
    CHECK(nims_sequence_bits(seq, copy, 3) == NIMS_OK);
    CHECK(copy[0] == 1 && copy[1] == 3 && copy[2] == 8);
    CHECK(nims_sequence_bits(seq, copy, 2) != NIMS_OK);

    int strict = -1, capable = -1;
    CHECK(nims_validate(seq, &strict, &capable) == NIMS_OK);
    CHECK(strict == 1 && capable == 1);

    int64_t totals[3], offsets[3];
    CHECK(nims_prefix_sums(seq, totals, offsets, 3) == NIMS_OK);
    CHECK(totals[2] == 12 && offsets[2] == 13);

    int complete = 0;
    CHECK(nims_is_complete(seq, 0, &complete) == NIMS_OK && complete == 1);

    int signs[3];
    int64_t beta = 99;
    CHECK(nims_represent(seq, 7, signs, 3, &beta) == NIMS_OK);
    CHECK(signs[0] == -1 && signs[1] == 0 && signs[2] == 1 && beta == 0);
    int64_t m = 0;
    CHECK(nims_evaluate(seq, signs, 3, beta, &m) == NIMS_OK && m == 7);
    CHECK(nims_represent(seq, 13, signs, 3, &beta) == NIMS_ERR_OUT_OF_RANGE);
    CHECK(strlen(nims_last_error()) > 0);

    int64_t tol[3];
    CHECK(nims_tolerance(seq, tol, 3) == NIMS_OK);
    CHECK(tol[0] == 0 && tol[1] == 0 && tol[2] == -1);
    nims_sequence_free(seq);

    nims_sequence *bad = NULL;
    CHECK(nims_sequence_parse("{\"bits\": [1, 2, 7]}", &bad) == NIMS_OK);
    CHECK(nims_validate(bad, &strict, &capable) == NIMS_OK && capable == 0);
    CHECK(nims_represent(bad, 1, signs, 3, &beta) == NIMS_ERR_INVALID_SEQUENCE);
    nims_sequence_free(bad);

    nims_sequence *tern = NULL;
    CHECK(nims_sequence_standard(NIMS_STANDARD_TERNARY, 4, &tern) == NIMS_OK);
    CHECK(nims_sequence_size(tern) == 4);
    nims_sequence_free(tern);

    CHECK(nims_sequence_parse("1,,3", &bad) == NIMS_ERR_PARSE);
    CHECK(nims_sequence_parse(NULL, &bad) == NIMS_ERR_NULL_ARGUMENT);
    CHECK(nims_sequence_create(bits, 3, NULL) == NIMS_ERR_NULL_ARGUMENT);
    nims_sequence_free(NULL);
}

static void test_device_and_plan(void) {
    nims_device *dev = NULL;
    CHECK(nims_device_load(data_path("table5.csv"), &dev) == NIMS_OK);
    double hz = 0;
    CHECK(nims_device_frequency(dev, &hz) == NIMS_OK && hz == 18.01e9);

    nims_sequence *seq = NULL;
    CHECK(nims_device_sequence(dev, &seq) == NIMS_OK);
    CHECK(nims_sequence_size(seq) == 23);

    nims_plan_result p;
    int signs[23];
    CHECK(nims_plan(seq, 1.0, 18.01e9, 0, 0, 0, &p, signs, 23) == NIMS_OK);
    CHECK(p.m_target == 26852);
    CHECK(p.expressed + p.beta == 26852);
    CHECK(p.in_band == 1);
    CHECK(fabs(p.achieved_voltage - 1.0) <= 1e-12);
    CHECK(fabs(p.adjusted_frequency - 1.0 * nims_josephson_constant() / (double)p.expressed) <= 1e-3);

    double vmax = 0;
    CHECK(nims_max_voltage(seq, 18.01e9, 0, &vmax) == NIMS_OK);
    CHECK(fabs(vmax - 3.4299) <= 1e-4);
    CHECK(nims_plan(seq, 3.5, 18.01e9, 0, 0, 0, &p, NULL, 0) == NIMS_ERR_OUT_OF_RANGE);

    char *text = NULL;
    CHECK(nims_device_serialize(dev, &text) == NIMS_OK);
    nims_device *again = NULL;
    CHECK(nims_device_parse(text, &again) == NIMS_OK);
    char *text2 = NULL;
    CHECK(nims_device_serialize(again, &text2) == NIMS_OK);
    CHECK(strcmp(text, text2) == 0);
    nims_string_free(text);
    nims_string_free(text2);
    nims_device_free(again);

    int margin_pass = 0;
    char *report = NULL;
    CHECK(nims_render_device_report(dev, 1.0, NULL, 0, 0, NIMS_FORMAT_TEXT, &margin_pass, &report) == NIMS_OK);
    CHECK(margin_pass == 1);
    CHECK(report && strstr(report, "UNRECONCILED") != NULL);
    nims_string_free(report);

    nims_sequence_free(seq);
    nims_device_free(dev);
    CHECK(nims_device_load(data_path("missing.csv"), &dev) == NIMS_ERR_IO);
}

static void test_defects_and_design(void) {
    nims_sequence *nominal = NULL;
    CHECK(nims_sequence_resolve(data_path("table5_nominal.json"), &nominal) == NIMS_OK);
    nims_device *dev = NULL;
    CHECK(nims_device_load(data_path("table5.csv"), &dev) == NIMS_OK);
    nims_defects *d = NULL;
    CHECK(nims_infer_defects(dev, nominal, &d) == NIMS_OK);
    CHECK(nims_defects_get(d, 8) == 1 && nims_defects_get(d, 14) == 1 && nims_defects_get(d, 22) == 30);
    CHECK(nims_defects_get(d, 0) == 0);

    nims_sequence *defective = NULL;
    int capable = 0;
    CHECK(nims_apply_defects(nominal, d, &defective, &capable) == NIMS_OK && capable == 1);
    CHECK(nims_sequence_size(defective) == 23);
    nims_sequence_free(defective);
    nims_defects_free(d);
    nims_device_free(dev);
    nims_sequence_free(nominal);

    CHECK(nims_defects_parse("{\"defects\": {\"x\": 1}}", &d) == NIMS_ERR_PARSE);

    nims_design_spec *spec = NULL;
    CHECK(nims_design_spec_create(1, 3, 6, &spec) == NIMS_OK);
    nims_sequence *designed = NULL;
    CHECK(nims_design(spec, &designed) == NIMS_OK);
    int64_t bits[3] = {0};
    CHECK(nims_sequence_bits(designed, bits, 3) == NIMS_OK);
    CHECK(bits[0] == 1 && bits[1] == 2 && bits[2] == 3);
    nims_sequence_free(designed);
    CHECK(nims_design_spec_set_max_ratio(spec, 7, 2) == NIMS_OK);
    CHECK(nims_design(spec, &designed) != NIMS_OK);
    nims_design_spec_free(spec);
}

static void test_rendering(void) {
    nims_sequence *seq = NULL;
    CHECK(nims_sequence_parse("1,3,8", &seq) == NIMS_OK);
    char *out = NULL;
    CHECK(nims_render_represent(seq, 7, NIMS_FORMAT_JSON, &out) == NIMS_OK);
    CHECK(out && strstr(out, "\"m\": 7") && strstr(out, "\"beta\": 0") && strstr(out, "\"signs\""));
    nims_string_free(out);
    CHECK(nims_render_represent(seq, 7, NIMS_FORMAT_CSV, &out) == NIMS_OK);
    CHECK(out && strstr(out, "-1") != NULL);
    nims_string_free(out);

    int complete = 0;
    CHECK(nims_render_oracle(seq, 0, 0, NIMS_FORMAT_TEXT, &complete, &out) == NIMS_OK && complete == 1);
    nims_string_free(out);

    size_t count = 0;
    CHECK(nims_render_enumeration(1, 3, 9, NIMS_FORMAT_CSV, &count, &out) == NIMS_OK && count == 9);
    nims_string_free(out);

    CHECK(nims_render_error("ParseError", "bad", NIMS_FORMAT_JSON, &out) == NIMS_OK);
    nims_string_free(out);
    nims_sequence_free(seq);

    CHECK(strcmp(nims_status_name(NIMS_ERR_OUT_OF_RANGE), "OutOfRange") == 0);
    CHECK(strcmp(nims_version(), "1.0.0") == 0);
    CHECK(nims_default_oracle_cap() == 10000000);
}

int main(void) {
    test_sequences();
    test_device_and_plan();
    test_defects_and_design();
    test_rendering();
    if (failures) {
        fprintf(stderr, "%d C API check(s) failed\n", failures);
        return 1;
    }
    printf("C API checks passed\n");
    return 0;
}
