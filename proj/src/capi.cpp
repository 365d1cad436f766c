#include "nims/nims.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "nims/array_designer.hpp"
#include "nims/bias_planner.hpp"
#include "nims/device_data.hpp"
#include "nims/error.hpp"
#include "nims/fault_tolerance.hpp"
#include "nims/format.hpp"
#include "nims/io.hpp"
#include "nims/report.hpp"
#include "nims/representation.hpp"
#include "nims/sequence.hpp"

struct nims_sequence {
    nims::Sequence value;
};
struct nims_defects {
    nims::DefectMap value;
};
struct nims_device {
    nims::DeviceRecord value;
};
struct nims_design_spec {
    nims::DesignSpec value;
};

namespace {

thread_local std::string last_error;

nims_status status_of(nims::ErrorCode code) noexcept {
    using nims::ErrorCode;
    switch (code) {
    case ErrorCode::InvalidInput: return NIMS_ERR_INVALID_INPUT;
    case ErrorCode::InvalidSequence: return NIMS_ERR_INVALID_SEQUENCE;
    case ErrorCode::RangeError: return NIMS_ERR_RANGE;
    case ErrorCode::OutOfRange: return NIMS_ERR_OUT_OF_RANGE;
    case ErrorCode::Infeasible: return NIMS_ERR_INFEASIBLE;
    case ErrorCode::DegenerateTarget: return NIMS_ERR_DEGENERATE_TARGET;
    case ErrorCode::ParseError: return NIMS_ERR_PARSE;
    case ErrorCode::IoError: return NIMS_ERR_IO;
    }
    return NIMS_ERR_INTERNAL;
}

template <class F> nims_status guarded(F &&body) noexcept {
    try {
        body();
        return NIMS_OK;
    } catch (const nims::Error &e) {
        last_error = e.what();
        return status_of(e.code());
    } catch (const std::bad_alloc &) {
        last_error = "out of memory";
    } catch (const std::exception &e) {
        last_error = e.what();
    } catch (...) {
        last_error = "unknown failure";
    }
    return NIMS_ERR_INTERNAL;
}

nims_status null_argument(const char *what) noexcept {
    last_error = std::string("null argument: ") + what;
    return NIMS_ERR_NULL_ARGUMENT;
}

#define NIMS_REQUIRE(ptr)                                                                                        \
    do {                                                                                                         \
        if ((ptr) == nullptr) {                                                                                  \
            return null_argument(#ptr);                                                                          \
        }                                                                                                        \
    } while (0)

char *duplicate(const std::string &s) {
    auto *p = static_cast<char *>(std::malloc(s.size() + 1));
    if (!p) {
        throw std::bad_alloc();
    }
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

nims::Format format_of(nims_format fmt) {
    switch (fmt) {
    case NIMS_FORMAT_TEXT: return nims::Format::Text;
    case NIMS_FORMAT_JSON: return nims::Format::Json;
    case NIMS_FORMAT_CSV: return nims::Format::Csv;
    }
    nims::fail(nims::ErrorCode::InvalidInput, "unknown output format");
}

nims::OracleOptions oracle(int64_t cap) {
    nims::OracleOptions opts;
    if (cap > 0) {
        opts.cap = cap;
    }
    return opts;
}

nims::PhysicalConstants constants(double kj) {
    nims::PhysicalConstants k;
    if (kj > 0.0) {
        k.josephson_hz_per_volt = kj;
    }
    return k;
}

std::optional<nims::FrequencyBand> band_of(double low, double high) {
    if (low == 0.0 && high == 0.0) {
        return std::nullopt;
    }
    if (!(low <= high)) {
        nims::fail(nims::ErrorCode::InvalidInput, "band low edge exceeds high edge");
    }
    return nims::FrequencyBand{low, high};
}

void check_capacity(size_t capacity, size_t needed) {
    if (capacity < needed) {
        nims::fail(nims::ErrorCode::InvalidInput,
                   "output buffer holds " + std::to_string(capacity) + ", need " + std::to_string(needed));
    }
}

template <class T> void put(T *dst, T value) {
    if (dst) {
        *dst = value;
    }
}

} // namespace

extern "C" {

const char *nims_version(void) { return "1.0.0"; }

const char *nims_status_name(nims_status status) {
    switch (status) {
    case NIMS_OK: return "OK";
    case NIMS_ERR_INVALID_INPUT: return "InvalidInput";
    case NIMS_ERR_INVALID_SEQUENCE: return "InvalidSequence";
    case NIMS_ERR_RANGE: return "RangeError";
    case NIMS_ERR_OUT_OF_RANGE: return "OutOfRange";
    case NIMS_ERR_INFEASIBLE: return "Infeasible";
    case NIMS_ERR_DEGENERATE_TARGET: return "DegenerateTarget";
    case NIMS_ERR_PARSE: return "ParseError";
    case NIMS_ERR_IO: return "IoError";
    case NIMS_ERR_NULL_ARGUMENT: return "NullArgument";
    case NIMS_ERR_INTERNAL: return "Internal";
    }
    return "Unknown";
}

const char *nims_last_error(void) { return last_error.c_str(); }

void nims_string_free(char *str) { std::free(str); }

double nims_josephson_constant(void) { return nims::PhysicalConstants{}.josephson_hz_per_volt; }

int64_t nims_default_oracle_cap(void) { return nims::OracleOptions::kDefaultCap; }

nims_status nims_sequence_create(const int64_t *bits, size_t count, nims_sequence **out) {
    NIMS_REQUIRE(out);
    if (count > 0) {
        NIMS_REQUIRE(bits);
    }
    return guarded([&] { *out = new nims_sequence{nims::Sequence(std::vector<int64_t>(bits, bits + count))}; });
}

nims_status nims_sequence_parse(const char *text, nims_sequence **out) {
    NIMS_REQUIRE(text);
    NIMS_REQUIRE(out);
    return guarded([&] { *out = new nims_sequence{nims::io::parse_sequence(text)}; });
}

nims_status nims_sequence_resolve(const char *arg, nims_sequence **out) {
    NIMS_REQUIRE(arg);
    NIMS_REQUIRE(out);
    return guarded([&] { *out = new nims_sequence{nims::io::resolve_sequence(arg)}; });
}

nims_status nims_sequence_standard(nims_standard_kind kind, size_t count, nims_sequence **out) {
    NIMS_REQUIRE(out);
    return guarded([&] {
        const auto k = kind == NIMS_STANDARD_BINARY ? nims::StandardKind::Binary : nims::StandardKind::Ternary;
        *out = new nims_sequence{nims::make_standard(k, count)};
    });
}

void nims_sequence_free(nims_sequence *seq) { delete seq; }

size_t nims_sequence_size(const nims_sequence *seq) { return seq ? seq->value.size() : 0; }

nims_status nims_sequence_bits(const nims_sequence *seq, int64_t *out, size_t capacity) {
    NIMS_REQUIRE(seq);
    NIMS_REQUIRE(out);
    return guarded([&] {
        check_capacity(capacity, seq->value.size());
        std::copy(seq->value.bits().begin(), seq->value.bits().end(), out);
    });
}

nims_status nims_validate(const nims_sequence *seq, int *strict_valid, int *complete_capable) {
    NIMS_REQUIRE(seq);
    return guarded([&] {
        const auto r = nims::validate(seq->value);
        put(strict_valid, r.strict_valid ? 1 : 0);
        put(complete_capable, r.complete_capable ? 1 : 0);
    });
}

nims_status nims_prefix_sums(const nims_sequence *seq, int64_t *totals, int64_t *offset_totals, size_t capacity) {
    NIMS_REQUIRE(seq);
    return guarded([&] {
        const auto sums = nims::prefix_sums(seq->value);
        check_capacity(capacity, sums.totals.size());
        if (totals) {
            std::copy(sums.totals.begin(), sums.totals.end(), totals);
        }
        if (offset_totals) {
            std::copy(sums.offset_totals.begin(), sums.offset_totals.end(), offset_totals);
        }
    });
}

nims_status nims_is_complete(const nims_sequence *seq, int64_t cap, int *complete) {
    NIMS_REQUIRE(seq);
    NIMS_REQUIRE(complete);
    return guarded([&] { *complete = nims::is_complete(seq->value, oracle(cap)) ? 1 : 0; });
}

nims_status nims_represent(const nims_sequence *seq, int64_t m, int *signs, size_t capacity, int64_t *beta) {
    NIMS_REQUIRE(seq);
    NIMS_REQUIRE(signs);
    return guarded([&] {
        check_capacity(capacity, seq->value.size());
        const auto rep = nims::represent(m, seq->value);
        std::copy(rep.signs.begin(), rep.signs.end(), signs);
        put(beta, rep.beta);
    });
}

nims_status nims_evaluate(const nims_sequence *seq, const int *signs, size_t count, int64_t beta, int64_t *m) {
    NIMS_REQUIRE(seq);
    NIMS_REQUIRE(m);
    if (count > 0) {
        NIMS_REQUIRE(signs);
    }
    return guarded([&] {
        nims::Representation rep;
        rep.signs.assign(signs, signs + count);
        rep.beta = beta;
        *m = nims::evaluate(rep, seq->value);
    });
}

nims_status nims_tolerance(const nims_sequence *seq, int64_t *tolerance, size_t capacity) {
    NIMS_REQUIRE(seq);
    NIMS_REQUIRE(tolerance);
    return guarded([&] {
        check_capacity(capacity, seq->value.size());
        const auto report = nims::tolerance_report(seq->value);
        for (const auto &b : report.bits) {
            tolerance[b.bit] = b.tolerance.value_or(-1);
        }
    });
}

nims_status nims_plan(const nims_sequence *seq, double volts, double hz, double band_low, double band_high,
                      double kj, nims_plan_result *out, int *signs, size_t capacity) {
    NIMS_REQUIRE(seq);
    NIMS_REQUIRE(out);
    return guarded([&] {
        if (signs) {
            check_capacity(capacity, seq->value.size());
        }
        const auto p = nims::plan(volts, hz, seq->value, band_of(band_low, band_high), constants(kj));
        *out = nims_plan_result{p.target_voltage,       p.base_frequency,
                                p.m_target,             p.representation.expressed,
                                p.representation.beta,  p.adjusted_frequency,
                                p.achieved_voltage,     p.frequency_shift,
                                p.in_band ? 1 : 0};
        if (signs) {
            std::copy(p.representation.signs.begin(), p.representation.signs.end(), signs);
        }
    });
}

nims_status nims_max_voltage(const nims_sequence *seq, double hz, double kj, double *volts) {
    NIMS_REQUIRE(seq);
    NIMS_REQUIRE(volts);
    return guarded([&] { *volts = nims::max_voltage(seq->value, hz, constants(kj)); });
}

nims_status nims_resolution(const nims_sequence *seq, double hz, double kj, double *volts) {
    NIMS_REQUIRE(seq);
    NIMS_REQUIRE(volts);
    return guarded([&] { *volts = nims::resolution(seq->value, hz, constants(kj)); });
}

nims_status nims_defects_create(nims_defects **out) {
    NIMS_REQUIRE(out);
    return guarded([&] { *out = new nims_defects{}; });
}

nims_status nims_defects_parse(const char *json, nims_defects **out) {
    NIMS_REQUIRE(json);
    NIMS_REQUIRE(out);
    return guarded([&] { *out = new nims_defects{nims::io::parse_defect_map(json)}; });
}

nims_status nims_defects_load(const char *path, nims_defects **out) {
    NIMS_REQUIRE(path);
    NIMS_REQUIRE(out);
    return guarded([&] { *out = new nims_defects{nims::io::parse_defect_map(nims::io::read_file(path))}; });
}

nims_status nims_defects_set(nims_defects *defects, size_t bit, int64_t missing) {
    NIMS_REQUIRE(defects);
    return guarded([&] { defects->value.set(bit, missing); });
}

int64_t nims_defects_get(const nims_defects *defects, size_t bit) { return defects ? defects->value.at(bit) : 0; }

void nims_defects_free(nims_defects *defects) { delete defects; }

nims_status nims_apply_defects(const nims_sequence *seq, const nims_defects *defects, nims_sequence **defective,
                               int *complete_capable) {
    NIMS_REQUIRE(seq);
    NIMS_REQUIRE(defects);
    return guarded([&] {
        auto outcome = nims::apply_defects(seq->value, defects->value);
        put(complete_capable, outcome.validation.complete_capable ? 1 : 0);
        if (defective) {
            *defective = new nims_sequence{std::move(outcome.defective)};
        }
    });
}

nims_status nims_design_spec_create(int64_t a0, int64_t msb_size, int64_t target_total, nims_design_spec **out) {
    NIMS_REQUIRE(out);
    return guarded([&] {
        nims::DesignSpec spec;
        spec.a0 = a0;
        spec.msb_size = msb_size;
        spec.target_total = target_total;
        *out = new nims_design_spec{spec};
    });
}

nims_status nims_design_spec_parse(const char *json, nims_design_spec **out) {
    NIMS_REQUIRE(json);
    NIMS_REQUIRE(out);
    return guarded([&] { *out = new nims_design_spec{nims::io::parse_design_spec(json)}; });
}

nims_status nims_design_spec_load(const char *path, nims_design_spec **out) {
    NIMS_REQUIRE(path);
    NIMS_REQUIRE(out);
    return guarded([&] { *out = new nims_design_spec{nims::io::parse_design_spec(nims::io::read_file(path))}; });
}

nims_status nims_design_spec_add_tolerance(nims_design_spec *spec, int64_t at_least, int64_t tolerance) {
    NIMS_REQUIRE(spec);
    return guarded([&] { spec->value.min_tolerance.push_back({at_least, tolerance}); });
}

nims_status nims_design_spec_set_max_ratio(nims_design_spec *spec, int64_t num, int64_t den) {
    NIMS_REQUIRE(spec);
    return guarded([&] { spec->value.max_ratio = nims::Rational(num, den); });
}

void nims_design_spec_free(nims_design_spec *spec) { delete spec; }

nims_status nims_design(const nims_design_spec *spec, nims_sequence **out) {
    NIMS_REQUIRE(spec);
    NIMS_REQUIRE(out);
    return guarded([&] { *out = new nims_sequence{nims::design(spec->value).sequence}; });
}

nims_status nims_device_parse(const char *text, nims_device **out) {
    NIMS_REQUIRE(text);
    NIMS_REQUIRE(out);
    return guarded([&] { *out = new nims_device{nims::parse_device(text)}; });
}

nims_status nims_device_load(const char *path, nims_device **out) {
    NIMS_REQUIRE(path);
    NIMS_REQUIRE(out);
    return guarded([&] { *out = new nims_device{nims::load_device(path)}; });
}

void nims_device_free(nims_device *device) { delete device; }

nims_status nims_device_sequence(const nims_device *device, nims_sequence **out) {
    NIMS_REQUIRE(device);
    NIMS_REQUIRE(out);
    return guarded([&] { *out = new nims_sequence{device->value.junctions()}; });
}

nims_status nims_device_frequency(const nims_device *device, double *hz) {
    NIMS_REQUIRE(device);
    NIMS_REQUIRE(hz);
    return guarded([&] {
        if (!device->value.metadata.frequency_hz) {
            nims::fail(nims::ErrorCode::InvalidInput, "device record has no frequency_hz");
        }
        *hz = *device->value.metadata.frequency_hz;
    });
}

nims_status nims_device_serialize(const nims_device *device, char **out) {
    NIMS_REQUIRE(device);
    NIMS_REQUIRE(out);
    return guarded([&] { *out = duplicate(nims::serialize_device(device->value)); });
}

nims_status nims_infer_defects(const nims_device *device, const nims_sequence *nominal, nims_defects **out) {
    NIMS_REQUIRE(device);
    NIMS_REQUIRE(nominal);
    NIMS_REQUIRE(out);
    return guarded([&] { *out = new nims_defects{nims::infer_defects(device->value, nominal->value)}; });
}

nims_status nims_render_validation(const nims_sequence *seq, nims_format fmt, char **out) {
    NIMS_REQUIRE(seq);
    NIMS_REQUIRE(out);
    return guarded([&] {
        *out = duplicate(nims::render_validation(seq->value, nims::validate(seq->value), format_of(fmt)));
    });
}

nims_status nims_render_represent(const nims_sequence *seq, int64_t m, nims_format fmt, char **out) {
    NIMS_REQUIRE(seq);
    NIMS_REQUIRE(out);
    return guarded(
        [&] { *out = duplicate(nims::render_representation(nims::represent(m, seq->value), format_of(fmt))); });
}

nims_status nims_render_range_check(const nims_sequence *seq, int64_t cap, nims_format fmt, int *all_passed,
                                    char **out) {
    NIMS_REQUIRE(seq);
    NIMS_REQUIRE(out);
    return guarded([&] {
        const auto report = nims::represent_range_check(seq->value, oracle(cap));
        put(all_passed, report.ok() ? 1 : 0);
        *out = duplicate(nims::render_range_check(seq->value, report, format_of(fmt)));
    });
}

nims_status nims_render_tolerance(const nims_sequence *seq, nims_format fmt, char **out) {
    NIMS_REQUIRE(seq);
    NIMS_REQUIRE(out);
    return guarded(
        [&] { *out = duplicate(nims::render_tolerance(nims::tolerance_report(seq->value), format_of(fmt))); });
}

nims_status nims_render_scan(const nims_sequence *seq, int64_t budget, int64_t cap, nims_format fmt,
                             int *consistent, char **out) {
    NIMS_REQUIRE(seq);
    NIMS_REQUIRE(out);
    return guarded([&] {
        const auto report = nims::worst_case_scan(seq->value, budget, oracle(cap));
        put(consistent, report.consistent() ? 1 : 0);
        *out = duplicate(nims::render_scan(report, format_of(fmt)));
    });
}

nims_status nims_render_defects(const nims_sequence *nominal, const nims_defects *defects, int64_t cap,
                                nims_format fmt, int *complete_capable, char **out) {
    NIMS_REQUIRE(nominal);
    NIMS_REQUIRE(defects);
    NIMS_REQUIRE(out);
    return guarded([&] {
        const auto outcome = nims::apply_defects(nominal->value, defects->value);
        std::optional<bool> complete;
        const auto opts = oracle(cap);
        const auto total = nims::prefix_sums(outcome.defective).totals.back();
        if (total <= opts.cap && outcome.defective.lsb() >= 1) {
            complete = nims::is_complete(outcome.defective, opts);
        }
        put(complete_capable, outcome.validation.complete_capable ? 1 : 0);
        *out = duplicate(nims::render_defects(nominal->value, defects->value, outcome, complete, format_of(fmt)));
    });
}

nims_status nims_render_design(const nims_design_spec *spec, nims_format fmt, char **out) {
    NIMS_REQUIRE(spec);
    NIMS_REQUIRE(out);
    return guarded([&] { *out = duplicate(nims::render_design(nims::design(spec->value), format_of(fmt))); });
}

nims_status nims_render_plan(const nims_sequence *seq, double volts, double hz, double band_low, double band_high,
                             double kj, nims_format fmt, int *in_band, char **out) {
    NIMS_REQUIRE(seq);
    NIMS_REQUIRE(out);
    return guarded([&] {
        const auto p = nims::plan(volts, hz, seq->value, band_of(band_low, band_high), constants(kj));
        put(in_band, p.in_band ? 1 : 0);
        *out = duplicate(nims::render_plan(p, format_of(fmt)));
    });
}

nims_status nims_render_compare(const nims_sequence *const *candidates, size_t count, size_t rows,
                                int64_t msb_size, nims_format fmt, char **out) {
    NIMS_REQUIRE(out);
    if (count > 0) {
        NIMS_REQUIRE(candidates);
    }
    return guarded([&] {
        std::vector<nims::Sequence> seqs;
        seqs.reserve(count);
        for (size_t i = 0; i < count; ++i) {
            if (!candidates[i]) {
                nims::fail(nims::ErrorCode::InvalidInput, "null candidate " + std::to_string(i));
            }
            seqs.push_back(candidates[i]->value);
        }
        *out = duplicate(nims::render_comparison(nims::compare_logics(rows, msb_size, seqs), format_of(fmt)));
    });
}

nims_status nims_render_device_report(const nims_device *device, double min_margin_ma, const nims_sequence *nominal,
                                      double kj, int64_t cap, nims_format fmt, int *margin_pass, char **out) {
    NIMS_REQUIRE(device);
    NIMS_REQUIRE(out);
    return guarded([&] {
        std::optional<nims::Sequence> nom;
        if (nominal) {
            nom = nominal->value;
        }
        const auto summary = nims::summarize_device(device->value, min_margin_ma, nom, constants(kj), oracle(cap));
        put(margin_pass, summary.margin.pass() ? 1 : 0);
        *out = duplicate(nims::render_device_summary(summary, format_of(fmt)));
    });
}

nims_status nims_render_enumeration(int64_t a0, size_t depth, int64_t max_bit, nims_format fmt, size_t *count,
                                    char **out) {
    NIMS_REQUIRE(out);
    return guarded([&] {
        const auto seqs = nims::enumerate_nims(a0, depth, max_bit);
        put(count, seqs.size());
        *out = duplicate(nims::render_enumeration(seqs, format_of(fmt)));
    });
}

nims_status nims_render_oracle(const nims_sequence *seq, int a0_offset, int64_t cap, nims_format fmt, int *complete,
                               char **out) {
    NIMS_REQUIRE(seq);
    NIMS_REQUIRE(out);
    return guarded([&] {
        const auto reach = nims::reachable_sums(seq->value, a0_offset != 0, oracle(cap));
        const auto total = nims::prefix_sums(seq->value).totals.back();
        put(complete, reach.covers(-total, total) ? 1 : 0);
        *out = duplicate(nims::render_oracle(seq->value, reach, a0_offset != 0, format_of(fmt)));
    });
}

nims_status nims_render_error(const char *code, const char *message, nims_format fmt, char **out) {
    NIMS_REQUIRE(code);
    NIMS_REQUIRE(message);
    NIMS_REQUIRE(out);
    return guarded([&] { *out = duplicate(nims::render_error(code, message, format_of(fmt))); });
}

} // extern "C"
