// nims: command-line front end over the libnims C API.
#include <CLI11.hpp>

#include <cerrno>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nims/nims.h"

namespace {

enum Exit { kOk = 0, kFailed = 1, kRange = 2, kUsage = 3 };

int exit_for(nims_status s) {
    switch (s) {
    case NIMS_OK: return kOk;
    case NIMS_ERR_INVALID_INPUT:
    case NIMS_ERR_INVALID_SEQUENCE:
    case NIMS_ERR_NULL_ARGUMENT: return kFailed;
    case NIMS_ERR_RANGE:
    case NIMS_ERR_OUT_OF_RANGE:
    case NIMS_ERR_INFEASIBLE:
    case NIMS_ERR_DEGENERATE_TARGET: return kRange;
    case NIMS_ERR_PARSE:
    case NIMS_ERR_IO:
    case NIMS_ERR_INTERNAL: return kUsage;
    }
    return kUsage;
}

struct Failure {
    nims_status status;
    std::string code;
    std::string message;
};

void check(nims_status s) {
    if (s != NIMS_OK) {
        throw Failure{s, nims_status_name(s), nims_last_error()};
    }
}

[[noreturn]] void usage_error(const std::string &message) {
    throw Failure{NIMS_ERR_PARSE, "UsageError", message};
}

template <class T, void (*Free)(T *)> struct Deleter {
    void operator()(T *p) const noexcept { Free(p); }
};
using Seq = std::unique_ptr<nims_sequence, Deleter<nims_sequence, nims_sequence_free>>;
using Defects = std::unique_ptr<nims_defects, Deleter<nims_defects, nims_defects_free>>;
using Device = std::unique_ptr<nims_device, Deleter<nims_device, nims_device_free>>;
using Spec = std::unique_ptr<nims_design_spec, Deleter<nims_design_spec, nims_design_spec_free>>;

Seq resolve(const std::string &arg) {
    nims_sequence *s = nullptr;
    check(nims_sequence_resolve(arg.c_str(), &s));
    return Seq(s);
}

Device load_device(const std::string &path) {
    nims_device *d = nullptr;
    check(nims_device_load(path.c_str(), &d));
    return Device(d);
}

Seq device_sequence(const nims_device *d) {
    nims_sequence *s = nullptr;
    check(nims_device_sequence(d, &s));
    return Seq(s);
}

// Takes ownership of a library string and writes it to stdout.
void emit(char *doc) {
    std::fputs(doc, stdout);
    nims_string_free(doc);
}

int64_t oracle_cap() {
    const char *env = std::getenv("NIMS_ORACLE_CAP");
    if (!env || !*env) {
        return 0;
    }
    errno = 0;
    char *end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (errno != 0 || *end != '\0' || v <= 0) {
        usage_error(std::string("NIMS_ORACLE_CAP must be a positive integer, got '") + env + "'");
    }
    return v;
}

struct Options {
    std::string format = "text";
    std::string seq;
    std::string device;
    std::string defects;
    std::string spec;
    std::string nominal;
    std::vector<std::string> seqs;
    std::vector<std::string> tolerances;
    std::vector<double> band;
    std::string max_ratio;
    int64_t m = 0;
    int64_t scan = -1;
    int64_t a0 = 1;
    int64_t msb = 0;
    int64_t total = 0;
    std::optional<int64_t> max_bit;
    size_t depth = 0;
    size_t rows = 0;
    double volts = 0.0;
    std::optional<double> freq;
    double kj = 0.0;
    double min_margin = 1.0;
    bool all = false;
    bool offset = false;
};

nims_format format_of(const std::string &name) {
    if (name == "json") {
        return NIMS_FORMAT_JSON;
    }
    if (name == "csv") {
        return NIMS_FORMAT_CSV;
    }
    return NIMS_FORMAT_TEXT;
}

std::pair<int64_t, int64_t> parse_ratio(const std::string &text) {
    const auto slash = text.find('/');
    try {
        size_t used = 0;
        const int64_t num = std::stoll(text.substr(0, slash), &used);
        if (used != (slash == std::string::npos ? text.size() : slash)) {
            throw std::invalid_argument(text);
        }
        if (slash == std::string::npos) {
            return {num, 1};
        }
        const std::string rest = text.substr(slash + 1);
        const int64_t den = std::stoll(rest, &used);
        if (used != rest.size()) {
            throw std::invalid_argument(text);
        }
        return {num, den};
    } catch (const std::logic_error &) {
        usage_error("--max-ratio expects P or P/Q, got '" + text + "'");
    }
}

std::pair<int64_t, int64_t> parse_rule(const std::string &text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        usage_error("--tolerance expects AT_LEAST:TOLERANCE, got '" + text + "'");
    }
    try {
        return {std::stoll(text.substr(0, colon)), std::stoll(text.substr(colon + 1))};
    } catch (const std::logic_error &) {
        usage_error("--tolerance expects AT_LEAST:TOLERANCE, got '" + text + "'");
    }
}

Seq require_seq(const Options &o) {
    if (o.seq.empty()) {
        usage_error("--seq is required");
    }
    return resolve(o.seq);
}

int cmd_validate(const Options &o, nims_format fmt) {
    auto seq = require_seq(o);
    int strict = 0;
    check(nims_validate(seq.get(), &strict, nullptr));
    char *doc = nullptr;
    check(nims_render_validation(seq.get(), fmt, &doc));
    emit(doc);
    return strict ? kOk : kFailed;
}

int cmd_represent(const Options &o, nims_format fmt) {
    auto seq = require_seq(o);
    char *doc = nullptr;
    if (o.all) {
        int passed = 0;
        check(nims_render_range_check(seq.get(), oracle_cap(), fmt, &passed, &doc));
        emit(doc);
        return passed ? kOk : kFailed;
    }
    check(nims_render_represent(seq.get(), o.m, fmt, &doc));
    emit(doc);
    return kOk;
}

int cmd_tolerance(const Options &o, nims_format fmt) {
    auto seq = require_seq(o);
    char *doc = nullptr;
    if (o.scan >= 0) {
        int consistent = 0;
        check(nims_render_scan(seq.get(), o.scan, oracle_cap(), fmt, &consistent, &doc));
        emit(doc);
        return consistent ? kOk : kFailed;
    }
    check(nims_render_tolerance(seq.get(), fmt, &doc));
    emit(doc);
    return kOk;
}

int cmd_defects(const Options &o, nims_format fmt) {
    auto nominal = require_seq(o);
    Defects defects;
    nims_defects *d = nullptr;
    if (!o.defects.empty() && !o.device.empty()) {
        usage_error("--defects and --device are mutually exclusive");
    }
    if (!o.defects.empty()) {
        check(nims_defects_load(o.defects.c_str(), &d));
    } else if (!o.device.empty()) {
        auto dev = load_device(o.device);
        check(nims_infer_defects(dev.get(), nominal.get(), &d));
    } else {
        usage_error("one of --defects or --device is required");
    }
    defects.reset(d);
    int capable = 0;
    char *doc = nullptr;
    check(nims_render_defects(nominal.get(), defects.get(), oracle_cap(), fmt, &capable, &doc));
    emit(doc);
    return capable ? kOk : kFailed;
}

int cmd_design(const Options &o, nims_format fmt) {
    nims_design_spec *raw = nullptr;
    if (!o.spec.empty()) {
        check(nims_design_spec_load(o.spec.c_str(), &raw));
    } else {
        if (o.msb <= 0 || o.total <= 0) {
            usage_error("design needs --spec FILE or --msb and --total");
        }
        check(nims_design_spec_create(o.a0, o.msb, o.total, &raw));
    }
    Spec spec(raw);
    for (const auto &rule : o.tolerances) {
        const auto [at_least, tol] = parse_rule(rule);
        check(nims_design_spec_add_tolerance(spec.get(), at_least, tol));
    }
    if (!o.max_ratio.empty()) {
        const auto [num, den] = parse_ratio(o.max_ratio);
        check(nims_design_spec_set_max_ratio(spec.get(), num, den));
    }
    char *doc = nullptr;
    check(nims_render_design(spec.get(), fmt, &doc));
    emit(doc);
    return kOk;
}

int cmd_plan(const Options &o, nims_format fmt) {
    Seq seq;
    // An explicit --freq always wins, even when it is invalid.
    double freq = o.freq.value_or(0.0);
    if (!o.device.empty()) {
        if (!o.seq.empty()) {
            usage_error("--seq and --device are mutually exclusive");
        }
        auto dev = load_device(o.device);
        seq = device_sequence(dev.get());
        if (!o.freq && nims_device_frequency(dev.get(), &freq) != NIMS_OK) {
            freq = 18.01e9;
        }
    } else {
        seq = require_seq(o);
        if (!o.freq) {
            freq = 18.01e9;
        }
    }
    double lo = 0.0;
    double hi = 0.0;
    if (!o.band.empty()) {
        lo = o.band[0];
        hi = o.band[1];
    }
    int in_band = 0;
    char *doc = nullptr;
    check(nims_render_plan(seq.get(), o.volts, freq, lo, hi, o.kj, fmt, &in_band, &doc));
    emit(doc);
    return in_band ? kOk : kRange;
}

int cmd_compare(const Options &o, nims_format fmt) {
    if (o.seqs.empty()) {
        usage_error("compare needs at least one --seq");
    }
    std::vector<Seq> owned;
    std::vector<const nims_sequence *> handles;
    for (const auto &s : o.seqs) {
        owned.push_back(resolve(s));
        handles.push_back(owned.back().get());
    }
    char *doc = nullptr;
    check(nims_render_compare(handles.data(), handles.size(), o.rows, o.msb, fmt, &doc));
    emit(doc);
    return kOk;
}

int cmd_report(const Options &o, nims_format fmt) {
    if (o.device.empty()) {
        usage_error("--device is required");
    }
    auto dev = load_device(o.device);
    Seq nominal;
    if (!o.nominal.empty()) {
        nominal = resolve(o.nominal);
    }
    int pass = 0;
    char *doc = nullptr;
    check(nims_render_device_report(dev.get(), o.min_margin, nominal.get(), o.kj, oracle_cap(), fmt, &pass, &doc));
    emit(doc);
    return pass ? kOk : kFailed;
}

int cmd_enumerate(const Options &o, nims_format fmt) {
    size_t count = 0;
    char *doc = nullptr;
    // Without --max-bit the upper chain alone bounds the top bit: a0 3^(depth-1).
    int64_t max_bit = o.a0;
    for (size_t n = 1; !o.max_bit && n < o.depth && max_bit <= INT64_MAX / 3; ++n) {
        max_bit *= 3;
    }
    check(nims_render_enumeration(o.a0, o.depth, o.max_bit.value_or(max_bit), fmt, &count, &doc));
    emit(doc);
    return kOk;
}

int cmd_oracle(const Options &o, nims_format fmt) {
    auto seq = require_seq(o);
    int complete = 0;
    char *doc = nullptr;
    check(nims_render_oracle(seq.get(), o.offset ? 1 : 0, oracle_cap(), fmt, &complete, &doc));
    emit(doc);
    return complete ? kOk : kFailed;
}

void add_format(CLI::App *sub, Options &o) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
}

} // namespace

int main(int argc, char **argv) {
    Options o;
    CLI::App app{"Non-integer-multiple sequence tools for programmable Josephson junction arrays", "nims"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(nims_version()));

    std::map<CLI::App *, int (*)(const Options &, nims_format)> handlers;
    const auto sub = [&](const char *name, const char *help, int (*fn)(const Options &, nims_format)) {
        auto *s = app.add_subcommand(name, help);
        add_format(s, o);
        handlers[s] = fn;
        return s;
    };
    const char *seq_help = "Bits inline (1,3,8), a JSON file, binary:N or ternary:N";

    auto *validate = sub("validate", "Check the NIMS constraints", cmd_validate);
    validate->add_option("--seq", o.seq, seq_help)->required();

    auto *represent = sub("represent", "Signed-digit representation of m", cmd_represent);
    represent->add_option("--seq", o.seq, seq_help)->required();
    auto *m_opt = represent->add_option("--m", o.m, "Integer to represent");
    auto *all_opt = represent->add_flag("--all", o.all, "Check every m in [-A_N, A_N]");
    m_opt->excludes(all_opt);

    auto *tolerance = sub("tolerance", "Per-bit missing-junction tolerance", cmd_tolerance);
    tolerance->add_option("--seq", o.seq, seq_help)->required();
    tolerance->add_option("--scan", o.scan, "Worst-case defect scan with this budget per bit")
        ->check(CLI::NonNegativeNumber);

    auto *defects = sub("defects", "Apply a defect map and re-check capability", cmd_defects);
    defects->add_option("--seq", o.seq, "Nominal sequence")->required();
    defects->add_option("--defects", o.defects, "Defect map JSON file");
    defects->add_option("--device", o.device, "Infer defects from a measured device record");

    auto *design = sub("design", "Design an array from constraints", cmd_design);
    design->add_option("--spec", o.spec, "Design spec JSON file");
    design->add_option("--a0", o.a0, "Smallest bit")->capture_default_str();
    design->add_option("--msb", o.msb, "MSB bank size");
    design->add_option("--total", o.total, "Target junction total");
    design->add_option("--tolerance", o.tolerances, "AT_LEAST:TOLERANCE rule (repeatable)");
    design->add_option("--max-ratio", o.max_ratio, "Maximum ratio between adjacent bits (P or P/Q)");

    auto *plan = sub("plan", "Bias plan for a target voltage", cmd_plan);
    plan->add_option("--seq", o.seq, seq_help);
    plan->add_option("--device", o.device, "Device record CSV");
    plan->add_option("--volts", o.volts, "Target voltage")->required();
    plan->add_option("--freq", o.freq, "Base frequency in Hz (default: device, else 18.01e9)");
    plan->add_option("--band", o.band, "Allowed frequency band LOW,HIGH in Hz")->expected(2)->delimiter(',');
    plan->add_option("--kj", o.kj, "Josephson constant in Hz/V (default 2e/h)");

    auto *compare = sub("compare", "Compare candidate logics", cmd_compare);
    compare->add_option("--seq", o.seqs, "Candidate sequence (repeatable)")->required();
    compare->add_option("--rows", o.rows, "Rows per candidate (pad with MSB banks)");
    compare->add_option("--msb", o.msb, "MSB bank size")->required();

    auto *report = sub("report", "Device record summary", cmd_report);
    report->add_option("--device", o.device, "Device record CSV")->required();
    report->add_option("--min-margin", o.min_margin, "Minimum step width in mA")->capture_default_str();
    report->add_option("--nominal", o.nominal, "Nominal sequence for defect inference");
    report->add_option("--kj", o.kj, "Josephson constant in Hz/V (default 2e/h)");

    auto *enumerate = sub("enumerate", "List strictly valid sequences", cmd_enumerate);
    enumerate->add_option("--a0", o.a0, "Smallest bit")->capture_default_str();
    enumerate->add_option("--depth", o.depth, "Number of bits")->required();
    enumerate->add_option("--max-bit", o.max_bit, "Largest allowed bit (default a0 3^(depth-1))");

    auto *oracle = sub("oracle", "Exact reachable-sum oracle", cmd_oracle);
    oracle->add_option("--seq", o.seq, seq_help)->required();
    oracle->add_flag("--offset", o.offset, "Widen each sum by the LSB residual (a0 - 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return kUsage;
    }

    const nims_format fmt = format_of(o.format);
    auto *active = app.get_subcommands().front();
    try {
        return handlers.at(active)(o, fmt);
    } catch (const Failure &f) {
        std::cerr << "nims " << active->get_name() << ": " << f.code << ": " << f.message << "\n";
        char *doc = nullptr;
        if (nims_render_error(f.code.c_str(), f.message.c_str(), fmt, &doc) == NIMS_OK) {
            emit(doc);
        }
        return f.code == "UsageError" ? kUsage : exit_for(f.status);
    }
}
