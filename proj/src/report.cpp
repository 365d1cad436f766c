#include "nims/report.hpp"

#include <algorithm>
#include <cmath>

namespace nims {

namespace {

RatingCheck compare(std::string quantity, double rated, double computed) {
    const bool ok = computed != 0.0 && std::fabs(rated - computed) <= 0.01 * std::fabs(computed);
    return {std::move(quantity), rated, computed, ok};
}

} // namespace

DeviceSummary summarize_device(const DeviceRecord &rec, double min_margin_ma, const std::optional<Sequence> &nominal,
                               const PhysicalConstants &k, OracleOptions opts) {
    DeviceSummary s;
    const auto seq = rec.junctions();
    s.total_junctions = rec.total_junctions();
    s.margin = margin_report(rec, min_margin_ma);
    s.lint = plausibility_lint(rec);

    const auto validation = validate(seq);
    s.complete_capable = validation.complete_capable;
    if (seq.lsb() >= 1 && std::all_of(seq.bits().begin(), seq.bits().end(), [](auto a) { return a >= 1; })) {
        s.tolerance = tolerance_report(seq);
    }
    if (s.total_junctions <= opts.cap && seq.lsb() >= 1) {
        s.oracle_complete = is_complete(seq, opts);
    }

    s.frequency_hz = rec.metadata.frequency_hz;
    if (s.frequency_hz && *s.frequency_hz >= 0.0) {
        s.max_voltage_v = max_voltage(seq, *s.frequency_hz, k);
        s.resolution_v = resolution(seq, *s.frequency_hz, k);
        s.fine_resolution_v = *s.frequency_hz / k.josephson_hz_per_volt;
        if (rec.metadata.rated_max_voltage_v) {
            s.ratings.push_back(compare("max_voltage_v", *rec.metadata.rated_max_voltage_v, *s.max_voltage_v));
        }
        if (rec.metadata.rated_min_voltage_v) {
            s.ratings.push_back(compare("min_voltage_v", *rec.metadata.rated_min_voltage_v, *s.resolution_v));
        }
    }

    if (nominal) {
        s.defects = infer_defects(rec, *nominal);
        s.defect_outcome = apply_defects(*nominal, *s.defects);
    }
    return s;
}

} // namespace nims
