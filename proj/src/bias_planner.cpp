#include "nims/bias_planner.hpp"

#include <cmath>

#include "nims/error.hpp"

namespace nims {

namespace {

void check_inputs(double volts, double hz, const PhysicalConstants &k) {
    if (!(k.josephson_hz_per_volt > 0.0) || !std::isfinite(k.josephson_hz_per_volt)) {
        fail(ErrorCode::InvalidInput, "Josephson constant must be positive");
    }
    if (!(hz > 0.0) || !std::isfinite(hz)) {
        fail(ErrorCode::InvalidInput, "bias frequency must be positive");
    }
    if (!std::isfinite(volts)) {
        fail(ErrorCode::InvalidInput, "target voltage must be finite");
    }
}

} // namespace

std::int64_t step_count(double volts, double hz, const PhysicalConstants &k) {
    check_inputs(volts, hz, k);
    const double steps = volts * k.josephson_hz_per_volt / hz;
    if (std::fabs(steps) > 4.0e18) {
        fail(ErrorCode::OutOfRange, "step count overflows");
    }
    return std::llround(steps);
}

BiasPlan plan(double volts, double hz, const Sequence &seq, std::optional<FrequencyBand> band,
              const PhysicalConstants &k) {
    check_inputs(volts, hz, k);
    BiasPlan p;
    p.target_voltage = volts;
    p.base_frequency = hz;
    p.band = band.value_or(FrequencyBand::around(hz));
    if (!p.band.contains(hz)) {
        fail(ErrorCode::OutOfRange, "base frequency outside the band");
    }

    const auto limit = representable_limit(seq);
    const double steps = volts * k.josephson_hz_per_volt / hz;
    if (std::fabs(steps) > static_cast<double>(limit) + 0.5) {
        fail(ErrorCode::OutOfRange, "target needs " + std::to_string(steps) + " steps, array reaches " +
                                        std::to_string(limit));
    }
    p.m_target = std::llround(steps);
    p.representation = represent(p.m_target, seq);

    const auto expressed = p.representation.expressed;
    if (expressed == 0) {
        if (volts != 0.0) {
            fail(ErrorCode::DegenerateTarget,
                 "m = " + std::to_string(p.m_target) + " selects no junctions; beta absorbs it all");
        }
        p.adjusted_frequency = hz;
    } else {
        p.adjusted_frequency = volts * k.josephson_hz_per_volt / static_cast<double>(expressed);
    }
    p.achieved_voltage = static_cast<double>(expressed) * p.adjusted_frequency / k.josephson_hz_per_volt;
    p.frequency_shift = std::fabs(p.adjusted_frequency - hz) / hz;
    p.in_band = p.band.contains(p.adjusted_frequency);
    return p;
}

double max_voltage(const Sequence &seq, double hz, const PhysicalConstants &k) {
    const auto total = prefix_sums(seq).totals.back();
    return static_cast<double>(total) * hz / k.josephson_hz_per_volt;
}

double resolution(const Sequence &seq, double hz, const PhysicalConstants &k) {
    if (seq.empty()) {
        fail(ErrorCode::InvalidInput, "resolution: empty sequence");
    }
    return static_cast<double>(seq.lsb()) * hz / k.josephson_hz_per_volt;
}

} // namespace nims
