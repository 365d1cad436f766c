#pragma once

#include <cstdint>
#include <optional>

#include "nims/representation.hpp"
#include "nims/sequence.hpp"

namespace nims {

inline constexpr double kElementaryCharge = 1.602176634e-19; // C, exact
inline constexpr double kPlanckConstant = 6.62607015e-34;    // J s, exact

struct PhysicalConstants {
    // K_J = 2e/h in Hz/V.
    double josephson_hz_per_volt = 483597.8484169836e9;
};

inline constexpr double kDefaultFrequencyHz = 18.01e9;
inline constexpr double kDefaultBandFraction = 0.005;

struct FrequencyBand {
    double low_hz = 0.0;
    double high_hz = 0.0;

    static FrequencyBand around(double center_hz, double fraction = kDefaultBandFraction) {
        return {center_hz * (1.0 - fraction), center_hz * (1.0 + fraction)};
    }
    bool contains(double hz) const noexcept { return hz >= low_hz && hz <= high_hz; }
};

struct BiasPlan {
    double target_voltage = 0.0;
    double base_frequency = 0.0;
    std::int64_t m_target = 0;
    Representation representation;
    double adjusted_frequency = 0.0;
    double achieved_voltage = 0.0;
    double frequency_shift = 0.0; // |f' - f| / f
    FrequencyBand band;
    bool in_band = false;
};

// Nearest integer step count for a voltage, ties away from zero.
std::int64_t step_count(double volts, double hz, const PhysicalConstants &k = {});

// Bit signs for V = m f / K_J, then f' = V K_J / expressed_m so the chosen
// bits hit the target exactly. Without a band, f +/- 0.5% is used.
BiasPlan plan(double volts, double hz, const Sequence &seq,
              std::optional<FrequencyBand> band = std::nullopt, const PhysicalConstants &k = {});

double max_voltage(const Sequence &seq, double hz, const PhysicalConstants &k = {});

// a_0 f / K_J. Frequency tuning refines the effective step to f / K_J.
double resolution(const Sequence &seq, double hz, const PhysicalConstants &k = {});

} // namespace nims
