#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nims/fault_tolerance.hpp"
#include "nims/sequence.hpp"

namespace nims {

struct BitMeasurement {
    std::size_t bit = 0;
    std::int64_t junctions = 0;
    double step_pos_ma = 0.0;
    double step_zero_ma = 0.0;
    double step_neg_ma = 0.0;
    std::string tolerance_note;
};

struct DeviceMetadata {
    std::optional<double> frequency_hz;
    std::optional<double> temperature_k;
    std::optional<double> critical_current_ma;
    std::optional<double> normal_resistance_mohm;
    std::optional<double> junction_length_um;
    std::optional<double> junction_width_um;
    std::optional<double> current_density_ka_cm2;
    std::optional<double> rated_max_voltage_v;
    std::optional<double> rated_min_voltage_v;
};

struct DeviceRecord {
    DeviceMetadata metadata;
    std::vector<BitMeasurement> bits;

    Sequence junctions() const;
    std::int64_t total_junctions() const;
};

// Metadata preamble of key=value lines, then the CSV header
// bit,junctions,step_pos_mA,step_zero_mA,step_neg_mA[,tolerance_note]
// and one row per bit. Lines starting with '#' are ignored.
DeviceRecord parse_device(std::string_view text);
DeviceRecord load_device(const std::filesystem::path &path);

// Canonical form; parse_device(serialize_device(r)) == r and a canonical
// file round-trips byte for byte.
std::string serialize_device(const DeviceRecord &rec);

struct MarginViolation {
    std::size_t bit = 0;
    std::string_view step; // "positive" or "negative"
    double width_ma = 0.0;
};

struct MarginReport {
    double threshold_ma = 0.0;
    double min_pos_ma = 0.0;
    double mean_pos_ma = 0.0;
    double min_neg_ma = 0.0;
    double mean_neg_ma = 0.0;
    std::vector<std::size_t> min_pos_bits;
    std::vector<std::size_t> min_neg_bits;
    std::vector<MarginViolation> violations;

    bool pass() const noexcept { return violations.empty(); }
};

MarginReport margin_report(const DeviceRecord &rec, double min_margin_ma);

struct LintFinding {
    std::size_t bit = 0;
    std::string column;
    std::string message;
};

// Flags step widths that look like transcription slips: more than twice
// both neighbours, or a signed step identical to the zero step.
std::vector<LintFinding> plausibility_lint(const DeviceRecord &rec);

// d_n = nominal_n - measured_n, zero entries omitted.
DefectMap infer_defects(const DeviceRecord &rec, const Sequence &nominal);

} // namespace nims
