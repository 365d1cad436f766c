#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nims/bias_planner.hpp"
#include "nims/device_data.hpp"
#include "nims/fault_tolerance.hpp"

namespace nims {

// A rated figure from the device metadata next to the value computed from
// the junction counts; reconciled when they agree within 1%.
struct RatingCheck {
    std::string quantity;
    double rated = 0.0;
    double computed = 0.0;
    bool reconciled = false;
};

struct DeviceSummary {
    std::int64_t total_junctions = 0;
    MarginReport margin;
    std::vector<LintFinding> lint;
    std::optional<ToleranceReport> tolerance;
    bool complete_capable = false;
    std::optional<bool> oracle_complete;
    std::optional<double> frequency_hz;
    std::optional<double> max_voltage_v;
    std::optional<double> resolution_v;
    std::optional<double> fine_resolution_v;
    std::vector<RatingCheck> ratings;
    std::optional<DefectMap> defects;
    std::optional<DefectOutcome> defect_outcome;
};

DeviceSummary summarize_device(const DeviceRecord &rec, double min_margin_ma,
                               const std::optional<Sequence> &nominal = std::nullopt,
                               const PhysicalConstants &k = {}, OracleOptions opts = {});

} // namespace nims
