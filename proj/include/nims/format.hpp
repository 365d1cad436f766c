#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nims/array_designer.hpp"
#include "nims/bias_planner.hpp"
#include "nims/fault_tolerance.hpp"
#include "nims/report.hpp"
#include "nims/representation.hpp"
#include "nims/sequence.hpp"

namespace nims {

enum class Format { Text, Json, Csv };

std::optional<Format> parse_format(std::string_view name) noexcept;

std::string render_validation(const Sequence &seq, const ValidationReport &report, Format fmt);
// JSON form is {"m": ..., "signs": [...], "beta": ...} in that order.
std::string render_representation(const Representation &rep, Format fmt);
std::string render_range_check(const Sequence &seq, const RangeCheckReport &report, Format fmt);
// CSV header: bit,nominal,tolerance,proportion
std::string render_tolerance(const ToleranceReport &report, Format fmt);
std::string render_scan(const ScanReport &report, Format fmt);
std::string render_defects(const Sequence &nominal, const DefectMap &defects, const DefectOutcome &outcome,
                           std::optional<bool> oracle_complete, Format fmt);
std::string render_design(const Design &d, Format fmt);
// JSON: {"V","f","m","signs","beta","f_adjusted","in_band"} in fixed notation.
std::string render_plan(const BiasPlan &plan, Format fmt);
std::string render_comparison(const std::vector<LogicSummary> &rows, Format fmt);
std::string render_device_summary(const DeviceSummary &summary, Format fmt);
std::string render_enumeration(const std::vector<Sequence> &seqs, Format fmt);
std::string render_oracle(const Sequence &seq, const IntervalSet &reach, bool a0_offset, Format fmt);
std::string render_error(std::string_view code, std::string_view message, Format fmt);

} // namespace nims
