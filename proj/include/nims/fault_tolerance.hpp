#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "nims/rational.hpp"
#include "nims/sequence.hpp"

namespace nims {

struct BitTolerance {
    std::size_t bit = 0;
    std::int64_t nominal = 0;
    // Missing junctions bit n survives; empty for the last bit, where losses
    // only shrink the range.
    std::optional<std::int64_t> tolerance;
    // 1 - a_{n+1} / (3 a_n), clamped to [0, 1); empty for the last bit.
    std::optional<Rational> fault_proportion;
};

struct ToleranceReport {
    std::vector<BitTolerance> bits;
};

ToleranceReport tolerance_report(const Sequence &seq);

// Missing-junction count per bit index.
class DefectMap {
  public:
    DefectMap() = default;

    void set(std::size_t bit, std::int64_t missing);
    std::int64_t at(std::size_t bit) const noexcept;
    const std::map<std::size_t, std::int64_t> &entries() const noexcept { return entries_; }
    bool empty() const noexcept { return entries_.empty(); }

    friend bool operator==(const DefectMap &, const DefectMap &) = default;

  private:
    std::map<std::size_t, std::int64_t> entries_;
};

struct DefectOutcome {
    Sequence defective;
    ValidationReport validation;
};

DefectOutcome apply_defects(const Sequence &seq, const DefectMap &defects);

struct ScanEntry {
    std::size_t bit = 0;
    std::int64_t nominal = 0;
    std::optional<std::int64_t> tolerance;
    // Every single-bit placement of 1..budget missing junctions keeps the
    // array complete-capable.
    bool safe = false;
    std::int64_t max_safe = 0;
    std::optional<std::int64_t> first_unsafe;
    // Oracle verdicts for the max_safe and first_unsafe scenarios.
    bool oracle_complete_at_max_safe = false;
    std::optional<bool> oracle_complete_at_first_unsafe;
};

struct ScanReport {
    std::int64_t budget = 0;
    std::vector<ScanEntry> entries;

    // A SAFE verdict the oracle contradicts; never expected.
    bool consistent() const noexcept;
};

ScanReport worst_case_scan(const Sequence &seq, std::int64_t budget, OracleOptions opts = {});

} // namespace nims
