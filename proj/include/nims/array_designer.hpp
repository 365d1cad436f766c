#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nims/fault_tolerance.hpp"
#include "nims/rational.hpp"
#include "nims/sequence.hpp"

namespace nims {

// Bits of at least `at_least` junctions must tolerate `tolerance` missing.
struct ToleranceRule {
    std::int64_t at_least = 0;
    std::int64_t tolerance = 0;
};

struct DesignSpec {
    std::int64_t a0 = 1;
    std::int64_t msb_size = 0;
    std::int64_t target_total = 0;
    std::vector<ToleranceRule> min_tolerance;
    Rational max_ratio{3};
    // Layout metadata only.
    std::size_t branches = 16;
    bool symmetric_halves = true;
};

struct DesignMetadata {
    std::size_t lsb_bits = 0;
    std::size_t msb_banks = 0;
    std::optional<std::int64_t> trimmed_bank;
    std::size_t branches = 16;
    bool symmetric_halves = true;
};

struct Design {
    Sequence sequence;
    DesignMetadata metadata;
};

std::int64_t required_tolerance(const DesignSpec &spec, std::int64_t bit_size) noexcept;

// Greedy LSB chain grown as fast as max_ratio and the tolerance reserve
// allow, then equal MSB banks, then one trimmed bank to hit the exact total.
Design design(const DesignSpec &spec);

struct LogicSummary {
    Sequence sequence; // padded with msb banks up to the requested row count
    std::size_t lsb_bits = 0;
    std::optional<Rational> min_efficiency;
    std::optional<double> mean_efficiency;
    std::int64_t total = 0;
    ToleranceReport tolerance;
};

std::vector<LogicSummary> compare_logics(std::size_t rows, std::int64_t msb_size,
                                         std::span<const Sequence> candidates);

} // namespace nims
