#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "nims/rational.hpp"

namespace nims {

// Ordered junction counts a_0..a_N of one sub-array logic (binary, ternary
// or non-integer-multiple). The type itself holds any integers so that
// defective or malformed inputs can still be validated and reported on.
class Sequence {
  public:
    Sequence() = default;
    explicit Sequence(std::vector<std::int64_t> bits) : bits_(std::move(bits)) {}
    Sequence(std::initializer_list<std::int64_t> bits) : bits_(bits) {}

    std::span<const std::int64_t> bits() const noexcept { return bits_; }
    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }
    std::int64_t operator[](std::size_t n) const { return bits_.at(n); }
    std::int64_t lsb() const { return bits_.at(0); }
    // Highest bit index N.
    std::size_t top() const noexcept { return bits_.empty() ? 0 : bits_.size() - 1; }

    std::string str() const;

    friend bool operator==(const Sequence &, const Sequence &) = default;
    friend auto operator<=>(const Sequence &, const Sequence &) = default;

  private:
    std::vector<std::int64_t> bits_;
};

enum class Constraint { Upper, Lower, Positivity };

std::string_view to_string(Constraint c) noexcept;

struct Violation {
    Constraint constraint;
    std::size_t bit;
    // The bit value followed by the bound it was compared against.
    std::int64_t value;
    std::int64_t bound;

    friend bool operator==(const Violation &, const Violation &) = default;
};

struct ValidationReport {
    bool strict_valid = false;
    // Upper chain a_n <= 3 a_{n-1} holds, a_0 >= 1 and no bit is negative.
    bool complete_capable = false;
    std::vector<Violation> violations;
};

struct PrefixSums {
    std::vector<std::int64_t> totals;        // A_n = a_0 + ... + a_n
    std::vector<std::int64_t> offset_totals; // C_n = A_n + a_0
};

// Inclusive integer interval.
struct Interval {
    std::int64_t lo;
    std::int64_t hi;

    std::int64_t count() const noexcept { return hi - lo + 1; }
    friend bool operator==(const Interval &, const Interval &) = default;
};

// Sorted, disjoint, non-adjacent integer intervals.
class IntervalSet {
  public:
    IntervalSet() = default;
    explicit IntervalSet(std::vector<Interval> intervals);

    std::span<const Interval> intervals() const noexcept { return intervals_; }
    bool empty() const noexcept { return intervals_.empty(); }
    bool contains(std::int64_t x) const noexcept;
    bool covers(std::int64_t lo, std::int64_t hi) const noexcept;
    // Integers of [lo, hi] not in the set.
    IntervalSet gaps(std::int64_t lo, std::int64_t hi) const;
    std::int64_t cardinality() const noexcept;

    friend bool operator==(const IntervalSet &, const IntervalSet &) = default;

  private:
    std::vector<Interval> intervals_;
};

struct OracleOptions {
    static constexpr std::int64_t kDefaultCap = 10'000'000;
    // Largest total junction count A_N the reachable-sum DP will accept.
    std::int64_t cap = kDefaultCap;
};

ValidationReport validate(const Sequence &seq);

PrefixSums prefix_sums(const Sequence &seq);

// a_{n+1}/a_n for n = 0..N-1.
std::vector<Rational> segmentation_efficiency(const Sequence &seq);

// Every value of sum b_n a_n with b_n in {-1, 0, 1}. With `a0_offset` each
// value is widened by the residual |beta| <= a_0 - 1 that frequency tuning
// absorbs on stacked-junction arrays.
IntervalSet reachable_sums(const Sequence &seq, bool a0_offset, OracleOptions opts = {});

// Oracle completeness: every integer in [-A_N, A_N] is reachable, up to the
// a_0 residual.
bool is_complete(const Sequence &seq, OracleOptions opts = {});

// All strictly valid sequences of `depth` bits starting at a0 with every bit
// <= max_bit, in lexicographic order.
std::vector<Sequence> enumerate_nims(std::int64_t a0, std::size_t depth, std::int64_t max_bit,
                                     std::size_t limit = 1'000'000);

enum class StandardKind { Binary, Ternary };

Sequence make_standard(StandardKind kind, std::size_t lsb_count);

} // namespace nims
