#pragma once

#include <cstdint>
#include <vector>

#include "nims/sequence.hpp"

namespace nims {

// Signed bit selection expressing target = sum b_n a_n + beta.
struct Representation {
    std::vector<int> signs; // b_0..b_N, each in {-1, 0, 1}
    std::int64_t beta = 0;
    std::int64_t target = 0;
    std::int64_t expressed = 0;

    friend bool operator==(const Representation &, const Representation &) = default;
};

// Remainder after each bit is decided, ordered from bit N down to bit 0.
struct RemainderTrace {
    std::vector<std::int64_t> remainders;
};

// Largest |m| that represent() accepts: A_N + a_0 - 1.
std::int64_t representable_limit(const Sequence &seq);

// Most-significant-first greedy. Bit n is selected with the sign of the
// remainder r when |r| >= C_{n-1} = A_{n-1} + a_0 (the lower bits plus the
// residual cannot reach r). Throws InvalidSequence when the upper chain
// fails and OutOfRange when |m| > representable_limit(seq).
Representation represent(std::int64_t m, const Sequence &seq, RemainderTrace *trace = nullptr);

std::int64_t evaluate(const Representation &rep, const Sequence &seq);

struct RangeCheckReport {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    std::int64_t checked = 0;
    std::int64_t passed = 0;
    // First failing targets, capped at a handful.
    std::vector<std::int64_t> failures;

    bool ok() const noexcept { return checked == passed; }
};

// Represents every m in [-(A_N + a_0 - 1), A_N + a_0 - 1] and checks the
// round trip, the residual bound and the remainder invariant.
RangeCheckReport represent_range_check(const Sequence &seq, OracleOptions opts = {});

} // namespace nims
