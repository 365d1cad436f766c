#include "nims/representation.hpp"

#include <cstdlib>

#include "nims/error.hpp"

namespace nims {

namespace {

int sign_of(std::int64_t v) noexcept { return (v > 0) - (v < 0); }

// The greedy itself, without the capability precondition, so the range
// check can report failures on sequences that lack it.
Representation greedy(std::int64_t m, const Sequence &seq, const PrefixSums &sums,
                      RemainderTrace *trace) {
    const auto a0 = seq.lsb();
    Representation rep;
    rep.signs.assign(seq.size(), 0);
    rep.target = m;
    if (trace) {
        trace->remainders.clear();
        trace->remainders.reserve(seq.size());
    }

    std::int64_t r = m;
    for (std::size_t n = seq.top(); n >= 1; --n) {
        const auto threshold = sums.offset_totals[n - 1];
        if (std::llabs(r) >= threshold) {
            const int s = sign_of(r);
            rep.signs[n] = s;
            r -= s * seq[n];
        }
        if (trace) {
            trace->remainders.push_back(r);
        }
    }
    if (std::llabs(r) >= a0) {
        const int s = sign_of(r);
        rep.signs[0] = s;
        r -= s * a0;
    }
    if (trace) {
        trace->remainders.push_back(r);
    }

    rep.beta = r;
    rep.expressed = m - r;
    return rep;
}

} // namespace

std::int64_t representable_limit(const Sequence &seq) {
    const auto sums = prefix_sums(seq);
    return sums.totals.back() + seq.lsb() - 1;
}

Representation represent(std::int64_t m, const Sequence &seq, RemainderTrace *trace) {
    const auto report = validate(seq);
    if (!report.complete_capable) {
        fail(ErrorCode::InvalidSequence,
             "sequence " + seq.str() + " is not complete-capable (upper chain a_n <= 3 a_{n-1} fails)");
    }
    const auto sums = prefix_sums(seq);
    const auto limit = sums.totals.back() + seq.lsb() - 1;
    if (m > limit || m < -limit) {
        fail(ErrorCode::OutOfRange,
             "m = " + std::to_string(m) + " outside [-" + std::to_string(limit) + ", " +
                 std::to_string(limit) + "]");
    }
    return greedy(m, seq, sums, trace);
}

std::int64_t evaluate(const Representation &rep, const Sequence &seq) {
    if (rep.signs.size() != seq.size()) {
        fail(ErrorCode::InvalidInput, "representation has " + std::to_string(rep.signs.size()) +
                                          " signs for " + std::to_string(seq.size()) + " bits");
    }
    __int128 total = rep.beta;
    for (std::size_t n = 0; n < seq.size(); ++n) {
        const int b = rep.signs[n];
        if (b < -1 || b > 1) {
            fail(ErrorCode::InvalidInput, "sign " + std::to_string(b) + " at bit " + std::to_string(n));
        }
        total += static_cast<__int128>(b) * seq[n];
    }
    return static_cast<std::int64_t>(total);
}

RangeCheckReport represent_range_check(const Sequence &seq, OracleOptions opts) {
    const auto sums = prefix_sums(seq);
    const auto total = sums.totals.back();
    if (total > opts.cap) {
        fail(ErrorCode::RangeError, "total " + std::to_string(total) + " exceeds oracle cap " +
                                        std::to_string(opts.cap));
    }
    const auto a0 = seq.lsb();
    if (a0 < 1) {
        fail(ErrorCode::InvalidSequence, "a_0 must be at least 1");
    }

    RangeCheckReport report;
    report.hi = total + a0 - 1;
    report.lo = -report.hi;
    RemainderTrace trace;
    for (std::int64_t m = report.lo; m <= report.hi; ++m) {
        const auto rep = greedy(m, seq, sums, &trace);
        bool ok = evaluate(rep, seq) == m && std::llabs(rep.beta) < a0;
        // After bit n the remainder is within reach of the lower bits and the
        // residual: |r| <= A_{n-1} + a_0 - 1.
        for (std::size_t i = 0; ok && i < trace.remainders.size(); ++i) {
            const auto n = seq.top() - i;
            const auto lower_total = n == 0 ? 0 : sums.totals[n - 1];
            ok = std::llabs(trace.remainders[i]) <= lower_total + a0 - 1;
        }
        ++report.checked;
        if (ok) {
            ++report.passed;
        } else if (report.failures.size() < 16) {
            report.failures.push_back(m);
        }
    }
    return report;
}

} // namespace nims
