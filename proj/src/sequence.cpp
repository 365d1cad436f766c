#include "nims/sequence.hpp"

#include <algorithm>
#include <limits>

#include "nims/error.hpp"

namespace nims {

namespace {

constexpr std::int64_t kMaxTotal = std::int64_t{1} << 62;

std::int64_t clamp_to_i64(__int128 v) noexcept {
    constexpr auto hi = std::numeric_limits<std::int64_t>::max();
    constexpr auto lo = std::numeric_limits<std::int64_t>::min();
    if (v > hi) {
        return hi;
    }
    if (v < lo) {
        return lo;
    }
    return static_cast<std::int64_t>(v);
}

__int128 triple(std::int64_t v) noexcept { return static_cast<__int128>(v) * 3; }

void require_non_empty(const Sequence &seq, const char *op) {
    if (seq.empty()) {
        fail(ErrorCode::InvalidInput, std::string(op) + ": empty sequence");
    }
}

std::int64_t checked_total(const Sequence &seq) {
    __int128 total = 0;
    for (const auto a : seq.bits()) {
        if (a < 0) {
            fail(ErrorCode::InvalidInput, "negative bit in sequence " + seq.str());
        }
        total += a;
        if (total > kMaxTotal) {
            fail(ErrorCode::RangeError, "sequence total exceeds 2^62");
        }
    }
    return static_cast<std::int64_t>(total);
}

std::vector<Interval> merge_sorted(std::vector<Interval> v) {
    std::sort(v.begin(), v.end(), [](const Interval &a, const Interval &b) { return a.lo < b.lo; });
    std::vector<Interval> out;
    out.reserve(v.size());
    for (const auto &iv : v) {
        if (!out.empty() && iv.lo <= out.back().hi + 1) {
            out.back().hi = std::max(out.back().hi, iv.hi);
        } else {
            out.push_back(iv);
        }
    }
    return out;
}

} // namespace

std::string Sequence::str() const {
    std::string out;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (i) {
            out += ',';
        }
        out += std::to_string(bits_[i]);
    }
    return out;
}

std::string_view to_string(Constraint c) noexcept {
    switch (c) {
    case Constraint::Upper: return "UPPER";
    case Constraint::Lower: return "LOWER";
    case Constraint::Positivity: return "POSITIVITY";
    }
    return "UNKNOWN";
}

IntervalSet::IntervalSet(std::vector<Interval> intervals) {
    for (const auto &iv : intervals) {
        if (iv.lo > iv.hi) {
            fail(ErrorCode::InvalidInput, "interval with lo > hi");
        }
    }
    intervals_ = merge_sorted(std::move(intervals));
}

bool IntervalSet::contains(std::int64_t x) const noexcept {
    auto it = std::upper_bound(intervals_.begin(), intervals_.end(), x,
                               [](std::int64_t v, const Interval &iv) { return v < iv.lo; });
    if (it == intervals_.begin()) {
        return false;
    }
    --it;
    return x <= it->hi;
}

bool IntervalSet::covers(std::int64_t lo, std::int64_t hi) const noexcept {
    if (lo > hi) {
        return true;
    }
    auto it = std::upper_bound(intervals_.begin(), intervals_.end(), lo,
                               [](std::int64_t v, const Interval &iv) { return v < iv.lo; });
    if (it == intervals_.begin()) {
        return false;
    }
    --it;
    return it->lo <= lo && hi <= it->hi;
}

IntervalSet IntervalSet::gaps(std::int64_t lo, std::int64_t hi) const {
    std::vector<Interval> out;
    std::int64_t cursor = lo;
    for (const auto &iv : intervals_) {
        if (iv.hi < cursor) {
            continue;
        }
        if (iv.lo > hi) {
            break;
        }
        if (iv.lo > cursor) {
            out.push_back({cursor, iv.lo - 1});
        }
        cursor = iv.hi + 1;
        if (cursor > hi) {
            break;
        }
    }
    if (cursor <= hi) {
        out.push_back({cursor, hi});
    }
    return IntervalSet(std::move(out));
}

std::int64_t IntervalSet::cardinality() const noexcept {
    std::int64_t n = 0;
    for (const auto &iv : intervals_) {
        n += iv.count();
    }
    return n;
}

ValidationReport validate(const Sequence &seq) {
    require_non_empty(seq, "validate");
    const auto bits = seq.bits();
    ValidationReport report;

    bool non_negative = true;
    for (std::size_t n = 0; n < bits.size(); ++n) {
        if (bits[n] < 1) {
            report.violations.push_back({Constraint::Positivity, n, bits[n], 1});
        }
        non_negative = non_negative && bits[n] >= 0;
    }

    bool upper_ok = true;
    for (std::size_t n = 1; n < bits.size(); ++n) {
        if (bits[n] > triple(bits[n - 1])) {
            upper_ok = false;
            report.violations.push_back({Constraint::Upper, n, bits[n], clamp_to_i64(triple(bits[n - 1]))});
        }
    }

    // a_{n+1} > 3 a_{n-1}, plus growth of the first step a_1 > a_0.
    if (bits.size() >= 2 && bits[1] <= bits[0]) {
        report.violations.push_back({Constraint::Lower, 1, bits[1], bits[0]});
    }
    for (std::size_t n = 2; n < bits.size(); ++n) {
        if (bits[n] <= triple(bits[n - 2])) {
            report.violations.push_back({Constraint::Lower, n, bits[n], clamp_to_i64(triple(bits[n - 2]))});
        }
    }

    std::stable_sort(report.violations.begin(), report.violations.end(),
                     [](const Violation &a, const Violation &b) { return a.bit < b.bit; });
    report.complete_capable = upper_ok && non_negative && bits[0] >= 1;
    report.strict_valid = report.violations.empty();
    return report;
}

PrefixSums prefix_sums(const Sequence &seq) {
    require_non_empty(seq, "prefix_sums");
    PrefixSums sums;
    sums.totals.reserve(seq.size());
    sums.offset_totals.reserve(seq.size());
    __int128 total = 0;
    for (const auto a : seq.bits()) {
        total += a;
        if (total > kMaxTotal || total < -kMaxTotal) {
            fail(ErrorCode::RangeError, "prefix sum exceeds 2^62");
        }
        sums.totals.push_back(static_cast<std::int64_t>(total));
        sums.offset_totals.push_back(static_cast<std::int64_t>(total) + seq.lsb());
    }
    return sums;
}

std::vector<Rational> segmentation_efficiency(const Sequence &seq) {
    if (seq.size() < 2) {
        fail(ErrorCode::InvalidInput, "segmentation efficiency needs at least two bits");
    }
    std::vector<Rational> out;
    out.reserve(seq.size() - 1);
    for (std::size_t n = 0; n + 1 < seq.size(); ++n) {
        if (seq[n] == 0) {
            fail(ErrorCode::InvalidInput, "segmentation efficiency of a zero bit");
        }
        out.emplace_back(seq[n + 1], seq[n]);
    }
    return out;
}

IntervalSet reachable_sums(const Sequence &seq, bool a0_offset, OracleOptions opts) {
    require_non_empty(seq, "reachable_sums");
    const auto total = checked_total(seq);
    if (total > opts.cap) {
        fail(ErrorCode::RangeError, "total " + std::to_string(total) + " exceeds oracle cap " +
                                        std::to_string(opts.cap));
    }

    std::vector<Interval> current{{0, 0}};
    std::vector<Interval> next;
    for (const auto a : seq.bits()) {
        if (a == 0) {
            continue;
        }
        next.clear();
        next.reserve(current.size() * 3);
        for (const auto &iv : current) {
            next.push_back({iv.lo - a, iv.hi - a});
            next.push_back(iv);
            next.push_back({iv.lo + a, iv.hi + a});
        }
        current = merge_sorted(std::move(next));
        next = {};
    }

    if (a0_offset && seq.lsb() > 1) {
        const auto widen = seq.lsb() - 1;
        for (auto &iv : current) {
            iv.lo -= widen;
            iv.hi += widen;
        }
    }
    return IntervalSet(std::move(current));
}

bool is_complete(const Sequence &seq, OracleOptions opts) {
    const auto reach = reachable_sums(seq, /*a0_offset=*/true, opts);
    const auto total = checked_total(seq);
    return reach.covers(-total, total);
}

std::vector<Sequence> enumerate_nims(std::int64_t a0, std::size_t depth, std::int64_t max_bit,
                                     std::size_t limit) {
    if (depth < 1 || a0 < 1) {
        fail(ErrorCode::InvalidInput, "enumerate_nims needs depth >= 1 and a0 >= 1");
    }
    std::vector<Sequence> out;
    if (a0 > max_bit) {
        return out;
    }
    std::vector<std::int64_t> bits{a0};
    bits.reserve(depth);

    // Depth-first in increasing order yields lexicographic output.
    auto extend = [&](auto &self) -> void {
        const auto n = bits.size();
        if (n == depth) {
            if (out.size() >= limit) {
                fail(ErrorCode::RangeError,
                     "enumeration exceeds limit of " + std::to_string(limit) + " sequences");
            }
            out.emplace_back(bits);
            return;
        }
        const __int128 lower = n == 1 ? bits[0] : triple(bits[n - 2]);
        const __int128 upper = std::min<__int128>(triple(bits[n - 1]), max_bit);
        for (__int128 v = lower + 1; v <= upper; ++v) {
            bits.push_back(static_cast<std::int64_t>(v));
            self(self);
            bits.pop_back();
        }
    };
    extend(extend);
    return out;
}

Sequence make_standard(StandardKind kind, std::size_t lsb_count) {
    if (lsb_count < 1) {
        fail(ErrorCode::InvalidInput, "standard sequence needs at least one bit");
    }
    const std::int64_t radix = kind == StandardKind::Binary ? 2 : 3;
    std::vector<std::int64_t> bits;
    bits.reserve(lsb_count);
    __int128 v = 1;
    for (std::size_t i = 0; i < lsb_count; ++i) {
        if (v > kMaxTotal) {
            fail(ErrorCode::RangeError, "standard sequence bit exceeds 2^62");
        }
        bits.push_back(static_cast<std::int64_t>(v));
        v *= radix;
    }
    return Sequence(std::move(bits));
}

} // namespace nims
