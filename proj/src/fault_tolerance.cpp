#include "nims/fault_tolerance.hpp"

#include <algorithm>

#include "nims/error.hpp"

namespace nims {

namespace {

std::int64_t ceil_third(std::int64_t v) noexcept { return (v + 2) / 3; }

} // namespace

ToleranceReport tolerance_report(const Sequence &seq) {
    if (seq.empty()) {
        fail(ErrorCode::InvalidInput, "tolerance_report: empty sequence");
    }
    for (std::size_t n = 0; n < seq.size(); ++n) {
        if (seq[n] < 1) {
            fail(ErrorCode::InvalidInput, "tolerance_report: bit " + std::to_string(n) + " is not positive");
        }
    }

    ToleranceReport report;
    report.bits.reserve(seq.size());
    for (std::size_t n = 0; n < seq.size(); ++n) {
        BitTolerance bit{n, seq[n], std::nullopt, std::nullopt};
        if (n < seq.top()) {
            const auto a = seq[n];
            const auto next = seq[n + 1];
            bit.tolerance = std::max<std::int64_t>(0, a - ceil_third(next));
            const auto slack = std::max<std::int64_t>(0, 3 * a - next);
            bit.fault_proportion = Rational(slack, 3 * a);
        }
        report.bits.push_back(bit);
    }
    return report;
}

void DefectMap::set(std::size_t bit, std::int64_t missing) {
    if (missing < 0) {
        fail(ErrorCode::InvalidInput, "negative defect count at bit " + std::to_string(bit));
    }
    if (missing == 0) {
        entries_.erase(bit);
    } else {
        entries_[bit] = missing;
    }
}

std::int64_t DefectMap::at(std::size_t bit) const noexcept {
    const auto it = entries_.find(bit);
    return it == entries_.end() ? 0 : it->second;
}

DefectOutcome apply_defects(const Sequence &seq, const DefectMap &defects) {
    std::vector<std::int64_t> bits(seq.bits().begin(), seq.bits().end());
    for (const auto &[bit, missing] : defects.entries()) {
        if (bit >= bits.size()) {
            fail(ErrorCode::InvalidInput, "defect at bit " + std::to_string(bit) + " but the sequence has " +
                                              std::to_string(bits.size()) + " bits");
        }
        if (missing > bits[bit]) {
            fail(ErrorCode::InvalidInput, "defect of " + std::to_string(missing) + " at bit " +
                                              std::to_string(bit) + " exceeds its " +
                                              std::to_string(bits[bit]) + " junctions");
        }
        bits[bit] -= missing;
    }
    Sequence defective(std::move(bits));
    auto validation = validate(defective);
    return {std::move(defective), std::move(validation)};
}

bool ScanReport::consistent() const noexcept {
    return std::all_of(entries.begin(), entries.end(),
                       [](const ScanEntry &e) { return e.oracle_complete_at_max_safe; });
}

ScanReport worst_case_scan(const Sequence &seq, std::int64_t budget, OracleOptions opts) {
    if (budget < 0) {
        fail(ErrorCode::InvalidInput, "scan budget must be non-negative");
    }
    if (!validate(seq).complete_capable) {
        fail(ErrorCode::InvalidSequence, "scan needs a complete-capable sequence, got " + seq.str());
    }
    const auto total = prefix_sums(seq).totals.back();
    if (total > opts.cap) {
        fail(ErrorCode::RangeError, "total " + std::to_string(total) + " exceeds oracle cap " +
                                        std::to_string(opts.cap));
    }

    const auto tolerances = tolerance_report(seq);
    auto oracle_with = [&](std::size_t bit, std::int64_t missing) {
        DefectMap d;
        d.set(bit, missing);
        return is_complete(apply_defects(seq, d).defective, opts);
    };

    ScanReport report;
    report.budget = budget;
    report.entries.reserve(seq.size());
    for (const auto &bt : tolerances.bits) {
        ScanEntry e;
        e.bit = bt.bit;
        e.nominal = bt.nominal;
        e.tolerance = bt.tolerance;
        if (!bt.tolerance) {
            e.safe = true;
            e.max_safe = std::min(budget, bt.nominal);
        } else {
            e.safe = budget <= *bt.tolerance;
            e.max_safe = std::min(budget, *bt.tolerance);
            if (*bt.tolerance + 1 <= budget) {
                e.first_unsafe = *bt.tolerance + 1;
            }
        }
        e.oracle_complete_at_max_safe = oracle_with(e.bit, e.max_safe);
        if (e.first_unsafe) {
            e.oracle_complete_at_first_unsafe = oracle_with(e.bit, *e.first_unsafe);
        }
        report.entries.push_back(e);
    }
    return report;
}

} // namespace nims
