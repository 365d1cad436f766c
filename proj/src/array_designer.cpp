#include "nims/array_designer.hpp"

#include <algorithm>

#include "nims/error.hpp"

namespace nims {

namespace {

void check_spec(const DesignSpec &spec) {
    if (spec.a0 < 1 || spec.a0 > 3) {
        fail(ErrorCode::InvalidInput, "a0 must be 1, 2 or 3");
    }
    if (spec.msb_size < 3 * spec.a0) {
        fail(ErrorCode::InvalidInput, "msb_size must be at least 3*a0");
    }
    if (spec.target_total < spec.msb_size) {
        fail(ErrorCode::InvalidInput, "target_total must be at least msb_size");
    }
    if (spec.max_ratio <= Rational(1) || spec.max_ratio > Rational(3)) {
        fail(ErrorCode::InvalidInput, "max_ratio must lie in (1, 3]");
    }
    for (const auto &rule : spec.min_tolerance) {
        if (rule.at_least < 0 || rule.tolerance < 0) {
            fail(ErrorCode::InvalidInput, "tolerance rules must be non-negative");
        }
    }
}

bool meets_spec(const Sequence &seq, const DesignSpec &spec) {
    if (!validate(seq).complete_capable) {
        return false;
    }
    const auto report = tolerance_report(seq);
    return std::all_of(report.bits.begin(), report.bits.end(), [&](const BitTolerance &bt) {
        return !bt.tolerance || *bt.tolerance >= required_tolerance(spec, bt.nominal);
    });
}

} // namespace

std::int64_t required_tolerance(const DesignSpec &spec, std::int64_t bit_size) noexcept {
    std::int64_t required = 0;
    for (const auto &rule : spec.min_tolerance) {
        if (bit_size >= rule.at_least) {
            required = std::max(required, rule.tolerance);
        }
    }
    return required;
}

Design design(const DesignSpec &spec) {
    check_spec(spec);

    std::vector<std::int64_t> bits{spec.a0};
    std::int64_t chain_total = spec.a0;
    for (;;) {
        const auto c = bits.back();
        const auto by_ratio = static_cast<std::int64_t>(
            static_cast<__int128>(c) * spec.max_ratio.num() / spec.max_ratio.den());
        const auto by_reserve = 3 * (c - required_tolerance(spec, c));
        const auto next = std::min(by_ratio, by_reserve);
        if (next >= spec.msb_size) {
            break;
        }
        if (next <= c) {
            fail(ErrorCode::Infeasible, "tolerance reserve stops growth at bit " + std::to_string(bits.size() - 1) +
                                            " (" + std::to_string(c) + " junctions)");
        }
        if (chain_total + next > spec.target_total) {
            // Small totals: whatever is left becomes the trimmed bank.
            break;
        }
        bits.push_back(next);
        chain_total += next;
    }

    const auto lsb_bits = bits.size();
    const auto remainder = spec.target_total - chain_total;
    const auto banks = static_cast<std::size_t>(remainder / spec.msb_size);
    const auto tail = remainder % spec.msb_size;
    bits.insert(bits.end(), banks, spec.msb_size);

    Sequence result;
    if (tail == 0) {
        result = Sequence(bits);
    } else {
        // Ascending position when it sits strictly above its predecessor
        // and keeps the rules, otherwise the end of the array.
        auto appended = bits;
        appended.push_back(tail);
        result = Sequence(std::move(appended));
        const auto pos = std::upper_bound(bits.begin(), bits.end(), tail);
        if (pos != bits.begin() && *(pos - 1) < tail) {
            auto sorted = bits;
            sorted.insert(sorted.begin() + (pos - bits.begin()), tail);
            if (Sequence s(std::move(sorted)); meets_spec(s, spec)) {
                result = std::move(s);
            }
        }
    }
    if (!meets_spec(result, spec)) {
        fail(ErrorCode::Infeasible, "no layout of " + result.str() + " meets the tolerance rules");
    }

    Design out;
    out.sequence = std::move(result);
    out.metadata.lsb_bits = lsb_bits;
    out.metadata.msb_banks = banks;
    if (tail > 0) {
        out.metadata.trimmed_bank = tail;
    }
    out.metadata.branches = spec.branches;
    out.metadata.symmetric_halves = spec.symmetric_halves;
    return out;
}

std::vector<LogicSummary> compare_logics(std::size_t rows, std::int64_t msb_size,
                                         std::span<const Sequence> candidates) {
    if (msb_size < 1) {
        fail(ErrorCode::InvalidInput, "msb_size must be positive");
    }
    std::vector<LogicSummary> out;
    out.reserve(candidates.size());
    for (const auto &candidate : candidates) {
        if (candidate.empty()) {
            fail(ErrorCode::InvalidInput, "empty candidate sequence");
        }
        std::vector<std::int64_t> bits(candidate.bits().begin(), candidate.bits().end());
        while (bits.size() < rows) {
            bits.push_back(msb_size);
        }

        LogicSummary s;
        s.sequence = Sequence(std::move(bits));
        const auto seq_bits = s.sequence.bits();
        s.lsb_bits = static_cast<std::size_t>(
            std::count_if(seq_bits.begin(), seq_bits.end(), [&](std::int64_t a) { return a < msb_size; }));
        double sum = 0.0;
        std::size_t count = 0;
        for (std::size_t n = 0; n + 1 < seq_bits.size(); ++n) {
            if (seq_bits[n] >= msb_size || seq_bits[n + 1] >= msb_size) {
                continue;
            }
            const Rational r(seq_bits[n + 1], seq_bits[n]);
            if (!s.min_efficiency || r < *s.min_efficiency) {
                s.min_efficiency = r;
            }
            sum += r.to_double();
            ++count;
        }
        if (count > 0) {
            s.mean_efficiency = sum / static_cast<double>(count);
        }
        s.total = prefix_sums(s.sequence).totals.back();
        s.tolerance = tolerance_report(s.sequence);
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace nims
