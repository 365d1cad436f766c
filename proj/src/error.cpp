#include "nims/error.hpp"

#include <charconv>

#include "nims/rational.hpp"

namespace nims {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::InvalidSequence: return "InvalidSequence";
    case ErrorCode::RangeError: return "RangeError";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::DegenerateTarget: return "DegenerateTarget";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

std::string Rational::str() const {
    if (den_ == 1) {
        return std::to_string(num_);
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string &text) {
    const auto parse_int = [&](std::string_view part) {
        std::int64_t v = 0;
        const auto *first = part.data();
        const auto *last = part.data() + part.size();
        if (!part.empty() && *first == '+') {
            ++first;
        }
        const auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc{} || ptr != last || first == last) {
            fail(ErrorCode::ParseError, "not a rational: '" + text + "'");
        }
        return v;
    };
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        return Rational(parse_int(text));
    }
    const std::string_view view(text);
    return Rational(parse_int(view.substr(0, slash)), parse_int(view.substr(slash + 1)));
}

} // namespace nims
