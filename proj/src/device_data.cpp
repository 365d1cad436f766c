#include "nims/device_data.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "nims/error.hpp"
#include "nims/io.hpp"

namespace nims {

namespace {

constexpr std::array<std::string_view, 5> kColumns{"bit", "junctions", "step_pos_mA", "step_zero_mA",
                                                    "step_neg_mA"};
constexpr std::string_view kNoteColumn = "tolerance_note";

std::string_view trim(std::string_view s) noexcept {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) {
            return out;
        }
        start = pos + 1;
    }
}

[[noreturn]] void parse_fail(std::size_t line, const std::string &what) {
    fail(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::optional<double> to_double(std::string_view s) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty() || !std::isfinite(v)) {
        return std::nullopt;
    }
    return v;
}

std::optional<std::int64_t> to_int(std::string_view s) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
        return std::nullopt;
    }
    return v;
}

double non_negative(std::string_view value, std::size_t line, std::string_view key) {
    const auto v = to_double(value);
    if (!v || *v < 0.0) {
        parse_fail(line, std::string(key) + ": expected a non-negative number, got '" + std::string(value) + "'");
    }
    return *v;
}

double frequency_value(std::string_view value, std::size_t line) {
    struct Unit {
        std::string_view suffix;
        double scale;
    };
    constexpr std::array<Unit, 4> units{{{"GHz", 1e9}, {"MHz", 1e6}, {"kHz", 1e3}, {"Hz", 1.0}}};
    for (const auto &u : units) {
        if (value.size() > u.suffix.size() && value.ends_with(u.suffix)) {
            return non_negative(trim(value.substr(0, value.size() - u.suffix.size())), line, "frequency_hz") *
                   u.scale;
        }
    }
    return non_negative(value, line, "frequency_hz");
}

void parse_metadata(DeviceMetadata &meta, std::string_view key, std::string_view value, std::size_t line) {
    if (key == "frequency_hz") {
        meta.frequency_hz = frequency_value(value, line);
    } else if (key == "temperature_k") {
        meta.temperature_k = non_negative(value, line, key);
    } else if (key == "critical_current_ma") {
        meta.critical_current_ma = non_negative(value, line, key);
    } else if (key == "normal_resistance_mohm") {
        meta.normal_resistance_mohm = non_negative(value, line, key);
    } else if (key == "current_density_ka_cm2") {
        meta.current_density_ka_cm2 = non_negative(value, line, key);
    } else if (key == "rated_max_voltage_v") {
        meta.rated_max_voltage_v = non_negative(value, line, key);
    } else if (key == "rated_min_voltage_v") {
        meta.rated_min_voltage_v = non_negative(value, line, key);
    } else if (key == "junction_um") {
        const auto x = value.find('x');
        if (x == std::string_view::npos) {
            parse_fail(line, "junction_um: expected <length>x<width>, got '" + std::string(value) + "'");
        }
        meta.junction_length_um = non_negative(trim(value.substr(0, x)), line, "junction length");
        meta.junction_width_um = non_negative(trim(value.substr(x + 1)), line, "junction width");
    } else {
        parse_fail(line, "unknown metadata key '" + std::string(key) + "'");
    }
}

} // namespace

Sequence DeviceRecord::junctions() const {
    std::vector<std::int64_t> out;
    out.reserve(bits.size());
    for (const auto &b : bits) {
        out.push_back(b.junctions);
    }
    return Sequence(std::move(out));
}

std::int64_t DeviceRecord::total_junctions() const {
    std::int64_t total = 0;
    for (const auto &b : bits) {
        total += b.junctions;
    }
    return total;
}

DeviceRecord parse_device(std::string_view text) {
    DeviceRecord rec;
    bool in_table = false;
    bool has_note = false;
    std::size_t line_no = 0;

    std::size_t start = 0;
    while (start <= text.size()) {
        const auto end = text.find('\n', start);
        const auto raw = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
        start = end == std::string_view::npos ? text.size() + 1 : end + 1;
        ++line_no;

        const auto line = trim(raw);
        if (line.empty() || line.front() == '#') {
            continue;
        }

        if (!in_table) {
            if (line.starts_with("bit,")) {
                const auto header = split(line, ',');
                const bool base_ok = header.size() >= kColumns.size() &&
                                     std::equal(kColumns.begin(), kColumns.end(), header.begin());
                has_note = header.size() == kColumns.size() + 1 && header.back() == kNoteColumn;
                if (!base_ok || (header.size() != kColumns.size() && !has_note)) {
                    parse_fail(line_no, "expected header bit,junctions,step_pos_mA,step_zero_mA,step_neg_mA");
                }
                in_table = true;
                continue;
            }
            const auto eq = line.find('=');
            if (eq == std::string_view::npos) {
                parse_fail(line_no, "expected key=value metadata or the CSV header");
            }
            parse_metadata(rec.metadata, trim(line.substr(0, eq)), trim(line.substr(eq + 1)), line_no);
            continue;
        }

        const auto fields = split(line, ',');
        const auto row = rec.bits.size();
        const auto expected = kColumns.size() + (has_note ? 1 : 0);
        const auto where = [&](std::string_view column) {
            return "row " + std::to_string(row) + ", field " + std::string(column);
        };
        if (fields.size() > expected) {
            parse_fail(line_no, "row " + std::to_string(row) + ": too many fields");
        }
        for (std::size_t i = 0; i < kColumns.size(); ++i) {
            if (i >= fields.size() || fields[i].empty()) {
                parse_fail(line_no, where(kColumns[i]) + ": missing");
            }
        }

        BitMeasurement b;
        auto bit_text = fields[0];
        if (bit_text.starts_with('a')) {
            bit_text.remove_prefix(1);
        }
        const auto bit = to_int(bit_text);
        if (!bit || *bit != static_cast<std::int64_t>(row)) {
            parse_fail(line_no, where("bit") + ": expected bit index " + std::to_string(row));
        }
        b.bit = row;
        const auto junctions = to_int(fields[1]);
        if (!junctions || *junctions < 0) {
            parse_fail(line_no, where("junctions") + ": expected a non-negative integer");
        }
        b.junctions = *junctions;
        b.step_pos_ma = non_negative(fields[2], line_no, where(kColumns[2]));
        b.step_zero_ma = non_negative(fields[3], line_no, where(kColumns[3]));
        b.step_neg_ma = non_negative(fields[4], line_no, where(kColumns[4]));
        if (has_note && fields.size() == expected) {
            b.tolerance_note = std::string(fields[5]);
        }
        rec.bits.push_back(std::move(b));
    }

    if (!in_table) {
        fail(ErrorCode::ParseError, "missing CSV header bit,junctions,step_pos_mA,step_zero_mA,step_neg_mA");
    }
    if (rec.bits.empty()) {
        fail(ErrorCode::ParseError, "device file has no bit rows");
    }
    return rec;
}

DeviceRecord load_device(const std::filesystem::path &path) { return parse_device(io::read_file(path)); }

std::string serialize_device(const DeviceRecord &rec) {
    std::ostringstream out;
    const auto &m = rec.metadata;
    const auto put = [&](std::string_view key, const std::optional<double> &v) {
        if (v) {
            out << key << '=' << io::fixed(*v) << '\n';
        }
    };
    put("frequency_hz", m.frequency_hz);
    put("temperature_k", m.temperature_k);
    put("critical_current_ma", m.critical_current_ma);
    put("normal_resistance_mohm", m.normal_resistance_mohm);
    if (m.junction_length_um && m.junction_width_um) {
        out << "junction_um=" << io::fixed(*m.junction_length_um) << 'x' << io::fixed(*m.junction_width_um) << '\n';
    }
    put("current_density_ka_cm2", m.current_density_ka_cm2);
    put("rated_max_voltage_v", m.rated_max_voltage_v);
    put("rated_min_voltage_v", m.rated_min_voltage_v);

    const bool notes = std::any_of(rec.bits.begin(), rec.bits.end(),
                                   [](const BitMeasurement &b) { return !b.tolerance_note.empty(); });
    for (std::size_t i = 0; i < kColumns.size(); ++i) {
        out << (i ? "," : "") << kColumns[i];
    }
    out << (notes ? ",tolerance_note\n" : "\n");
    for (const auto &b : rec.bits) {
        out << b.bit << ',' << b.junctions << ',' << io::fixed(b.step_pos_ma) << ',' << io::fixed(b.step_zero_ma)
            << ',' << io::fixed(b.step_neg_ma);
        if (notes) {
            out << ',' << b.tolerance_note;
        }
        out << '\n';
    }
    return out.str();
}

MarginReport margin_report(const DeviceRecord &rec, double min_margin_ma) {
    if (rec.bits.empty()) {
        fail(ErrorCode::InvalidInput, "margin_report: record has no bits");
    }
    MarginReport r;
    r.threshold_ma = min_margin_ma;
    r.min_pos_ma = rec.bits.front().step_pos_ma;
    r.min_neg_ma = rec.bits.front().step_neg_ma;
    double pos_sum = 0.0;
    double neg_sum = 0.0;
    for (const auto &b : rec.bits) {
        r.min_pos_ma = std::min(r.min_pos_ma, b.step_pos_ma);
        r.min_neg_ma = std::min(r.min_neg_ma, b.step_neg_ma);
        pos_sum += b.step_pos_ma;
        neg_sum += b.step_neg_ma;
        if (b.step_pos_ma < min_margin_ma) {
            r.violations.push_back({b.bit, "positive", b.step_pos_ma});
        }
        if (b.step_neg_ma < min_margin_ma) {
            r.violations.push_back({b.bit, "negative", b.step_neg_ma});
        }
    }
    const auto n = static_cast<double>(rec.bits.size());
    r.mean_pos_ma = pos_sum / n;
    r.mean_neg_ma = neg_sum / n;
    for (const auto &b : rec.bits) {
        if (b.step_pos_ma == r.min_pos_ma) {
            r.min_pos_bits.push_back(b.bit);
        }
        if (b.step_neg_ma == r.min_neg_ma) {
            r.min_neg_bits.push_back(b.bit);
        }
    }
    return r;
}

std::vector<LintFinding> plausibility_lint(const DeviceRecord &rec) {
    std::vector<LintFinding> out;
    const auto &bits = rec.bits;
    struct Column {
        std::string_view name;
        double BitMeasurement::*field;
    };
    constexpr std::array<Column, 2> signed_steps{{{"step_pos_mA", &BitMeasurement::step_pos_ma},
                                                  {"step_neg_mA", &BitMeasurement::step_neg_ma}}};
    for (std::size_t i = 0; i < bits.size(); ++i) {
        for (const auto &col : signed_steps) {
            const double v = bits[i].*col.field;
            double neighbour = -1.0;
            if (i > 0) {
                neighbour = std::max(neighbour, bits[i - 1].*col.field);
            }
            if (i + 1 < bits.size()) {
                neighbour = std::max(neighbour, bits[i + 1].*col.field);
            }
            if (neighbour >= 0.0 && v > 2.0 * neighbour) {
                out.push_back({bits[i].bit, std::string(col.name),
                               io::fixed(v) + " mA is more than twice both neighbouring widths"});
            }
            if (v > 0.0 && v == bits[i].step_zero_ma) {
                out.push_back({bits[i].bit, std::string(col.name),
                               io::fixed(v) + " mA repeats the zero-step width"});
            }
        }
    }
    return out;
}

DefectMap infer_defects(const DeviceRecord &rec, const Sequence &nominal) {
    if (rec.bits.size() != nominal.size()) {
        fail(ErrorCode::InvalidInput, "device has " + std::to_string(rec.bits.size()) + " bits, nominal has " +
                                          std::to_string(nominal.size()));
    }
    DefectMap d;
    for (const auto &b : rec.bits) {
        const auto expected = nominal[b.bit];
        if (b.junctions > expected) {
            fail(ErrorCode::InvalidInput, "bit " + std::to_string(b.bit) + " measures " +
                                              std::to_string(b.junctions) + " junctions, nominal is " +
                                              std::to_string(expected));
        }
        d.set(b.bit, expected - b.junctions);
    }
    return d;
}

} // namespace nims
