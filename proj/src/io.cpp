#include "nims/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nims/device_data.hpp"
#include "nims/error.hpp"

namespace nims::io {

namespace {

using nlohmann::json;

json parse_json(std::string_view text, const char *what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        fail(ErrorCode::ParseError, std::string(what) + ": " + e.what());
    }
}

std::int64_t as_int(const json &j, const std::string &where) {
    if (!j.is_number_integer()) {
        fail(ErrorCode::ParseError, where + ": expected an integer");
    }
    return j.get<std::int64_t>();
}

std::vector<std::int64_t> parse_list(std::string_view text) {
    std::vector<std::int64_t> bits;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find(',', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        auto item = text.substr(start, end - start);
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) {
            item.remove_prefix(1);
        }
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) {
            item.remove_suffix(1);
        }
        std::int64_t v = 0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
            fail(ErrorCode::ParseError, "not an integer list element: '" + std::string(item) + "'");
        }
        bits.push_back(v);
        start = end + 1;
    }
    return bits;
}

} // namespace

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        fail(ErrorCode::IoError, "cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Sequence parse_sequence(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        fail(ErrorCode::ParseError, "empty sequence text");
    }
    if (text[first] != '{') {
        auto body = text.substr(first);
        while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) {
            body.remove_suffix(1);
        }
        return Sequence(parse_list(body));
    }
    const auto doc = parse_json(text, "sequence document");
    if (!doc.contains("bits") || !doc["bits"].is_array() || doc["bits"].empty()) {
        fail(ErrorCode::ParseError, "sequence document needs a non-empty \"bits\" array");
    }
    std::vector<std::int64_t> bits;
    for (std::size_t i = 0; i < doc["bits"].size(); ++i) {
        bits.push_back(as_int(doc["bits"][i], "bits[" + std::to_string(i) + "]"));
    }
    return Sequence(std::move(bits));
}

Sequence resolve_sequence(const std::string &arg) {
    for (const auto &[prefix, kind] :
         {std::pair{std::string_view("binary:"), StandardKind::Binary},
          std::pair{std::string_view("ternary:"), StandardKind::Ternary}}) {
        if (std::string_view(arg).starts_with(prefix)) {
            const auto count = parse_list(std::string_view(arg).substr(prefix.size()));
            if (count.size() != 1 || count[0] < 1) {
                fail(ErrorCode::ParseError, "expected " + std::string(prefix) + "<count>");
            }
            return make_standard(kind, static_cast<std::size_t>(count[0]));
        }
    }
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
        if (std::filesystem::path(arg).extension() == ".csv") {
            return load_device(arg).junctions();
        }
        return parse_sequence(read_file(arg));
    }
    return parse_sequence(arg);
}

std::string sequence_document(const Sequence &seq) {
    nlohmann::ordered_json doc;
    doc["bits"] = std::vector<std::int64_t>(seq.bits().begin(), seq.bits().end());
    return doc.dump();
}

DefectMap parse_defect_map(std::string_view text) {
    const auto doc = parse_json(text, "defect map");
    if (!doc.is_object() || !doc.contains("defects") || !doc["defects"].is_object()) {
        fail(ErrorCode::ParseError, "defect map needs a \"defects\" object");
    }
    DefectMap d;
    for (const auto &[key, value] : doc["defects"].items()) {
        std::size_t bit = 0;
        const auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), bit);
        if (key.empty() || ec != std::errc{} || ptr != key.data() + key.size()) {
            fail(ErrorCode::ParseError, "defect key '" + key + "' is not a bit index");
        }
        const auto count = as_int(value, "defects." + key);
        if (count < 0) {
            fail(ErrorCode::ParseError, "defects." + key + ": negative count");
        }
        d.set(bit, count);
    }
    return d;
}

DesignSpec parse_design_spec(std::string_view text) {
    const auto doc = parse_json(text, "design spec");
    if (!doc.is_object()) {
        fail(ErrorCode::ParseError, "design spec must be an object");
    }
    const auto required = [&](const char *key) {
        if (!doc.contains(key)) {
            fail(ErrorCode::ParseError, std::string("design spec: missing \"") + key + "\"");
        }
        return as_int(doc[key], key);
    };
    DesignSpec spec;
    spec.a0 = required("a0");
    spec.msb_size = required("msb_size");
    spec.target_total = required("target_total");
    if (doc.contains("min_tolerance")) {
        const auto &rules = doc["min_tolerance"];
        if (!rules.is_array()) {
            fail(ErrorCode::ParseError, "design spec: min_tolerance must be an array");
        }
        for (std::size_t i = 0; i < rules.size(); ++i) {
            const auto where = "min_tolerance[" + std::to_string(i) + "]";
            if (!rules[i].is_object() || !rules[i].contains("at_least") || !rules[i].contains("tolerance")) {
                fail(ErrorCode::ParseError, where + ": needs at_least and tolerance");
            }
            spec.min_tolerance.push_back(
                {as_int(rules[i]["at_least"], where + ".at_least"), as_int(rules[i]["tolerance"], where + ".tolerance")});
        }
    }
    if (doc.contains("max_ratio")) {
        const auto &r = doc["max_ratio"];
        if (r.is_string()) {
            spec.max_ratio = Rational::parse(r.get<std::string>());
        } else {
            spec.max_ratio = Rational(as_int(r, "max_ratio"));
        }
    }
    if (doc.contains("branches")) {
        const auto b = as_int(doc["branches"], "branches");
        if (b < 1) {
            fail(ErrorCode::ParseError, "branches must be positive");
        }
        spec.branches = static_cast<std::size_t>(b);
    }
    if (doc.contains("symmetric_halves")) {
        if (!doc["symmetric_halves"].is_boolean()) {
            fail(ErrorCode::ParseError, "symmetric_halves must be a boolean");
        }
        spec.symmetric_halves = doc["symmetric_halves"].get<bool>();
    }
    return spec;
}

std::string fixed(double value) {
    char buf[400];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed);
    if (ec != std::errc{}) {
        return "nan";
    }
    std::string out(buf, ptr);
    return out == "-0" ? "0" : out;
}

} // namespace nims::io
