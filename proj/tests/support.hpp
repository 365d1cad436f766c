// Fixture readers and independent oracles shared by the test binaries. The
// oracles deliberately avoid the library: plain 3^n enumeration, a boolean
// DP, and constants recomputed from e and h.
#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#ifndef NIMS_DATA_DIR
#error "NIMS_DATA_DIR must point at the data/ fixtures"
#endif

namespace testing {

inline std::string data_path(const std::string &name) { return std::string(NIMS_DATA_DIR) + "/" + name; }

inline std::string slurp(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Header row plus string cells; enough for the transcribed tables.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::size_t column(const std::string &name) const {
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (header[i] == name) {
                return i;
            }
        }
        throw std::runtime_error("no column " + name);
    }
    std::vector<std::string> strings(const std::string &name) const {
        std::vector<std::string> out;
        const auto c = column(name);
        for (const auto &r : rows) {
            out.push_back(r.at(c));
        }
        return out;
    }
    std::vector<std::int64_t> ints(const std::string &name) const {
        std::vector<std::int64_t> out;
        for (const auto &s : strings(name)) {
            out.push_back(std::stoll(s));
        }
        return out;
    }
};

inline Table read_table(const std::string &name) {
    std::istringstream in(slurp(data_path(name)));
    Table t;
    std::string line;
    const auto split = [](const std::string &l) {
        std::vector<std::string> cells;
        std::stringstream ss(l);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            cells.push_back(cell);
        }
        return cells;
    };
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        if (first) {
            t.header = split(line);
            first = false;
        } else {
            t.rows.push_back(split(line));
        }
    }
    return t;
}

// Junction column of the device record, read without the library parser.
inline std::vector<std::int64_t> table5_junctions() {
    std::istringstream in(slurp(data_path("table5.csv")));
    std::string line;
    std::vector<std::int64_t> out;
    bool rows = false;
    while (std::getline(in, line)) {
        if (line.rfind("bit,", 0) == 0) {
            rows = true;
            continue;
        }
        if (rows && !line.empty()) {
            const auto a = line.find(',');
            const auto b = line.find(',', a + 1);
            out.push_back(std::stoll(line.substr(a + 1, b - a - 1)));
        }
    }
    return out;
}

inline std::int64_t sum(const std::vector<std::int64_t> &bits) {
    std::int64_t s = 0;
    for (auto b : bits) {
        s += b;
    }
    return s;
}

// Every sum of b_n a_n with b_n in {-1,0,1}, by walking all 3^n sign vectors.
inline std::set<std::int64_t> brute_force_sums(const std::vector<std::int64_t> &bits) {
    if (bits.size() > 14) {
        throw std::runtime_error("brute force limited to 14 bits");
    }
    std::set<std::int64_t> out;
    std::vector<int> digits(bits.size(), -1);
    for (;;) {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < bits.size(); ++i) {
            s += digits[i] * bits[i];
        }
        out.insert(s);
        std::size_t i = 0;
        while (i < digits.size() && digits[i] == 1) {
            digits[i++] = -1;
        }
        if (i == digits.size()) {
            break;
        }
        ++digits[i];
    }
    return out;
}

// Reachable flags over [-A_N, A_N] by a dense boolean DP.
inline std::vector<bool> dense_reachable(const std::vector<std::int64_t> &bits) {
    const std::int64_t total = sum(bits);
    std::vector<bool> cur(static_cast<std::size_t>(2 * total + 1), false);
    cur[static_cast<std::size_t>(total)] = true;
    for (auto a : bits) {
        std::vector<bool> next(cur.size(), false);
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(cur.size()); ++i) {
            if (!cur[static_cast<std::size_t>(i)]) {
                continue;
            }
            for (std::int64_t j : {i - a, i, i + a}) {
                if (j >= 0 && j < static_cast<std::int64_t>(cur.size())) {
                    next[static_cast<std::size_t>(j)] = true;
                }
            }
        }
        cur.swap(next);
    }
    return cur;
}

// Complete up to the residual |beta| <= a_0 - 1: every m in [-A_N, A_N] lies
// within a_0 - 1 of some reachable sum.
inline bool dense_complete(const std::vector<std::int64_t> &bits) {
    const auto reach = dense_reachable(bits);
    const std::int64_t slack = bits.front() - 1;
    const std::int64_t n = static_cast<std::int64_t>(reach.size());
    std::int64_t last = -1'000'000'000;
    for (std::int64_t i = 0; i < n; ++i) {
        if (reach[static_cast<std::size_t>(i)]) {
            last = i;
        }
        bool near = i - last <= slack;
        for (std::int64_t j = i + 1; !near && j <= i + slack && j < n; ++j) {
            near = reach[static_cast<std::size_t>(j)];
        }
        if (!near) {
            return false;
        }
    }
    return true;
}

inline std::int64_t ceil_div3(std::int64_t x) { return (x + 2) / 3; }

// Missing junctions bit n can lose and still keep 3 a_n' >= a_{n+1}.
inline std::int64_t tolerance_formula(std::int64_t a_n, std::int64_t a_next) {
    const std::int64_t t = a_n - ceil_div3(a_next);
    return t > 0 ? t : 0;
}

// K_J = 2e/h from the exact SI values, in long double.
inline long double josephson_constant() {
    const long double e = 1.602176634e-19L;
    const long double h = 6.62607015e-34L;
    return 2.0L * e / h;
}

} // namespace testing
