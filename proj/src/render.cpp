#include "nims/format.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "nims/io.hpp"

namespace nims {

namespace {

using ojson = nlohmann::ordered_json;

std::string dump(const ojson &doc) { return doc.dump(2) + "\n"; }

std::vector<std::int64_t> to_vector(const Sequence &seq) { return {seq.bits().begin(), seq.bits().end()}; }

std::string join_signs(const std::vector<int> &signs, char sep) {
    std::string out;
    for (std::size_t i = 0; i < signs.size(); ++i) {
        if (i) {
            out += sep;
        }
        out += std::to_string(signs[i]);
    }
    return out;
}

std::string opt_int(const std::optional<std::int64_t> &v, std::string_view none) {
    return v ? std::to_string(*v) : std::string(none);
}

ojson violation_json(const Violation &v) {
    ojson j;
    j["constraint"] = std::string(to_string(v.constraint));
    j["bit"] = v.bit;
    j["value"] = v.value;
    j["bound"] = v.bound;
    return j;
}

std::string describe(const Violation &v) {
    std::ostringstream s;
    s << to_string(v.constraint) << " at bit " << v.bit << ": ";
    switch (v.constraint) {
    case Constraint::Upper: s << v.value << " > " << v.bound; break;
    case Constraint::Lower: s << v.value << " <= " << v.bound; break;
    case Constraint::Positivity: s << v.value << " < " << v.bound; break;
    }
    return s.str();
}

ojson tolerance_json(const ToleranceReport &report) {
    ojson bits = ojson::array();
    for (const auto &b : report.bits) {
        ojson j;
        j["bit"] = b.bit;
        j["nominal"] = b.nominal;
        if (b.tolerance) {
            j["tolerance"] = *b.tolerance;
            j["proportion"] = b.fault_proportion->str();
        } else {
            j["tolerance"] = "unbounded";
            j["proportion"] = nullptr;
        }
        bits.push_back(j);
    }
    return bits;
}

ojson defects_json(const DefectMap &d) {
    ojson j = ojson::object();
    for (const auto &[bit, count] : d.entries()) {
        j[std::to_string(bit)] = count;
    }
    return j;
}

} // namespace

std::optional<Format> parse_format(std::string_view name) noexcept {
    if (name == "text") {
        return Format::Text;
    }
    if (name == "json") {
        return Format::Json;
    }
    if (name == "csv") {
        return Format::Csv;
    }
    return std::nullopt;
}

std::string render_validation(const Sequence &seq, const ValidationReport &report, Format fmt) {
    std::optional<PrefixSums> sums;
    if (report.complete_capable || std::all_of(seq.bits().begin(), seq.bits().end(), [](auto a) { return a >= 0; })) {
        sums = prefix_sums(seq);
    }
    std::vector<Rational> efficiency;
    if (seq.size() >= 2 && std::none_of(seq.bits().begin(), seq.bits().end(), [](auto a) { return a == 0; })) {
        efficiency = segmentation_efficiency(seq);
    }

    if (fmt == Format::Json) {
        ojson doc;
        doc["bits"] = to_vector(seq);
        doc["strict_valid"] = report.strict_valid;
        doc["complete_capable"] = report.complete_capable;
        doc["violations"] = ojson::array();
        for (const auto &v : report.violations) {
            doc["violations"].push_back(violation_json(v));
        }
        if (sums) {
            doc["A"] = sums->totals;
            doc["C"] = sums->offset_totals;
        }
        doc["segmentation_efficiency"] = ojson::array();
        for (const auto &r : efficiency) {
            doc["segmentation_efficiency"].push_back(r.str());
        }
        return dump(doc);
    }
    if (fmt == Format::Csv) {
        std::ostringstream out;
        out << "constraint,bit,value,bound\n";
        for (const auto &v : report.violations) {
            out << to_string(v.constraint) << ',' << v.bit << ',' << v.value << ',' << v.bound << '\n';
        }
        return out.str();
    }
    std::ostringstream out;
    out << "sequence          " << seq.str() << '\n';
    out << "strict valid      " << (report.strict_valid ? "yes" : "no") << '\n';
    out << "complete-capable  " << (report.complete_capable ? "yes" : "no") << '\n';
    if (sums) {
        out << "total A_N         " << sums->totals.back() << '\n';
    }
    if (!efficiency.empty()) {
        out << "efficiency        ";
        for (std::size_t i = 0; i < efficiency.size(); ++i) {
            out << (i ? " " : "") << efficiency[i].str();
        }
        out << '\n';
    }
    for (const auto &v : report.violations) {
        out << "violation         " << describe(v) << '\n';
    }
    return out.str();
}

std::string render_representation(const Representation &rep, Format fmt) {
    if (fmt == Format::Json) {
        ojson doc;
        doc["m"] = rep.target;
        doc["signs"] = rep.signs;
        doc["beta"] = rep.beta;
        return dump(doc);
    }
    if (fmt == Format::Csv) {
        return "m,expressed,beta,signs\n" + std::to_string(rep.target) + "," + std::to_string(rep.expressed) + "," +
               std::to_string(rep.beta) + "," + join_signs(rep.signs, ';') + "\n";
    }
    std::ostringstream out;
    out << "m       " << rep.target << '\n';
    out << "signs   " << join_signs(rep.signs, ' ') << "   (b_0 .. b_N)\n";
    out << "beta    " << rep.beta << '\n';
    out << "sum     " << rep.expressed << '\n';
    return out.str();
}

std::string render_range_check(const Sequence &seq, const RangeCheckReport &report, Format fmt) {
    if (fmt == Format::Json) {
        ojson doc;
        doc["bits"] = to_vector(seq);
        doc["lo"] = report.lo;
        doc["hi"] = report.hi;
        doc["checked"] = report.checked;
        doc["passed"] = report.passed;
        doc["failures"] = report.failures;
        return dump(doc);
    }
    if (fmt == Format::Csv) {
        return "lo,hi,checked,passed\n" + std::to_string(report.lo) + "," + std::to_string(report.hi) + "," +
               std::to_string(report.checked) + "," + std::to_string(report.passed) + "\n";
    }
    std::ostringstream out;
    out << "range   [" << report.lo << ", " << report.hi << "]\n";
    out << "passed  " << report.passed << "/" << report.checked << '\n';
    if (!report.failures.empty()) {
        out << "failing m:";
        for (const auto m : report.failures) {
            out << ' ' << m;
        }
        out << '\n';
    }
    return out.str();
}

std::string render_tolerance(const ToleranceReport &report, Format fmt) {
    if (fmt == Format::Json) {
        ojson doc;
        doc["bits"] = tolerance_json(report);
        return dump(doc);
    }
    std::ostringstream out;
    if (fmt == Format::Csv) {
        out << "bit,nominal,tolerance,proportion\n";
        for (const auto &b : report.bits) {
            out << b.bit << ',' << b.nominal << ',' << opt_int(b.tolerance, "unbounded") << ','
                << (b.fault_proportion ? b.fault_proportion->str() : "") << '\n';
        }
        return out.str();
    }
    out << std::left << std::setw(6) << "bit" << std::setw(12) << "nominal" << std::setw(12) << "tolerance"
        << "proportion\n";
    for (const auto &b : report.bits) {
        out << std::setw(6) << ("a" + std::to_string(b.bit)) << std::setw(12) << b.nominal << std::setw(12)
            << opt_int(b.tolerance, "-") << (b.fault_proportion ? b.fault_proportion->str() : "range only") << '\n';
    }
    return out.str();
}

std::string render_scan(const ScanReport &report, Format fmt) {
    if (fmt == Format::Json) {
        ojson doc;
        doc["budget"] = report.budget;
        doc["consistent"] = report.consistent();
        doc["bits"] = ojson::array();
        for (const auto &e : report.entries) {
            ojson j;
            j["bit"] = e.bit;
            j["nominal"] = e.nominal;
            if (e.tolerance) {
                j["tolerance"] = *e.tolerance;
            } else {
                j["tolerance"] = "unbounded";
            }
            j["status"] = e.safe ? "SAFE" : "UNSAFE";
            j["max_safe"] = e.max_safe;
            j["first_unsafe"] = e.first_unsafe ? ojson(*e.first_unsafe) : ojson(nullptr);
            j["oracle_complete_at_max_safe"] = e.oracle_complete_at_max_safe;
            j["oracle_complete_at_first_unsafe"] =
                e.oracle_complete_at_first_unsafe ? ojson(*e.oracle_complete_at_first_unsafe) : ojson(nullptr);
            doc["bits"].push_back(j);
        }
        return dump(doc);
    }
    std::ostringstream out;
    if (fmt == Format::Csv) {
        out << "bit,nominal,tolerance,status,max_safe,first_unsafe,oracle_max_safe,oracle_first_unsafe\n";
        for (const auto &e : report.entries) {
            out << e.bit << ',' << e.nominal << ',' << opt_int(e.tolerance, "unbounded") << ','
                << (e.safe ? "SAFE" : "UNSAFE") << ',' << e.max_safe << ',' << opt_int(e.first_unsafe, "") << ','
                << (e.oracle_complete_at_max_safe ? "complete" : "gap") << ','
                << (e.oracle_complete_at_first_unsafe ? (*e.oracle_complete_at_first_unsafe ? "complete" : "gap")
                                                       : "")
                << '\n';
        }
        return out.str();
    }
    out << "budget " << report.budget << " missing junctions per bit\n";
    out << std::left << std::setw(6) << "bit" << std::setw(10) << "nominal" << std::setw(11) << "tolerance"
        << std::setw(8) << "status" << "oracle\n";
    for (const auto &e : report.entries) {
        out << std::setw(6) << ("a" + std::to_string(e.bit)) << std::setw(10) << e.nominal << std::setw(11)
            << opt_int(e.tolerance, "-") << std::setw(8) << (e.safe ? "SAFE" : "UNSAFE")
            << (e.oracle_complete_at_max_safe ? "complete" : "GAP") << " at " << e.max_safe;
        if (e.first_unsafe) {
            out << ", " << (*e.oracle_complete_at_first_unsafe ? "complete" : "gap") << " at " << *e.first_unsafe;
        }
        out << '\n';
    }
    if (!report.consistent()) {
        out << "INCONSISTENT: a SAFE placement has oracle gaps\n";
    }
    return out.str();
}

std::string render_defects(const Sequence &nominal, const DefectMap &defects, const DefectOutcome &outcome,
                           std::optional<bool> oracle_complete, Format fmt) {
    if (fmt == Format::Json) {
        ojson doc;
        doc["nominal"] = to_vector(nominal);
        doc["defects"] = defects_json(defects);
        doc["bits"] = to_vector(outcome.defective);
        doc["strict_valid"] = outcome.validation.strict_valid;
        doc["complete_capable"] = outcome.validation.complete_capable;
        doc["oracle_complete"] = oracle_complete ? ojson(*oracle_complete) : ojson(nullptr);
        doc["violations"] = ojson::array();
        for (const auto &v : outcome.validation.violations) {
            doc["violations"].push_back(violation_json(v));
        }
        return dump(doc);
    }
    std::ostringstream out;
    if (fmt == Format::Csv) {
        out << "bit,nominal,missing,remaining\n";
        for (std::size_t n = 0; n < nominal.size(); ++n) {
            out << n << ',' << nominal[n] << ',' << defects.at(n) << ',' << outcome.defective[n] << '\n';
        }
        return out.str();
    }
    out << "defective         " << outcome.defective.str() << '\n';
    out << "missing           ";
    if (defects.empty()) {
        out << "none";
    }
    const char *sep = "";
    for (const auto &[bit, count] : defects.entries()) {
        out << sep << "a" << bit << ":" << count;
        sep = " ";
    }
    out << '\n';
    out << "complete-capable  " << (outcome.validation.complete_capable ? "yes" : "no") << '\n';
    out << "strict valid      " << (outcome.validation.strict_valid ? "yes" : "no") << '\n';
    if (oracle_complete) {
        out << "oracle            " << (*oracle_complete ? "complete" : "gaps") << '\n';
    }
    return out.str();
}

std::string render_design(const Design &d, Format fmt) {
    if (fmt == Format::Json) {
        ojson doc;
        doc["bits"] = to_vector(d.sequence);
        ojson meta;
        meta["lsb_bits"] = d.metadata.lsb_bits;
        meta["msb_banks"] = d.metadata.msb_banks;
        meta["trimmed_bank"] = d.metadata.trimmed_bank ? ojson(*d.metadata.trimmed_bank) : ojson(nullptr);
        meta["total"] = prefix_sums(d.sequence).totals.back();
        meta["branches"] = d.metadata.branches;
        meta["symmetric_halves"] = d.metadata.symmetric_halves;
        doc["metadata"] = meta;
        return dump(doc);
    }
    if (fmt == Format::Csv) {
        std::ostringstream out;
        out << "bit,junctions\n";
        for (std::size_t n = 0; n < d.sequence.size(); ++n) {
            out << n << ',' << d.sequence[n] << '\n';
        }
        return out.str();
    }
    std::ostringstream out;
    out << "bits        " << d.sequence.str() << '\n';
    out << "total       " << prefix_sums(d.sequence).totals.back() << '\n';
    out << "LSB bits    " << d.metadata.lsb_bits << '\n';
    out << "MSB banks   " << d.metadata.msb_banks;
    if (d.metadata.trimmed_bank) {
        out << " + trimmed bank of " << *d.metadata.trimmed_bank;
    }
    out << '\n';
    out << "branches    " << d.metadata.branches << (d.metadata.symmetric_halves ? " (symmetric halves)" : "")
        << '\n';
    return out.str();
}

std::string render_plan(const BiasPlan &p, Format fmt) {
    const auto &rep = p.representation;
    if (fmt == Format::Json) {
        // Written by hand: numbers stay in fixed notation.
        std::ostringstream out;
        out << "{\n";
        out << "  \"V\": " << io::fixed(p.target_voltage) << ",\n";
        out << "  \"f\": " << io::fixed(p.base_frequency) << ",\n";
        out << "  \"m\": " << p.m_target << ",\n";
        out << "  \"signs\": [" << join_signs(rep.signs, ',') << "],\n";
        out << "  \"beta\": " << rep.beta << ",\n";
        out << "  \"f_adjusted\": " << io::fixed(p.adjusted_frequency) << ",\n";
        out << "  \"in_band\": " << (p.in_band ? "true" : "false") << "\n";
        out << "}\n";
        return out.str();
    }
    if (fmt == Format::Csv) {
        return "V,f,m,expressed,beta,f_adjusted,V_achieved,shift,in_band,signs\n" + io::fixed(p.target_voltage) +
               "," + io::fixed(p.base_frequency) + "," + std::to_string(p.m_target) + "," +
               std::to_string(rep.expressed) + "," + std::to_string(rep.beta) + "," +
               io::fixed(p.adjusted_frequency) + "," + io::fixed(p.achieved_voltage) + "," +
               io::fixed(p.frequency_shift) + "," + (p.in_band ? "true" : "false") + "," +
               join_signs(rep.signs, ';') + "\n";
    }
    std::ostringstream out;
    out << std::setprecision(12);
    out << "target      " << p.target_voltage << " V\n";
    out << "frequency   " << p.base_frequency << " Hz\n";
    out << "m           " << p.m_target << " (bits " << rep.expressed << ", beta " << rep.beta << ")\n";
    out << "signs       " << join_signs(rep.signs, ' ') << '\n';
    out << "tuned f     " << p.adjusted_frequency << " Hz (shift " << p.frequency_shift << ")\n";
    out << "achieved    " << p.achieved_voltage << " V\n";
    out << "in band     " << (p.in_band ? "yes" : "no") << " [" << p.band.low_hz << ", " << p.band.high_hz
        << "] Hz\n";
    return out.str();
}

std::string render_comparison(const std::vector<LogicSummary> &rows, Format fmt) {
    if (fmt == Format::Json) {
        ojson doc = ojson::array();
        for (const auto &r : rows) {
            ojson j;
            j["bits"] = to_vector(r.sequence);
            j["lsb_bits"] = r.lsb_bits;
            j["min_efficiency"] = r.min_efficiency ? ojson(r.min_efficiency->str()) : ojson(nullptr);
            j["mean_efficiency"] = r.mean_efficiency ? ojson(*r.mean_efficiency) : ojson(nullptr);
            j["total"] = r.total;
            j["tolerance"] = tolerance_json(r.tolerance);
            doc.push_back(j);
        }
        return dump(doc);
    }
    std::ostringstream out;
    if (fmt == Format::Csv) {
        out << "candidate,bit,junctions,tolerance\n";
        for (std::size_t c = 0; c < rows.size(); ++c) {
            for (const auto &b : rows[c].tolerance.bits) {
                out << c << ',' << b.bit << ',' << b.nominal << ',' << opt_int(b.tolerance, "unbounded") << '\n';
            }
        }
        return out.str();
    }
    std::size_t height = 0;
    for (const auto &r : rows) {
        height = std::max(height, r.sequence.size());
    }
    out << std::left << std::setw(6) << "bit";
    for (std::size_t c = 0; c < rows.size(); ++c) {
        out << std::setw(10) << ("#" + std::to_string(c)) << std::setw(8) << "tol";
    }
    out << '\n';
    for (std::size_t n = 0; n < height; ++n) {
        out << std::setw(6) << ("a" + std::to_string(n));
        for (const auto &r : rows) {
            if (n < r.sequence.size()) {
                out << std::setw(10) << r.sequence[n] << std::setw(8) << opt_int(r.tolerance.bits[n].tolerance, "-");
            } else {
                out << std::setw(18) << "";
            }
        }
        out << '\n';
    }
    out << std::setw(6) << "LSBs";
    for (const auto &r : rows) {
        out << std::setw(18) << r.lsb_bits;
    }
    out << '\n' << std::setw(6) << "min";
    for (const auto &r : rows) {
        out << std::setw(18) << (r.min_efficiency ? r.min_efficiency->str() : "-");
    }
    out << '\n' << std::setw(6) << "mean";
    for (const auto &r : rows) {
        std::ostringstream v;
        if (r.mean_efficiency) {
            v << std::fixed << std::setprecision(3) << *r.mean_efficiency;
        } else {
            v << "-";
        }
        out << std::setw(18) << v.str();
    }
    out << '\n' << std::setw(6) << "total";
    for (const auto &r : rows) {
        out << std::setw(18) << r.total;
    }
    out << '\n';
    return out.str();
}

std::string render_device_summary(const DeviceSummary &s, Format fmt) {
    if (fmt == Format::Json) {
        ojson doc;
        doc["total_junctions"] = s.total_junctions;
        ojson margin;
        margin["threshold_mA"] = s.margin.threshold_ma;
        margin["pass"] = s.margin.pass();
        margin["min_pos_mA"] = s.margin.min_pos_ma;
        margin["min_pos_bits"] = s.margin.min_pos_bits;
        margin["mean_pos_mA"] = s.margin.mean_pos_ma;
        margin["min_neg_mA"] = s.margin.min_neg_ma;
        margin["min_neg_bits"] = s.margin.min_neg_bits;
        margin["mean_neg_mA"] = s.margin.mean_neg_ma;
        margin["violations"] = ojson::array();
        for (const auto &v : s.margin.violations) {
            margin["violations"].push_back({{"bit", v.bit}, {"step", std::string(v.step)}, {"width_mA", v.width_ma}});
        }
        doc["margin"] = margin;
        doc["lint"] = ojson::array();
        for (const auto &l : s.lint) {
            doc["lint"].push_back({{"bit", l.bit}, {"column", l.column}, {"message", l.message}});
        }
        doc["complete_capable"] = s.complete_capable;
        doc["oracle_complete"] = s.oracle_complete ? ojson(*s.oracle_complete) : ojson(nullptr);
        doc["frequency_hz"] = s.frequency_hz ? ojson(*s.frequency_hz) : ojson(nullptr);
        doc["max_voltage_v"] = s.max_voltage_v ? ojson(*s.max_voltage_v) : ojson(nullptr);
        doc["resolution_v"] = s.resolution_v ? ojson(*s.resolution_v) : ojson(nullptr);
        doc["fine_resolution_v"] = s.fine_resolution_v ? ojson(*s.fine_resolution_v) : ojson(nullptr);
        doc["ratings"] = ojson::array();
        for (const auto &r : s.ratings) {
            doc["ratings"].push_back({{"quantity", r.quantity},
                                      {"rated", r.rated},
                                      {"computed", r.computed},
                                      {"status", r.reconciled ? "reconciled" : "unreconciled"}});
        }
        if (s.tolerance) {
            doc["tolerance"] = tolerance_json(*s.tolerance);
        }
        if (s.defects) {
            doc["defects"] = defects_json(*s.defects);
            doc["defective_complete_capable"] = s.defect_outcome->validation.complete_capable;
        }
        return dump(doc);
    }
    std::ostringstream out;
    if (fmt == Format::Csv) {
        out << "bit,junctions,tolerance,margin_ok\n";
        for (std::size_t n = 0; s.tolerance && n < s.tolerance->bits.size(); ++n) {
            const auto &b = s.tolerance->bits[n];
            const bool ok = std::none_of(s.margin.violations.begin(), s.margin.violations.end(),
                                         [&](const MarginViolation &v) { return v.bit == b.bit; });
            out << b.bit << ',' << b.nominal << ',' << opt_int(b.tolerance, "unbounded") << ','
                << (ok ? "true" : "false") << '\n';
        }
        return out.str();
    }
    out << std::setprecision(6);
    out << "junctions         " << s.total_junctions << '\n';
    out << "complete-capable  " << (s.complete_capable ? "yes" : "no");
    if (s.oracle_complete) {
        out << " (oracle: " << (*s.oracle_complete ? "complete" : "gaps") << ")";
    }
    out << '\n';
    out << "margin            " << (s.margin.pass() ? "pass" : "FAIL") << " at " << s.margin.threshold_ma << " mA\n";
    out << "  positive step   min " << s.margin.min_pos_ma << " mA (bits";
    for (const auto b : s.margin.min_pos_bits) {
        out << " a" << b;
    }
    out << "), mean " << s.margin.mean_pos_ma << " mA\n";
    out << "  negative step   min " << s.margin.min_neg_ma << " mA (bits";
    for (const auto b : s.margin.min_neg_bits) {
        out << " a" << b;
    }
    out << "), mean " << s.margin.mean_neg_ma << " mA\n";
    for (const auto &v : s.margin.violations) {
        out << "  below margin    a" << v.bit << ' ' << v.step << ' ' << v.width_ma << " mA\n";
    }
    for (const auto &l : s.lint) {
        out << "lint              a" << l.bit << ' ' << l.column << ": " << l.message << '\n';
    }
    if (s.max_voltage_v) {
        out << "max voltage       " << *s.max_voltage_v << " V at " << io::fixed(*s.frequency_hz) << " Hz\n";
        out << "resolution        " << *s.resolution_v << " V (" << *s.fine_resolution_v
            << " V with frequency tuning)\n";
    }
    for (const auto &r : s.ratings) {
        out << "rated " << std::left << std::setw(20) << r.quantity << ' ' << r.rated << " vs computed " << r.computed
            << ": " << (r.reconciled ? "reconciled" : "UNRECONCILED") << '\n';
    }
    if (s.defects) {
        out << "inferred defects  ";
        if (s.defects->empty()) {
            out << "none";
        }
        const char *sep = "";
        for (const auto &[bit, count] : s.defects->entries()) {
            out << sep << "a" << bit << ":" << count;
            sep = " ";
        }
        out << "\ndefective array   "
            << (s.defect_outcome->validation.complete_capable ? "complete-capable" : "NOT complete-capable") << '\n';
    }
    return out.str();
}

std::string render_enumeration(const std::vector<Sequence> &seqs, Format fmt) {
    if (fmt == Format::Json) {
        ojson doc;
        doc["count"] = seqs.size();
        doc["sequences"] = ojson::array();
        for (const auto &s : seqs) {
            doc["sequences"].push_back(to_vector(s));
        }
        return dump(doc);
    }
    std::ostringstream out;
    if (fmt == Format::Csv) {
        out << "index,bits\n";
        for (std::size_t i = 0; i < seqs.size(); ++i) {
            out << i << ',' << '"' << seqs[i].str() << '"' << '\n';
        }
        return out.str();
    }
    for (const auto &s : seqs) {
        out << s.str() << '\n';
    }
    out << seqs.size() << " sequences\n";
    return out.str();
}

std::string render_oracle(const Sequence &seq, const IntervalSet &reach, bool a0_offset, Format fmt) {
    const auto total = prefix_sums(seq).totals.back();
    const auto gaps = reach.gaps(-total, total);
    const bool complete = gaps.empty();
    if (fmt == Format::Json) {
        ojson doc;
        doc["bits"] = to_vector(seq);
        doc["a0_offset"] = a0_offset;
        doc["total"] = total;
        doc["complete"] = complete;
        doc["reachable"] = ojson::array();
        for (const auto &iv : reach.intervals()) {
            doc["reachable"].push_back({iv.lo, iv.hi});
        }
        doc["gaps"] = ojson::array();
        for (const auto &iv : gaps.intervals()) {
            doc["gaps"].push_back({iv.lo, iv.hi});
        }
        return dump(doc);
    }
    std::ostringstream out;
    if (fmt == Format::Csv) {
        out << "kind,lo,hi\n";
        for (const auto &iv : reach.intervals()) {
            out << "reachable," << iv.lo << ',' << iv.hi << '\n';
        }
        for (const auto &iv : gaps.intervals()) {
            out << "gap," << iv.lo << ',' << iv.hi << '\n';
        }
        return out.str();
    }
    out << "total      " << total << '\n';
    out << "reachable  " << reach.cardinality() << " integers in " << reach.intervals().size() << " interval(s)";
    if (a0_offset) {
        out << " (with a_0 residual)";
    }
    out << '\n';
    out << "complete   " << (complete ? "yes" : "no") << " over [-" << total << ", " << total << "]\n";
    std::size_t shown = 0;
    for (const auto &iv : gaps.intervals()) {
        if (++shown > 20) {
            out << "  ... " << gaps.intervals().size() - 20 << " more gaps\n";
            break;
        }
        out << "  gap [" << iv.lo << ", " << iv.hi << "]\n";
    }
    return out.str();
}

std::string render_error(std::string_view code, std::string_view message, Format fmt) {
    if (fmt == Format::Json) {
        ojson doc;
        doc["error"] = {{"code", std::string(code)}, {"message", std::string(message)}};
        return dump(doc);
    }
    if (fmt == Format::Csv) {
        std::string escaped;
        for (const char c : message) {
            escaped += c == '"' ? std::string("\"\"") : std::string(1, c);
        }
        return "error,message\n" + std::string(code) + ",\"" + escaped + "\"\n";
    }
    return "error: " + std::string(code) + ": " + std::string(message) + "\n";
}

} // namespace nims
