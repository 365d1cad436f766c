#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "nims/array_designer.hpp"
#include "nims/fault_tolerance.hpp"
#include "nims/sequence.hpp"

namespace nims::io {

std::string read_file(const std::filesystem::path &path);

// "1,3,8" or {"bits": [1, 3, 8]}.
Sequence parse_sequence(std::string_view text);

// Command-line form: a JSON sequence file, a device record (.csv, junction
// column), "binary:N", "ternary:N", or an inline list.
Sequence resolve_sequence(const std::string &arg);

std::string sequence_document(const Sequence &seq);

// {"defects": {"<bit>": count, ...}}
DefectMap parse_defect_map(std::string_view text);

// {"a0":2,"msb_size":5760,"target_total":92098,
//  "min_tolerance":[{"at_least":100,"tolerance":2}],"max_ratio":"3"}
DesignSpec parse_design_spec(std::string_view text);

// Shortest round-trip decimal in fixed notation.
std::string fixed(double value);

} // namespace nims::io
