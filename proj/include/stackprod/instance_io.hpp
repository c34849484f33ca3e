#pragma once

#include <string>
#include <string_view>

#include "stackprod/instance.hpp"

namespace stackprod {

// Instance file format:
//   {"facilities": [{"p": "12", "a": "9/10"}, ...], "R_l": "5", "R_f": "7/4"}
// Values may be fraction or decimal strings; JSON numbers are accepted too.
// Facility order is the original id order. Throws Error(kParse) with a
// line:column or facility context.
RawInstance parse_instance_json(std::string_view text);

// Reads and parses a file; I/O failures are reported as kParse.
RawInstance read_instance_file(const std::string& path);

// Canonical serialization with fraction strings.
std::string instance_to_json(const RawInstance& raw);

}  // namespace stackprod
