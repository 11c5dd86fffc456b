#pragma once

// JSON module files:
//   {"field": "rationals" | {"prime": p},
//    "A": {"rows": r, "cols": c, "entries": ["1", "-2/3", ...]}, "B": ..., "C": ..., "D": ...}
// Entries are row-major strings; rows and cols are explicit so empty matrices
// keep their shape. An optional "dim" array is checked against the matrices.

#include <string>
#include <string_view>

#include "fsa/lambda_module.hpp"

namespace fsa {

// Pretty-printed with a trailing newline; includes "dim".
std::string serialize_module(const LambdaModule& m);
// Single line, no "dim".
std::string serialize_module_compact(const LambdaModule& m);

// ParseError on malformed input, DimensionMismatch on inconsistent shapes.
LambdaModule parse_module(std::string_view text);
LambdaModule read_module_file(const std::string& path);

}  // namespace fsa
