#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "degree_forge/family.hpp"

namespace degree_forge {

// Text format: a header line "n k", then one member per line as strictly
// increasing comma-separated vertices ("1,2,5"). Blank lines and lines whose
// first non-space character is '#' are ignored. Members may appear in any
// order; writers always emit lexicographic order.
//
// Throws ParseError carrying the 1-based line number.
UniformFamily read_family(std::istream& in);
UniformFamily parse_family(std::string_view text);

void write_family(std::ostream& out, const UniformFamily& family);
std::string format_family(const UniformFamily& family);

}  // namespace degree_forge
