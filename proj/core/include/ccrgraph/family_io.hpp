#pragma once

#include "ccrgraph/setfam.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace ccrgraph::setfam {

// First line "m=<int>", then one member per line as comma-separated element
// indices; an empty line is the empty set. '#' starts a comment. Throws ParseError.
SetFamily parse_family(std::string_view text);
SetFamily read_family(std::istream& in);
std::string format_family(const SetFamily& fam);

} // namespace ccrgraph::setfam
