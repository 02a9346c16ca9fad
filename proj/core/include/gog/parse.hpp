#pragma once

#include <string>

#include "gog/gogspec.hpp"

namespace gog {

// gogspec-v1 JSON. Exponents are decimal integers; values beyond the range
// JSON numbers can carry exactly may be given as decimal strings.
SpecDocument parse_document(const std::string& text);  // throws SyntaxError only
GraphOfGroupsSpec parse_spec(const std::string& text);  // parse + validate, throws typed errors

std::string serialize_spec(const GraphOfGroupsSpec& spec);  // canonical field order, sorted records

}  // namespace gog
