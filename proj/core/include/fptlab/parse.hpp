#ifndef FPTLAB_PARSE_HPP
#define FPTLAB_PARSE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fptlab/polyring.hpp"

namespace fptlab {

// expr   := ['+'|'-'] term (('+'|'-') term)*
// term   := factor ('*'? factor)*
// factor := (INT | VAR | '(' expr ')') ('^' INT)?
//
// Without `vars` the variables are taken in order of first appearance.
// Throws ParseError (with position) and UnknownVariable.
SparsePoly parse_polynomial(std::string_view text, Prime p,
                            const std::optional<std::vector<std::string>>& vars = std::nullopt);

// Parses into an existing ring; every identifier must be one of its variables.
SparsePoly parse_polynomial(std::string_view text, const RingPtr& ring);

// Identifiers in order of first appearance. Throws ParseError on bad tokens.
std::vector<std::string> collect_variables(std::string_view text);

}  // namespace fptlab

#endif  // FPTLAB_PARSE_HPP
