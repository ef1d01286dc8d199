#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "seshadri/poly/polynomial.hpp"

namespace seshadri {

using VariableNames = std::vector<std::string>;

/// Names prefix+start, prefix+(start+1), ... (e.g. x0..x3).
VariableNames indexed_names(const std::string& prefix, std::size_t count, std::size_t start = 0);

/// Parses an expression in the grammar
///
///   expr   := ["+"|"-"] term (("+"|"-") term)*
///   term   := factor ("*" factor)*
///   factor := base ("^" nat)?
///   base   := ident | int ("/" nat)? | "(" expr ")"
///
/// and returns the expanded polynomial in grevlex order. Throws ParseError
/// (with byte position) on syntax errors, unknown variables and division.
Poly parse_polynomial(std::string_view expr, const VariableNames& vars);

/// Renders a polynomial in the same grammar, so the output re-parses exactly.
std::string to_string(const Poly& f, const VariableNames& vars);
std::string to_string(const PolyZp& f, const VariableNames& vars);

}  // namespace seshadri
