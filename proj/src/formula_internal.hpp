// Token-level formula parsing, for embedding formulas in larger files.
#pragma once

#include <cstddef>
#include <vector>

#include "lexer.hpp"
#include "protomc/formula.hpp"

namespace protomc::detail {

// Parses one formula starting at tokens[pos]; pos is left just past it.
FormulaPtr parse_formula_at(const std::vector<Token>& tokens, std::size_t& pos);

}  // namespace protomc::detail
