#pragma once

#include <string_view>

#include "dgal/ratfunc.hpp"

namespace dgal {

// Parses the expression grammar: + - * / ^ (integer exponents), parentheses,
// integer literals and variable names from the jet lexicon.
RatFunc parse_expr(std::string_view text);

// Shorthand used heavily in tests and scenario tables.
inline RatFunc operator""_rf(const char* text, std::size_t len) { return parse_expr(std::string_view(text, len)); }

}  // namespace dgal
