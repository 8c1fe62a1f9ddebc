#pragma once

#include <set>
#include <string>
#include <string_view>

#include "socle3/polynomial.hpp"

namespace socle3 {

struct ParseResult {
  Polynomial value;
  // 0-based indices of the variables that occur in the text.
  std::set<std::size_t> consumed_variables;
};

// Grammar (whitespace between tokens is ignored):
//   poly   := [sign] term (sign term)*
//   term   := coeff ('*' power)* | power ('*' power)*
//   coeff  := digits ['/' digits]
//   power  := letter digits ['^' digits]
// where letter is 'x' for VarSpace::Ring and 'y' for VarSpace::Dual, and variable indices
// run from 1 to num_vars. Errors throw ParseError carrying the offending offset.
ParseResult parse_poly_detailed(std::string_view text, VarSpace space, std::size_t num_vars);
Polynomial parse_poly(std::string_view text, VarSpace space, std::size_t num_vars);

// Canonical text: terms by descending degree, x1^d first within a degree, coefficients as
// reduced fractions, " + " / " - " separators. The zero polynomial prints as "0".
std::string print_poly(const Polynomial& p);
std::string print_monomial(const Monomial& m, VarSpace space);

}  // namespace socle3
