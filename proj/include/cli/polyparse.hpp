#pragma once

#include <stdexcept>
#include <string>

#include "exactalg/poly.hpp"

namespace cli {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parses the polynomial grammar of the model files over chart coordinates
// x1..x<nvars>:
//
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/') unary)*
//   unary := '-' unary | power
//   power := atom ('^' INT)?
//   atom  := INT | x<k> | '(' expr ')'
//
// Division requires a nonzero constant divisor and '^' a nonnegative integer
// exponent. Throws ParseError naming the offending token.
exactalg::PolyScalar parse_poly(const std::string& text, int nvars);

// Canonical serialization; parse_poly(poly_to_string(p), nvars) == p and the
// serialization of the reparse is identical.
std::string poly_to_string(const exactalg::PolyScalar& p);

}  // namespace cli
