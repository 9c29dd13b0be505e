#pragma once

#include "mindenom/poly.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mindenom {

/**
 * Field-element literals: a decimal integer ("2"; for extension fields it
 * is read as the canonical element index), or an expression in the
 * generator t ("t", "1+t", "2*t^2+1", implicit "*" allowed).
 */
FieldElem parse_elem(const Field& f, std::string_view s);

/**
 * Polynomial literals: ascending coefficient CSV ("1,1,0,1" = 1+x+x^3) or
 * symbolic in x ("x^3+x+1"); extension coefficients bracketed in t, e.g.
 * "[1+t]*x^2+[t]".
 */
Poly parse_poly(const Field& f, std::string_view s);

// Digit strings for words: element literals, comma separated ("1,0,1").
std::vector<FieldElem> parse_digits(const Field& f, std::string_view s);

std::string to_string(const FieldElem& e);
std::string to_string(const Poly& p); // symbolic, descending powers
std::string digits_to_string(std::span<const FieldElem> digits);

} // namespace mindenom
