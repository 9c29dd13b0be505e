#pragma once

#include "mindenom/laurent.hpp"

#include <optional>

namespace mindenom {

/**
 * Base-P digit expansion alpha = sum_i a_i P^{-i} for a monic irreducible
 * P: each digit is the unique residue representative of degree < deg P.
 */
struct PadicDigits {
    Poly base;                // P
    std::vector<Poly> digits; // a_1, ..., a_L

    std::size_t precision() const { return digits.size(); }
};

// Greedy expansion: a_1 = [alpha P], recurse on {alpha P}. Requires
// precision >= count * deg P (or an exact word).
PadicDigits to_padic_digits(const LaurentWord& w, const Poly& P, std::size_t count);

// Inverse: the Laurent word of sum a_i P^{-i} to the requested precision
// (at most L * deg P).
LaurentWord from_padic_digits(const PadicDigits& d, std::size_t precision);

// Smallest shift m >= 0 with a_{m+1} = ... = a_{m+run_len} = 0 inside the
// available digits, else nullopt.
std::optional<std::size_t> find_zero_run(const PadicDigits& d, std::size_t run_len);

} // namespace mindenom
