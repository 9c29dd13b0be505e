#pragma once

#include "mindenom/poly.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace mindenom {

/**
 * Truncated Laurent word: the first K digits (alpha_1, ..., alpha_K) of
 * alpha = sum_i alpha_i x^{-i}, an element of the unit ideal (|alpha| <=
 * q^{-1}). Precision is explicit and enforced: digit(i) beyond K throws
 * unless the word is exact, in which case the tail is known to be zero.
 */
class LaurentWord {
public:
    LaurentWord(const Field& f, std::vector<FieldElem> digits, bool exact = false);
    static LaurentWord zeros(const Field& f, std::size_t precision, bool exact = false);

    const Field& field() const { return field_; }
    std::size_t precision() const { return digits_.size(); }
    bool exact() const { return exact_; }

    FieldElem digit(std::size_t i) const; // 1-based
    bool has_digit(std::size_t i) const { return exact_ || i <= digits_.size(); }
    std::span<const FieldElem> digits() const { return digits_; }

    bool zero_through(std::size_t j) const; // digits 1..j all zero

    bool operator==(const LaurentWord& o) const;

private:
    Field field_;
    std::vector<FieldElem> digits_;
    bool exact_;
};

/**
 * First `precision` digits of num/den (exact long division). Requires
 * den != 0 and deg num < deg den; the result is exact iff the remainder
 * vanishes by the last step.
 */
LaurentWord from_rational(const Poly& num, const Poly& den, std::size_t precision);

struct FracMulResult {
    Poly integer_part;     // [Q alpha], degree <= deg Q - 1
    LaurentWord fractional; // {Q alpha} to precision K - deg Q (K when exact)
};

// Requires precision >= deg Q. Exact given the input digits.
FracMulResult frac_mul(const Poly& q, const LaurentWord& w);

// |w| = q^{-v} for the first nonzero digit index v; nullopt when all K
// digits vanish (|w| <= q^{-(K+1)}, or exactly 0 for exact words).
std::optional<std::size_t> abs_exponent(const LaurentWord& w);

// Enumeration of F_q^k words: odometer over the canonical element order,
// alpha_1 fastest.
std::uint64_t word_count(const Field& f, std::size_t k);
LaurentWord word_at(const Field& f, std::size_t k, std::uint64_t index);

} // namespace mindenom
