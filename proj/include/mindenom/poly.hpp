#pragma once

#include "mindenom/field.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace mindenom {

/**
 * Dense polynomial over F_q, ascending coefficients, trailing zeros
 * stripped. degree() is -1 for the zero polynomial. |f| = q^{deg f}.
 */
class Poly {
public:
    explicit Poly(const Field& f) : field_(f) {}
    Poly(const Field& f, std::vector<FieldElem> coeffs);

    static Poly constant(const FieldElem& c);
    static Poly x(const Field& f);
    static Poly monomial(const Field& f, std::size_t e); // x^e

    const Field& field() const { return field_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    FieldElem coeff(std::size_t i) const; // zero beyond degree
    FieldElem leading() const;            // throws on zero polynomial
    std::span<const FieldElem> coeffs() const { return c_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const FieldElem& s) const;

    Poly made_monic() const; // divide by the leading coefficient

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

private:
    Field field_;
    std::vector<FieldElem> c_;
    void trim();
};

struct DivModResult {
    Poly quot;
    Poly rem;
};

// a = quot*b + rem, deg rem < deg b. Throws on zero divisor.
DivModResult poly_divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& a);

// Monic gcd. Throws on gcd(0,0).
Poly poly_gcd(const Poly& a, const Poly& b);

Poly poly_pow(const Poly& base, std::uint32_t e);

// Total order: degree first, then coefficient vectors compared
// lexicographically from the constant term up (the canonical order used
// for tie-breaking and report row ordering).
bool poly_less(const Poly& a, const Poly& b);
struct PolyLess {
    bool operator()(const Poly& a, const Poly& b) const { return poly_less(a, b); }
};

// Monic polynomials of degree d, canonical enumeration: index ascending
// matches poly_less within the degree.
std::uint64_t monic_count(const Field& f, int d); // q^d
Poly monic_at(const Field& f, int d, std::uint64_t index);
void for_each_monic(const Field& f, int d, const std::function<void(const Poly&)>& fn);

} // namespace mindenom
