#pragma once

#include "mindenom/poly.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace mindenom {

/**
 * Complete factorization into monic irreducibles: unit * prod f_i^{e_i}.
 * Factors are pairwise distinct and sorted by poly_less.
 */
struct Factorization {
    FieldElem unit;
    std::vector<std::pair<Poly, int>> factors;

    Poly reassemble() const;
    int prime_count() const { return static_cast<int>(factors.size()); } // distinct primes
    bool square_free() const;
};

bool is_irreducible(const Poly& p);
Factorization factor(const Poly& a); // a != 0 (trial division; desk-scale degrees)
std::vector<Poly> monic_irreducibles(const Field& f, int deg);

/**
 * The monic-divisor lattice of a monic Q: S(Q) sorted by poly_less
 * (always contains 1 and Q), D(Q) = |S(Q)|, and the Möbius values
 * mu(D) in {-1,0,1} aligned with divisors.
 */
struct DivisorLattice {
    std::vector<Poly> divisors;
    std::vector<int> mobius;
    std::uint64_t count = 0; // D(Q)

    int mobius_of(const Poly& d) const; // throws if d is not a divisor
};

DivisorLattice divisor_lattice(const Poly& q); // q monic, nonzero
int mobius(const Poly& q);
std::uint64_t divisor_count(const Poly& q);

/**
 * Phi(Q) = #{P : deg P < deg Q, gcd(P, Q) = 1}, computed as the Möbius
 * sum  sum_{D|Q} mu(Q/D) q^{deg D}  and cross-checked against the direct
 * count whenever the enumeration is small; the two must agree.
 */
std::uint64_t totient(const Poly& q);
std::uint64_t totient_direct(const Poly& q); // definition-level enumeration

} // namespace mindenom
