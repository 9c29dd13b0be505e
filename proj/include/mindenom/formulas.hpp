#pragma once

#include "mindenom/factor.hpp"
#include "mindenom/rational.hpp"

#include <cstdint>
#include <vector>

namespace mindenom {

/**
 * Closed-form evaluators. Every function evaluates its printed expression
 * verbatim and exactly; validity ranges are a separate concern handled by
 * the census reports (interior ranges are asserted, the rest is compared
 * and logged). The exhaustive censuses are the ground truth throughout.
 */

// |f| = q^{deg f} (and |0| = 0).
Int poly_abs(const Poly& p);

// Point mass of the degree distribution. Piecewise: k = 1 gives (1/q,
// (q-1)/q); k >= 2 gives q^{-k} at d = 0, (q-1)/q^{k-2d+1} for
// 1 <= d <= ceil(k/2), and 0 beyond.
Rational pmf_deg_closed_form(std::uint32_t q, std::size_t k, std::size_t d);

// Exhaustive counts match the closed form exactly in this range.
bool pmf_deg_interior(std::size_t k, std::size_t d);

// Closed form of the expected degree; exact only at k = 1 (the k >= 2
// display has a known slip and is evaluated for the discrepancy report).
Rational expectation_closed_form(std::uint32_t q, std::size_t k);

// sum d * pmf[d] over any supplied pmf (empirical or formula values).
Rational expectation_from_pmf(const std::vector<Rational>& pmf);

// Point mass of the minimal-denominator distribution via the totient:
// Phi(Q)/q^k. Exact in the regime 2 deg Q <= k.
Rational qmin_mass_totient(const Poly& q, std::size_t k);
bool qmin_mass_interior(const Poly& q, std::size_t k);

// The printed inclusion-exclusion expression for the same mass, read
// literally: |Q| plus, for every proper monic divisor N, |N| times the
// alternating sum over tuple lengths of the primitive-tuple counts of
// Q/N (the sum runs while the count is nonzero). Discrepancy-report
// material only; the enumeration-backed tuple counts are used inside.
Rational qmin_mass_closed_form_verbatim(const Poly& q, std::size_t k);

// Ordered tuples of `len` distinct monic divisors of Q of degree
// < deg Q with gcd 1: exhaustive count (ground truth) and the printed
// falling-factorial expression.
std::uint64_t primitive_tuple_count_enum(const Poly& q, std::size_t len);
std::int64_t primitive_tuple_count_closed_form(const Poly& q, std::size_t len);

// Upper bound q^{-(kn-(n+1)d)} for the joint low-degree mass.
Rational joint_low_degree_bound(std::uint32_t q, std::size_t k, std::size_t n, std::size_t d);

// Exact joint zero-degree mass q^{-nk}.
Rational joint_zero_mass(std::uint32_t q, std::size_t k, std::size_t n);

// Number of h x h Hankel matrices of the given rank: 1 at rank 0,
// q^{2r-2}(q^2-1) for 0 < r < h, q^{2h-2}(q-1) at full rank.
Int square_rank_count_closed_form(std::size_t r, std::size_t h, std::uint32_t q);

// Number of k x l Hankel matrices of rank at most r (r <= min(k,l)-1): q^{2r}.
Int low_rank_count_closed_form(std::size_t r, std::uint32_t q);

/**
 * Block count |P|^k - |P|^{2(d-1)} together with the dimension it
 * exponentiates to: log_q(count) / (k deg P). The census of residue-field
 * blocks is the ground truth; d = 1 is exact, d >= 2 is compared and
 * logged.
 */
struct BlockDimension {
    Int count;                  // |P|^k - |P|^{2(d-1)}
    std::uint32_t q = 0;        // base of the logarithm
    std::size_t denominator = 0; // k * deg P
    double value() const;
    std::string log_ratio() const; // "log_2(3)/2"
};

BlockDimension block_count_closed_form(const Poly& P, std::size_t k, std::size_t d);

// Missing-digit set dimension log_q|D| / (k deg P) for an arbitrary
// retained-block count |D|.
BlockDimension missing_digit_dimension(std::uint32_t q, Int block_count, std::size_t k,
                                       std::size_t deg_p);

} // namespace mindenom
