#pragma once

#include "mindenom/hankel.hpp"
#include "mindenom/laurent.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mindenom {

enum class SolveMethod { hankel, oracle };
std::string_view method_name(SolveMethod m);

/**
 * Minimal-denominator certificate for one or more words at radius q^{-k}:
 * the least degree d admitting a monic Q with ||{Q alpha_i}|| < q^{-(k-d)}
 * for every i, the canonical such Q (lexicographically smallest ascending
 * coefficient vector), the integer parts [Q alpha_i], and whether Q is
 * the only valid monic polynomial of degree d. Both producers verify the
 * certificate digit-wise and guarantee no smaller degree works.
 */
struct MinDenomResult {
    int d;
    Poly q_min;
    std::vector<Poly> numerators;
    bool unique;
    SolveMethod method;
    std::vector<Poly> candidates; // oracle only: every valid monic of degree d

    bool same_solution(const MinDenomResult& o) const {
        return d == o.d && q_min == o.q_min && unique == o.unique;
    }
};

/**
 * Hankel-kernel solver: the least d in [0, k] such that the last column
 * of the stacked matrix of order (k-d, d+1) depends on the first d
 * (vacuously true at d = k, realizing the degree-k upper bound).
 * Requires k >= 1 and every word to supply k digits.
 */
MinDenomResult solve_min_denom(const std::vector<LaurentWord>& words, std::size_t k);
MinDenomResult solve_min_denom(const LaurentWord& w, std::size_t k);

/**
 * Definition-level brute force: enumerate all monic Q of degree
 * d = 0, 1, ... and test the digit condition directly. Same contract and
 * canonical choice as solve_min_denom; additionally fills `candidates`.
 */
MinDenomResult oracle_min_denom(const std::vector<LaurentWord>& words, std::size_t k,
                                std::uint64_t budget = kDefaultBudget);
MinDenomResult oracle_min_denom(const LaurentWord& w, std::size_t k,
                                std::uint64_t budget = kDefaultBudget);

// Joint degree is at least every per-coordinate degree (always true).
bool joint_lower_bound_holds(const std::vector<LaurentWord>& words, std::size_t k);

/**
 * The two divisor conditions relating the joint minimal denominator to
 * the per-coordinate ones: (1) every scalar minimal denominator divides
 * Q, and (2) some scalar minimal denominator equals Q. The biconditional
 * with "joint Q_min == Q" is asserted only in the strict uniqueness
 * regime 2 deg Q < k; at 2 deg Q = k it is reported, not assumed.
 */
struct DivisorPredicateResult {
    bool conditions_hold = false;
    bool scalar_divisibility = false; // condition (1)
    bool scalar_equality = false;     // condition (2)
    bool strict_regime = false;       // 2 deg Q < k
    bool at_regime_boundary = false;  // 2 deg Q == k
};

DivisorPredicateResult scalar_consistency_predicate(const std::vector<LaurentWord>& words,
                                                    const Poly& q, std::size_t k);

/**
 * Banded annihilator matrix of a monic Q with deg Q = d <= k: the
 * (k-d) x k matrix whose kernel inside F_q^k is exactly the set of digit
 * prefixes with ||{Q alpha}|| < q^{-(k-d)}; the kernel has size q^d. Row
 * i carries (-Q_0, ..., -Q_{d-1}, -1) at offset i, the negated digit
 * functionals of {Q alpha} (the sign keeps the kernel equal to the norm
 * condition in every characteristic).
 */
struct BandedCheckMatrix {
    Poly q;
    std::size_t k = 0;
    Mat a;
};

BandedCheckMatrix banded_check_matrix(const Poly& q, std::size_t k);
KernelBasis banded_kernel(const Poly& q, std::size_t k);

// Digit-wise membership condition the banded kernel encodes.
bool banded_condition_holds(const Poly& q, const LaurentWord& w, std::size_t k);

/**
 * Bounded scan of the shifted problems: d* = min over m in [0, max_shift]
 * of the degree for {P^m alpha}, with the first witnessing shift.
 * certified is true iff d* = 0 (the infimum over all shifts is then
 * attained; otherwise the value is only an upper bound).
 */
struct PadicScanResult {
    int d = 0;
    std::size_t witness_shift = 0;
    bool certified = false;
};

PadicScanResult padic_min_denom_scan(const LaurentWord& w, const Poly& P, std::size_t k,
                                     std::size_t max_shift);

} // namespace mindenom
