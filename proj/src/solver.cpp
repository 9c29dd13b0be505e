#include "mindenom/solver.hpp"

#include "mindenom/errors.hpp"
#include "mindenom/factor.hpp"

#include <stdexcept>

namespace mindenom {

namespace {

void check_inputs(const std::vector<LaurentWord>& words, std::size_t k) {
    if (words.empty()) throw std::invalid_argument("solver needs at least one word");
    if (k == 0) throw std::invalid_argument("solver needs k >= 1");
    const Field& f = words.front().field();
    for (const auto& w : words) {
        if (w.field() != f) throw FieldMismatchError("words live in different fields");
        if (!w.has_digit(k))
            throw PrecisionError("word precision below k");
    }
}

// ||{Q alpha}|| < q^{-(k-d)}: fractional digits 1..k-d of Q*alpha vanish.
bool digit_condition(const Poly& q, const LaurentWord& w, std::size_t k) {
    std::size_t d = q.is_zero() ? 0 : static_cast<std::size_t>(q.degree());
    for (std::size_t s = 1; s + d <= k; ++s) {
        FieldElem acc = w.field().zero();
        for (std::size_t j = 0; j <= d; ++j) acc += q.coeff(j) * w.digit(s + j);
        if (!acc.is_zero()) return false;
    }
    return true;
}

std::vector<Poly> certified_numerators(const Poly& q, const std::vector<LaurentWord>& words,
                                       std::size_t k) {
    std::vector<Poly> nums;
    nums.reserve(words.size());
    std::size_t d = static_cast<std::size_t>(q.degree());
    for (const auto& w : words) {
        FracMulResult fm = frac_mul(q, w);
        if (!fm.fractional.zero_through(std::min(k - d, fm.fractional.precision())))
            throw std::logic_error("certificate violates the fractional-norm bound");
        nums.push_back(fm.integer_part);
    }
    return nums;
}

} // namespace

std::string_view method_name(SolveMethod m) {
    return m == SolveMethod::hankel ? "hankel" : "oracle";
}

MinDenomResult solve_min_denom(const std::vector<LaurentWord>& words, std::size_t k) {
    check_inputs(words, k);
    const Field& f = words.front().field();
    for (std::size_t d = 0; d <= k; ++d) {
        HankelMatrix m = HankelMatrix::from_laurent(words, k - d, d + 1);
        auto vec = last_column_dependence(m);
        if (!vec) continue;
        Poly q(f, *vec);
        return MinDenomResult{static_cast<int>(d),
                              q,
                              certified_numerators(q, words, k),
                              rank_kernel(m).dimension() == 1,
                              SolveMethod::hankel,
                              {}};
    }
    throw std::logic_error("degree scan passed k without a solution"); // unreachable
}

MinDenomResult solve_min_denom(const LaurentWord& w, std::size_t k) {
    return solve_min_denom(std::vector<LaurentWord>{w}, k);
}

MinDenomResult oracle_min_denom(const std::vector<LaurentWord>& words, std::size_t k,
                                std::uint64_t budget) {
    check_inputs(words, k);
    const Field& f = words.front().field();
    std::uint64_t spent = 0;
    for (std::size_t d = 0; d <= k; ++d) {
        std::uint64_t n = monic_count(f, static_cast<int>(d));
        spent += n;
        if (spent > budget) throw BudgetError("oracle enumeration exceeds budget");
        std::vector<Poly> valid;
        for (std::uint64_t idx = 0; idx < n; ++idx) {
            Poly q = monic_at(f, static_cast<int>(d), idx);
            bool ok = true;
            for (const auto& w : words)
                if (!digit_condition(q, w, k)) {
                    ok = false;
                    break;
                }
            if (ok) valid.push_back(std::move(q));
        }
        if (valid.empty()) continue;
        // Enumeration order matches the canonical order, so the first
        // valid polynomial is the canonical choice.
        return MinDenomResult{static_cast<int>(d),
                              valid.front(),
                              certified_numerators(valid.front(), words, k),
                              valid.size() == 1,
                              SolveMethod::oracle,
                              std::move(valid)};
    }
    throw std::logic_error("oracle scan passed k without a solution"); // unreachable
}

MinDenomResult oracle_min_denom(const LaurentWord& w, std::size_t k, std::uint64_t budget) {
    return oracle_min_denom(std::vector<LaurentWord>{w}, k, budget);
}

bool joint_lower_bound_holds(const std::vector<LaurentWord>& words, std::size_t k) {
    int joint = solve_min_denom(words, k).d;
    for (const auto& w : words)
        if (solve_min_denom(w, k).d > joint) return false;
    return true;
}

DivisorPredicateResult scalar_consistency_predicate(const std::vector<LaurentWord>& words,
                                                    const Poly& q, std::size_t k) {
    if (!q.is_monic()) throw std::invalid_argument("predicate needs a monic Q");
    check_inputs(words, k);
    DivisorPredicateResult res;
    std::size_t d = static_cast<std::size_t>(q.degree());
    res.strict_regime = 2 * d < k;
    res.at_regime_boundary = 2 * d == k;
    res.scalar_divisibility = true;
    for (const auto& w : words) {
        Poly qi = solve_min_denom(w, k).q_min;
        if (!divides(qi, q)) res.scalar_divisibility = false;
        if (qi == q) res.scalar_equality = true;
    }
    res.conditions_hold = res.scalar_divisibility && res.scalar_equality;
    return res;
}

BandedCheckMatrix banded_check_matrix(const Poly& q, std::size_t k) {
    if (q.is_zero() || !q.is_monic())
        throw std::invalid_argument("banded matrix needs a monic Q");
    std::size_t d = static_cast<std::size_t>(q.degree());
    if (d > k) throw std::invalid_argument("deg Q exceeds k");
    const Field& f = q.field();
    Mat a(f, k - d, k);
    for (std::size_t i = 0; i < k - d; ++i)
        for (std::size_t j = 0; j <= d; ++j) a.at(i, i + j) = -q.coeff(j);
    return {q, k, std::move(a)};
}

KernelBasis banded_kernel(const Poly& q, std::size_t k) {
    return kernel(banded_check_matrix(q, k).a);
}

bool banded_condition_holds(const Poly& q, const LaurentWord& w, std::size_t k) {
    if (!w.has_digit(k)) throw PrecisionError("word precision below k");
    return digit_condition(q, w, k);
}

PadicScanResult padic_min_denom_scan(const LaurentWord& w, const Poly& P, std::size_t k,
                                     std::size_t max_shift) {
    if (!P.is_monic() || !is_irreducible(P))
        throw std::invalid_argument("shift base must be a monic irreducible polynomial");
    std::size_t degp = static_cast<std::size_t>(P.degree());
    if (!w.exact() && w.precision() < k + max_shift * degp)
        throw PrecisionError("word precision too small for the requested shift range");

    PadicScanResult res;
    res.d = -1;
    LaurentWord cur = w;
    for (std::size_t m = 0; m <= max_shift; ++m) {
        int d = solve_min_denom(cur, k).d;
        if (res.d < 0 || d < res.d) {
            res.d = d;
            res.witness_shift = m;
        }
        if (res.d == 0) break; // the infimum is attained
        if (m < max_shift) cur = frac_mul(P, cur).fractional;
    }
    res.certified = res.d == 0;
    return res;
}

} // namespace mindenom
