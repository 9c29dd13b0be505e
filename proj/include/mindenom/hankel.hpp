#pragma once

#include "mindenom/laurent.hpp"
#include "mindenom/linalg.hpp"

#include <cstdint>
#include <map>
#include <optional>

namespace mindenom {

constexpr std::uint64_t kDefaultBudget = 10'000'000;

/**
 * Hankel matrix of one or more generating words: each word alpha
 * contributes a k x l block with entry (i, j) = alpha_{i+j-1} (1-based);
 * blocks are stacked vertically, so n words give n*k rows. Each word must
 * supply at least k + l - 1 digits.
 */
class HankelMatrix {
public:
    HankelMatrix(const Field& f, std::size_t k, std::size_t l,
                 std::vector<std::vector<FieldElem>> words);
    static HankelMatrix from_word(const Field& f, std::vector<FieldElem> word, std::size_t k,
                                  std::size_t l);
    static HankelMatrix from_laurent(const std::vector<LaurentWord>& words, std::size_t k,
                                     std::size_t l);

    const Field& field() const { return field_; }
    std::size_t block_rows() const { return k_; } // k (per word)
    std::size_t rows() const { return k_ * words_.size(); }
    std::size_t cols() const { return l_; }
    std::size_t word_count() const { return words_.size(); }

    FieldElem at(std::size_t i, std::size_t j) const; // stacked row index
    Mat dense() const;

private:
    Field field_;
    std::size_t k_, l_;
    std::vector<std::vector<FieldElem>> words_;
};

// Exact rank and canonical kernel basis.
KernelBasis rank_kernel(const HankelMatrix& m);

/**
 * The canonical kernel vector with last coordinate 1, when the last
 * column depends on the first l-1: remaining coordinates are the
 * lexicographically smallest under the canonical element order (v_0
 * first). nullopt iff rank(all columns) > rank(first l-1 columns).
 * A matrix with zero rows yields (0, ..., 0, 1).
 */
std::optional<std::vector<FieldElem>> last_column_dependence(const HankelMatrix& m);

// Exhaustive rank census of all h x h Hankel matrices (q^{2h-1} words).
std::map<std::size_t, std::uint64_t> square_rank_census(const Field& f, std::size_t h,
                                                        std::uint64_t budget = kDefaultBudget);

// Exhaustive count of k x l Hankel matrices with rank <= r.
std::uint64_t rank_atmost_census(const Field& f, std::size_t k, std::size_t l, std::size_t r,
                                 std::uint64_t budget = kDefaultBudget);

/**
 * Instance check of the column-break property: if the first k columns of
 * the k' x n Hankel matrix of `word` are independent but the first k+1
 * are dependent, then the leading k x k minor is invertible. Returns the
 * truth of the implication (true on a false premise); expected to hold
 * on every instance.
 */
bool column_break_check(const Field& f, const std::vector<FieldElem>& word, std::size_t m,
                        std::size_t n, std::size_t k);

} // namespace mindenom
