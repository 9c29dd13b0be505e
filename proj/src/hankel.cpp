#include "mindenom/hankel.hpp"

#include "mindenom/errors.hpp"

#include <stdexcept>

namespace mindenom {

HankelMatrix::HankelMatrix(const Field& f, std::size_t k, std::size_t l,
                           std::vector<std::vector<FieldElem>> words)
    : field_(f), k_(k), l_(l), words_(std::move(words)) {
    if (l_ == 0) throw std::invalid_argument("Hankel matrix needs at least one column");
    if (words_.empty()) throw std::invalid_argument("Hankel matrix needs at least one word");
    for (const auto& w : words_)
        if (w.size() + 1 < k + l)
            throw PrecisionError("word too short for Hankel order (k,l)");
}

HankelMatrix HankelMatrix::from_word(const Field& f, std::vector<FieldElem> word, std::size_t k,
                                     std::size_t l) {
    std::vector<std::vector<FieldElem>> ws;
    ws.push_back(std::move(word));
    return HankelMatrix(f, k, l, std::move(ws));
}

HankelMatrix HankelMatrix::from_laurent(const std::vector<LaurentWord>& words, std::size_t k,
                                        std::size_t l) {
    if (words.empty()) throw std::invalid_argument("Hankel matrix needs at least one word");
    const Field& f = words.front().field();
    std::size_t need = k + l - 1;
    std::vector<std::vector<FieldElem>> ws;
    ws.reserve(words.size());
    for (const auto& w : words) {
        if (!w.has_digit(need) && need > 0)
            throw PrecisionError("word too short for Hankel order (k,l)");
        std::vector<FieldElem> digits;
        digits.reserve(need);
        for (std::size_t i = 1; i <= need; ++i) digits.push_back(w.digit(i));
        ws.push_back(std::move(digits));
    }
    return HankelMatrix(f, k, l, std::move(ws));
}

FieldElem HankelMatrix::at(std::size_t i, std::size_t j) const {
    const auto& w = words_[i / k_];
    return w[(i % k_) + j];
}

Mat HankelMatrix::dense() const {
    Mat m(field_, rows(), cols());
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < cols(); ++j) m.at(i, j) = at(i, j);
    return m;
}

KernelBasis rank_kernel(const HankelMatrix& m) { return kernel(m.dense()); }

std::optional<std::vector<FieldElem>> last_column_dependence(const HankelMatrix& m) {
    const Field& f = m.field();
    std::size_t l = m.cols();
    if (m.rows() == 0) {
        std::vector<FieldElem> v(l, f.zero());
        v[l - 1] = f.one();
        return v;
    }
    Mat a = m.dense();

    // Greedy lexicographic minimization over the affine set
    // {v : A v = 0, v_{l-1} = 1}: fix v_0, v_1, ... to the smallest field
    // value keeping the system consistent. Each step appends one row.
    std::size_t base_rows = a.rows();
    Mat sys(f, base_rows + l, l);
    std::vector<FieldElem> rhs(base_rows + l, f.zero());
    for (std::size_t i = 0; i < base_rows; ++i)
        for (std::size_t j = 0; j < l; ++j) sys.at(i, j) = a.at(i, j);
    std::size_t used = base_rows;
    sys.at(used, l - 1) = f.one();
    rhs[used] = f.one();
    ++used;

    auto consistent = [&]() {
        Mat sub(f, used, l);
        std::vector<FieldElem> r(used, f.zero());
        for (std::size_t i = 0; i < used; ++i) {
            for (std::size_t j = 0; j < l; ++j) sub.at(i, j) = sys.at(i, j);
            r[i] = rhs[i];
        }
        return solvable(sub, r);
    };

    if (!consistent()) return std::nullopt;

    std::vector<FieldElem> v(l, f.zero());
    v[l - 1] = f.one();
    for (std::size_t i = 0; i + 1 < l; ++i) {
        sys.at(used, i) = f.one();
        bool fixed = false;
        for (std::uint32_t c = 0; c < f.size(); ++c) {
            rhs[used] = f.elem(c);
            ++used;
            bool ok = consistent();
            --used;
            if (ok) {
                v[i] = f.elem(c);
                ++used;
                fixed = true;
                break;
            }
        }
        if (!fixed) throw std::logic_error("lexicographic minimization lost consistency");
    }
    return v;
}

std::map<std::size_t, std::uint64_t> square_rank_census(const Field& f, std::size_t h,
                                                        std::uint64_t budget) {
    if (h == 0) throw std::invalid_argument("square census needs h >= 1");
    std::uint64_t total = word_count(f, 2 * h - 1);
    if (total > budget) throw BudgetError("square rank census exceeds budget");
    std::map<std::size_t, std::uint64_t> counts;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        LaurentWord w = word_at(f, 2 * h - 1, idx);
        HankelMatrix m = HankelMatrix::from_laurent({w}, h, h);
        counts[rank(m.dense())] += 1;
    }
    return counts;
}

std::uint64_t rank_atmost_census(const Field& f, std::size_t k, std::size_t l, std::size_t r,
                                 std::uint64_t budget) {
    if (k == 0 || l == 0) throw std::invalid_argument("census needs k, l >= 1");
    std::uint64_t total = word_count(f, k + l - 1);
    if (total > budget) throw BudgetError("rank census exceeds budget");
    std::uint64_t count = 0;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        LaurentWord w = word_at(f, k + l - 1, idx);
        HankelMatrix m = HankelMatrix::from_laurent({w}, k, l);
        if (rank(m.dense()) <= r) ++count;
    }
    return count;
}

bool column_break_check(const Field& f, const std::vector<FieldElem>& word, std::size_t m,
                        std::size_t n, std::size_t k) {
    if (k == 0 || k > std::min(m, n - 1))
        throw std::invalid_argument("column break check needs 1 <= k <= min(m, n-1)");
    HankelMatrix full = HankelMatrix::from_word(f, word, m, n);
    Mat dense = full.dense();

    auto prefix_rank = [&](std::size_t cols) {
        Mat sub(f, dense.rows(), cols);
        for (std::size_t i = 0; i < dense.rows(); ++i)
            for (std::size_t j = 0; j < cols; ++j) sub.at(i, j) = dense.at(i, j);
        return rank(std::move(sub));
    };

    bool premise = prefix_rank(k) == k && prefix_rank(k + 1) == k;
    if (!premise) return true;
    HankelMatrix lead = HankelMatrix::from_word(f, word, k, k);
    return rank(lead.dense()) == k;
}

} // namespace mindenom
