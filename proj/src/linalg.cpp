#include "mindenom/linalg.hpp"

#include <stdexcept>

namespace mindenom {

std::vector<std::size_t> rref(Mat& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m.at(sel, col).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
        FieldElem inv = m.at(row, col).inverse();
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            FieldElem f = m.at(i, col);
            for (std::size_t j = 0; j < m.cols(); ++j)
                m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(Mat m) { return rref(m).size(); }

KernelBasis kernel(const Mat& m) {
    Mat r = m;
    std::vector<std::size_t> pivots = rref(r);
    KernelBasis kb;
    kb.rank = pivots.size();

    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    const Field& f = m.field();
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<FieldElem> v(m.cols(), f.zero());
        v[free] = f.one();
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -r.at(i, free);
        kb.basis.push_back(std::move(v));
    }
    return kb;
}

bool solvable(const Mat& a, const std::vector<FieldElem>& rhs) {
    if (rhs.size() != a.rows()) throw std::invalid_argument("rhs size mismatch");
    Mat aug(a.field(), a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = rhs[i];
    }
    std::vector<std::size_t> pivots = rref(aug);
    return pivots.empty() || pivots.back() != a.cols();
}

std::vector<std::vector<FieldElem>> span_vectors(const Field& f, const KernelBasis& kb,
                                                 std::size_t length) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < kb.dimension(); ++i) total *= f.size();
    std::vector<std::vector<FieldElem>> out;
    out.reserve(total);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::vector<FieldElem> v(length, f.zero());
        std::uint64_t rest = idx;
        for (const auto& b : kb.basis) {
            FieldElem c = f.elem(static_cast<std::uint32_t>(rest % f.size()));
            rest /= f.size();
            for (std::size_t j = 0; j < length; ++j) v[j] += c * b[j];
        }
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace mindenom
