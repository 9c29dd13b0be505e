#pragma once

#include "mindenom/field.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace mindenom {

// Dense row-major matrix over F_q. Small sizes only; elimination is the
// plain cubic algorithm with first-nonzero pivoting (deterministic).
class Mat {
public:
    Mat(const Field& f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), a_(rows * cols, f.zero()) {}

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    FieldElem& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const FieldElem& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<FieldElem> a_;
};

/**
 * Kernel description in canonical reduced form: basis vectors come from
 * the reduced row echelon form, one per free column in increasing column
 * order, with a 1 in the free position.
 */
struct KernelBasis {
    std::size_t rank = 0;
    std::vector<std::vector<FieldElem>> basis;

    std::size_t dimension() const { return basis.size(); }
};

// Reduce in place; returns the pivot columns (rank = their count).
std::vector<std::size_t> rref(Mat& m);

std::size_t rank(Mat m);
KernelBasis kernel(const Mat& m);

// Does A v = rhs have a solution?
bool solvable(const Mat& a, const std::vector<FieldElem>& rhs);

// All q^dim vectors of the span, enumerated by an odometer over the
// canonical element order (first basis vector's coefficient fastest).
std::vector<std::vector<FieldElem>> span_vectors(const Field& f, const KernelBasis& kb,
                                                 std::size_t length);

} // namespace mindenom
