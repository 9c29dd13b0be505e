#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace mindenom {

class FieldElem;

namespace detail {
struct FieldData;
} // namespace detail

/**
 * The coefficient field F_q, q = p^m, with table-based exact arithmetic.
 *
 * Extension fields use the polynomial basis 1, t, ..., t^{m-1} over F_p
 * modulo a monic irreducible of degree m. An element with coefficients
 * (c_0, ..., c_{m-1}) has canonical index sum_i c_i p^i; the index defines
 * the total order used for every tie-break in the library. Field handles
 * are cheap shared references; elements stay valid while any handle to
 * their field is alive.
 */
class Field {
public:
    static Field prime(std::uint32_t p);
    static Field extension(std::uint32_t p, std::uint32_t m);
    static Field extension(std::uint32_t p, std::uint32_t m,
                           const std::vector<std::uint32_t>& modulus);

    // First monic irreducible of degree m over F_p in enumeration order,
    // as ascending coefficients of length m+1.
    static std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t m);

    std::uint32_t characteristic() const;
    std::uint32_t extension_degree() const;
    std::uint32_t size() const; // q = p^m

    // Ascending coefficients of the field modulus (length m+1); empty for m == 1.
    const std::vector<std::uint32_t>& modulus() const;

    FieldElem zero() const;
    FieldElem one() const;
    FieldElem elem(std::uint32_t index) const;
    FieldElem elem_from_coeffs(const std::vector<std::uint32_t>& coeffs) const;

    std::string name() const; // e.g. "F_4 = F_2[t]/(t^2+t+1)"

    bool operator==(const Field& o) const;
    bool operator!=(const Field& o) const { return !(*this == o); }

private:
    explicit Field(std::shared_ptr<const detail::FieldData> d) : d_(std::move(d)) {}
    std::shared_ptr<const detail::FieldData> d_;
    friend class FieldElem;
};

class FieldElem {
public:
    std::uint32_t index() const { return idx_; }
    std::vector<std::uint32_t> coeffs() const; // length m, over F_p, ascending powers of t

    bool is_zero() const { return idx_ == 0; }
    bool is_one() const { return idx_ == 1; }

    Field field() const;

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator-() const;
    FieldElem inverse() const; // throws std::domain_error on zero

    FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
    FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
    FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }
    bool operator<(const FieldElem& o) const; // canonical order = index order

private:
    FieldElem(const detail::FieldData* d, std::uint32_t idx) : d_(d), idx_(idx) {}
    const detail::FieldData* check_same(const FieldElem& o, const char* op) const;

    const detail::FieldData* d_;
    std::uint32_t idx_;
    friend class Field;
};

} // namespace mindenom
