#include "mindenom/laurent.hpp"

#include "mindenom/errors.hpp"

#include <stdexcept>

namespace mindenom {

LaurentWord::LaurentWord(const Field& f, std::vector<FieldElem> digits, bool exact)
    : field_(f), digits_(std::move(digits)), exact_(exact) {}

LaurentWord LaurentWord::zeros(const Field& f, std::size_t precision, bool exact) {
    return LaurentWord(f, std::vector<FieldElem>(precision, f.zero()), exact);
}

FieldElem LaurentWord::digit(std::size_t i) const {
    if (i == 0) throw std::invalid_argument("word digits are 1-based");
    if (i <= digits_.size()) return digits_[i - 1];
    if (exact_) return field_.zero();
    throw PrecisionError("digit index " + std::to_string(i) + " beyond precision " +
                         std::to_string(digits_.size()));
}

bool LaurentWord::zero_through(std::size_t j) const {
    for (std::size_t i = 1; i <= j; ++i)
        if (!digit(i).is_zero()) return false;
    return true;
}

bool LaurentWord::operator==(const LaurentWord& o) const {
    if (field_ != o.field_ || exact_ != o.exact_ || digits_.size() != o.digits_.size())
        return false;
    for (std::size_t i = 0; i < digits_.size(); ++i)
        if (digits_[i] != o.digits_[i]) return false;
    return true;
}

LaurentWord from_rational(const Poly& num, const Poly& den, std::size_t precision) {
    if (den.is_zero()) throw std::domain_error("zero denominator");
    if (!num.is_zero() && num.degree() >= den.degree())
        throw std::invalid_argument("numerator degree must be below denominator degree");
    const Field& f = num.field();
    const Poly x = Poly::x(f);
    std::vector<FieldElem> digits;
    digits.reserve(precision);
    Poly rem = num;
    for (std::size_t i = 0; i < precision; ++i) {
        DivModResult dm = poly_divmod(rem * x, den);
        // deg(rem*x) <= deg den, so the quotient is a constant.
        digits.push_back(dm.quot.coeff(0));
        rem = dm.rem;
    }
    return LaurentWord(f, std::move(digits), rem.is_zero());
}

FracMulResult frac_mul(const Poly& q, const LaurentWord& w) {
    const Field& f = w.field();
    if (q.is_zero())
        return {Poly(f), LaurentWord::zeros(f, w.precision(), w.exact())};
    std::size_t d = static_cast<std::size_t>(q.degree());
    if (!w.exact() && w.precision() < d)
        throw PrecisionError("frac_mul needs precision >= deg Q");

    // Coefficient of x^t in Q*alpha is sum_j Q_j alpha_{j-t}.
    std::vector<FieldElem> ip(d, f.zero());
    for (std::size_t t = 0; t + 1 <= d; ++t)
        for (std::size_t j = t + 1; j <= d; ++j)
            ip[t] += q.coeff(j) * w.digit(j - t);

    std::size_t out_prec = w.exact() ? w.precision() : w.precision() - d;
    std::vector<FieldElem> frac(out_prec, f.zero());
    for (std::size_t s = 1; s <= out_prec; ++s)
        for (std::size_t j = 0; j <= d; ++j)
            frac[s - 1] += q.coeff(j) * w.digit(s + j);

    return {Poly(f, std::move(ip)), LaurentWord(f, std::move(frac), w.exact())};
}

std::optional<std::size_t> abs_exponent(const LaurentWord& w) {
    for (std::size_t i = 1; i <= w.precision(); ++i)
        if (!w.digits()[i - 1].is_zero()) return i;
    return std::nullopt;
}

std::uint64_t word_count(const Field& f, std::size_t k) {
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < k; ++i) n *= f.size();
    return n;
}

LaurentWord word_at(const Field& f, std::size_t k, std::uint64_t index) {
    std::vector<FieldElem> digits;
    digits.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        digits.push_back(f.elem(static_cast<std::uint32_t>(index % f.size())));
        index /= f.size();
    }
    return LaurentWord(f, std::move(digits));
}

} // namespace mindenom
