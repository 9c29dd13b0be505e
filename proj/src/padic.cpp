#include "mindenom/padic.hpp"

#include "mindenom/errors.hpp"
#include "mindenom/factor.hpp"

#include <stdexcept>

namespace mindenom {

PadicDigits to_padic_digits(const LaurentWord& w, const Poly& P, std::size_t count) {
    if (!P.is_monic() || !is_irreducible(P))
        throw std::invalid_argument("base must be a monic irreducible polynomial");
    std::size_t degp = static_cast<std::size_t>(P.degree());
    if (!w.exact() && w.precision() < count * degp)
        throw PrecisionError("padic expansion needs precision >= count * deg P");

    PadicDigits out{P, {}};
    out.digits.reserve(count);
    LaurentWord cur = w;
    for (std::size_t i = 0; i < count; ++i) {
        FracMulResult fm = frac_mul(P, cur);
        out.digits.push_back(fm.integer_part); // degree < deg P by construction
        cur = fm.fractional;
    }
    return out;
}

LaurentWord from_padic_digits(const PadicDigits& d, std::size_t precision) {
    const Field& f = d.base.field();
    std::size_t degp = static_cast<std::size_t>(d.base.degree());
    if (precision > d.precision() * degp)
        throw PrecisionError("not enough padic digits for the requested precision");
    // sum a_i P^{-i} = N / P^L with N = sum a_i P^{L-i}.
    Poly num(f);
    std::uint32_t L = static_cast<std::uint32_t>(d.digits.size());
    for (std::uint32_t i = 0; i < L; ++i)
        num = num + d.digits[i] * poly_pow(d.base, L - 1 - i);
    Poly den = poly_pow(d.base, L);
    if (L == 0) return LaurentWord::zeros(f, precision, true);
    return from_rational(num, den, precision);
}

std::optional<std::size_t> find_zero_run(const PadicDigits& d, std::size_t run_len) {
    if (run_len == 0) throw std::invalid_argument("zero-run length must be >= 1");
    if (d.digits.size() < run_len) return std::nullopt;
    for (std::size_t m = 0; m + run_len <= d.digits.size(); ++m) {
        bool all = true;
        for (std::size_t i = 0; i < run_len; ++i)
            if (!d.digits[m + i].is_zero()) {
                all = false;
                break;
            }
        if (all) return m;
    }
    return std::nullopt;
}

} // namespace mindenom
