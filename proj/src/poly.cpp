#include "mindenom/poly.hpp"

#include "mindenom/errors.hpp"

#include <stdexcept>

namespace mindenom {

Poly::Poly(const Field& f, std::vector<FieldElem> coeffs) : field_(f), c_(std::move(coeffs)) {
    trim();
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const FieldElem& c) {
    Poly p(c.field());
    if (!c.is_zero()) p.c_.push_back(c);
    return p;
}

Poly Poly::x(const Field& f) { return monomial(f, 1); }

Poly Poly::monomial(const Field& f, std::size_t e) {
    Poly p(f);
    p.c_.assign(e + 1, f.zero());
    p.c_.back() = f.one();
    return p;
}

FieldElem Poly::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : field_.zero();
}

FieldElem Poly::leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
    Poly r(field_);
    std::size_t n = std::max(c_.size(), o.c_.size());
    r.c_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) r.c_.push_back(coeff(i) + o.coeff(i));
    r.trim();
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r(field_);
    std::size_t n = std::max(c_.size(), o.c_.size());
    r.c_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) r.c_.push_back(coeff(i) - o.coeff(i));
    r.trim();
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(field_);
    Poly r(field_);
    r.c_.assign(c_.size() + o.c_.size() - 1, field_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] += c_[i] * o.c_[j];
    r.trim();
    return r;
}

Poly Poly::operator-() const {
    Poly r(field_);
    r.c_.reserve(c_.size());
    for (const auto& c : c_) r.c_.push_back(-c);
    return r;
}

Poly Poly::operator*(const FieldElem& s) const {
    Poly r(field_);
    r.c_.reserve(c_.size());
    for (const auto& c : c_) r.c_.push_back(c * s);
    r.trim();
    return r;
}

Poly Poly::made_monic() const {
    if (is_zero()) throw std::domain_error("cannot normalize the zero polynomial");
    return *this * leading().inverse();
}

bool Poly::operator==(const Poly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

DivModResult poly_divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const Field& f = a.field();
    Poly rem = a;
    Poly quot(f);
    if (a.degree() < b.degree()) return {quot, rem};

    std::vector<FieldElem> qc(static_cast<std::size_t>(a.degree() - b.degree()) + 1, f.zero());
    FieldElem lead_inv = b.leading().inverse();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        std::size_t shift = static_cast<std::size_t>(rem.degree() - b.degree());
        FieldElem c = rem.leading() * lead_inv;
        qc[shift] = c;
        rem = rem - (b * Poly::monomial(f, shift)) * c;
    }
    return {Poly(f, std::move(qc)), rem};
}

Poly operator/(const Poly& a, const Poly& b) { return poly_divmod(a, b).quot; }
Poly operator%(const Poly& a, const Poly& b) { return poly_divmod(a, b).rem; }

bool divides(const Poly& d, const Poly& a) { return (a % d).is_zero(); }

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0,0) is undefined");
    Poly u = a, v = b;
    while (!v.is_zero()) {
        Poly r = u % v;
        u = v;
        v = r;
    }
    return u.made_monic();
}

Poly poly_pow(const Poly& base, std::uint32_t e) {
    Poly r = Poly::constant(base.field().one());
    for (std::uint32_t i = 0; i < e; ++i) r = r * base;
    return r;
}

bool poly_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        std::uint32_t ai = a.coeffs()[i].index();
        std::uint32_t bi = b.coeffs()[i].index();
        if (ai != bi) return ai < bi;
    }
    return false;
}

std::uint64_t monic_count(const Field& f, int d) {
    if (d < 0) throw std::invalid_argument("monic enumeration needs degree >= 0");
    std::uint64_t n = 1;
    for (int i = 0; i < d; ++i) n *= f.size();
    return n;
}

Poly monic_at(const Field& f, int d, std::uint64_t index) {
    std::uint64_t n = monic_count(f, d);
    if (index >= n) throw std::invalid_argument("monic index out of range");
    std::vector<FieldElem> c(static_cast<std::size_t>(d) + 1, f.zero());
    c[static_cast<std::size_t>(d)] = f.one();
    // c_0 is the most significant digit so that index order = poly_less.
    std::uint64_t rest = index;
    for (int j = 0; j < d; ++j) {
        std::uint64_t w = 1;
        for (int i = 0; i < d - j - 1; ++i) w *= f.size();
        c[static_cast<std::size_t>(j)] = f.elem(static_cast<std::uint32_t>((rest / w) % f.size()));
        rest %= w;
    }
    return Poly(f, std::move(c));
}

void for_each_monic(const Field& f, int d, const std::function<void(const Poly&)>& fn) {
    std::uint64_t n = monic_count(f, d);
    for (std::uint64_t i = 0; i < n; ++i) fn(monic_at(f, d, i));
}

} // namespace mindenom
