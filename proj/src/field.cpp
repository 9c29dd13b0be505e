#include "mindenom/field.hpp"

#include "mindenom/errors.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mindenom {

namespace detail {

// Arithmetic tables for one field instance. Elements are indices in
// [0, q); tables are q*q (uint16 is enough under the size cap below).
struct FieldData : std::enable_shared_from_this<FieldData> {
    std::uint32_t p = 0;
    std::uint32_t m = 1;
    std::uint32_t q = 0;
    std::vector<std::uint32_t> modulus; // ascending, length m+1; empty for m == 1

    std::vector<std::uint16_t> add_tab;
    std::vector<std::uint16_t> mul_tab;
    std::vector<std::uint16_t> neg_tab;
    std::vector<std::uint16_t> inv_tab; // inv_tab[0] unused

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_tab[a * q + b]; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_tab[a * q + b]; }
    std::uint32_t neg(std::uint32_t a) const { return neg_tab[a]; }
    std::uint32_t inv(std::uint32_t a) const { return inv_tab[a]; }

    bool same_descriptor(const FieldData& o) const {
        return p == o.p && m == o.m && modulus == o.modulus;
    }
};

namespace {

constexpr std::uint32_t kMaxFieldSize = 512;

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Dense polynomial helpers over F_p on plain coefficient vectors
// (ascending), used only while building extension-field tables.
using PVec = std::vector<std::uint32_t>;

void ptrim(PVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PVec pmul(const PVec& a, const PVec& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    PVec r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    ptrim(r);
    return r;
}

// Remainder of a by the monic modulus mod.
PVec pmod(PVec a, const PVec& mod, std::uint32_t p) {
    ptrim(a);
    while (a.size() >= mod.size()) {
        std::uint32_t lead = a.back();
        std::size_t shift = a.size() - mod.size();
        for (std::size_t i = 0; i < mod.size(); ++i) {
            std::uint32_t sub = (lead * mod[i]) % p;
            std::uint32_t& c = a[shift + i];
            c = (c + p - sub) % p;
        }
        ptrim(a);
    }
    return a;
}

std::uint32_t vec_to_index(const PVec& c, std::uint32_t p, std::uint32_t m) {
    std::uint32_t idx = 0;
    std::uint32_t w = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        idx += (i < c.size() ? c[i] : 0) * w;
        w *= p;
    }
    return idx;
}

PVec index_to_vec(std::uint32_t idx, std::uint32_t p, std::uint32_t m) {
    PVec c(m, 0);
    for (std::uint32_t i = 0; i < m; ++i) {
        c[i] = idx % p;
        idx /= p;
    }
    return c;
}

bool modulus_irreducible(const PVec& mod, std::uint32_t p) {
    // Trial division by every monic polynomial of degree 1..deg/2.
    std::uint32_t deg = static_cast<std::uint32_t>(mod.size()) - 1;
    for (std::uint32_t d = 1; 2 * d <= deg; ++d) {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            PVec div = index_to_vec(static_cast<std::uint32_t>(idx), p, d);
            div.resize(d + 1, 0);
            div[d] = 1;
            if (pmod(mod, div, p).empty()) return false;
        }
    }
    return true;
}

std::shared_ptr<FieldData> build(std::uint32_t p, std::uint32_t m, PVec modulus) {
    if (!is_prime_u32(p)) throw std::invalid_argument("field characteristic must be prime");
    if (m < 1) throw std::invalid_argument("extension degree must be >= 1");

    std::uint64_t q64 = 1;
    for (std::uint32_t i = 0; i < m; ++i) q64 *= p;
    if (q64 > kMaxFieldSize)
        throw std::invalid_argument("field too large for table-based arithmetic (q <= 512)");
    std::uint32_t q = static_cast<std::uint32_t>(q64);

    if (m == 1) {
        modulus.clear();
    } else {
        if (modulus.size() != m + 1 || modulus.back() != 1)
            throw std::invalid_argument("field modulus must be monic of degree m");
        for (std::uint32_t c : modulus)
            if (c >= p) throw std::invalid_argument("field modulus coefficients must lie in [0,p)");
        if (!modulus_irreducible(modulus, p))
            throw std::invalid_argument("field modulus must be irreducible over F_p");
    }

    auto d = std::make_shared<FieldData>();
    d->p = p;
    d->m = m;
    d->q = q;
    d->modulus = modulus;

    d->add_tab.resize(static_cast<std::size_t>(q) * q);
    d->mul_tab.resize(static_cast<std::size_t>(q) * q);
    d->neg_tab.resize(q);
    d->inv_tab.assign(q, 0);

    for (std::uint32_t a = 0; a < q; ++a) {
        PVec va = index_to_vec(a, p, m);
        PVec na(m);
        for (std::uint32_t i = 0; i < m; ++i) na[i] = (p - va[i]) % p;
        d->neg_tab[a] = static_cast<std::uint16_t>(vec_to_index(na, p, m));
        for (std::uint32_t b = 0; b < q; ++b) {
            PVec vb = index_to_vec(b, p, m);
            PVec s(m);
            for (std::uint32_t i = 0; i < m; ++i) s[i] = (va[i] + vb[i]) % p;
            d->add_tab[a * q + b] = static_cast<std::uint16_t>(vec_to_index(s, p, m));
            PVec prod = pmul(va, vb, p);
            if (m > 1) prod = pmod(std::move(prod), modulus, p);
            d->mul_tab[a * q + b] = static_cast<std::uint16_t>(vec_to_index(prod, p, m));
        }
    }
    for (std::uint32_t a = 1; a < q; ++a)
        for (std::uint32_t b = 1; b < q; ++b)
            if (d->mul_tab[a * q + b] == 1) {
                d->inv_tab[a] = static_cast<std::uint16_t>(b);
                break;
            }
    return d;
}

} // namespace

} // namespace detail

Field Field::prime(std::uint32_t p) { return Field(detail::build(p, 1, {})); }

Field Field::extension(std::uint32_t p, std::uint32_t m) {
    if (m == 1) return prime(p);
    return Field(detail::build(p, m, default_modulus(p, m)));
}

Field Field::extension(std::uint32_t p, std::uint32_t m,
                       const std::vector<std::uint32_t>& modulus) {
    return Field(detail::build(p, m, modulus));
}

std::vector<std::uint32_t> Field::default_modulus(std::uint32_t p, std::uint32_t m) {
    if (!detail::is_prime_u32(p)) throw std::invalid_argument("characteristic must be prime");
    if (m < 2) throw std::invalid_argument("default modulus needs m >= 2");
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < m; ++i) count *= p;
    // Enumeration order: (c_0,...,c_{m-1}) lexicographic, c_0 most significant.
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::vector<std::uint32_t> c(m + 1, 0);
        std::uint64_t rest = idx;
        for (std::uint32_t j = 0; j < m; ++j) {
            std::uint64_t w = 1;
            for (std::uint32_t i = 0; i + j + 1 < m; ++i) w *= p;
            c[j] = static_cast<std::uint32_t>((rest / w) % p);
            rest %= w;
        }
        c[m] = 1;
        if (detail::modulus_irreducible(c, p)) return c;
    }
    throw std::logic_error("no irreducible modulus found"); // unreachable
}

std::uint32_t Field::characteristic() const { return d_->p; }
std::uint32_t Field::extension_degree() const { return d_->m; }
std::uint32_t Field::size() const { return d_->q; }
const std::vector<std::uint32_t>& Field::modulus() const { return d_->modulus; }

FieldElem Field::zero() const { return FieldElem(d_.get(), 0); }
FieldElem Field::one() const { return FieldElem(d_.get(), 1); }

FieldElem Field::elem(std::uint32_t index) const {
    if (index >= d_->q) throw std::invalid_argument("element index out of range");
    return FieldElem(d_.get(), index);
}

FieldElem Field::elem_from_coeffs(const std::vector<std::uint32_t>& coeffs) const {
    if (coeffs.size() > d_->m) throw std::invalid_argument("too many coefficients for this field");
    std::uint32_t idx = 0, w = 1;
    for (std::uint32_t i = 0; i < d_->m; ++i) {
        std::uint32_t c = i < coeffs.size() ? coeffs[i] % d_->p : 0;
        idx += c * w;
        w *= d_->p;
    }
    return FieldElem(d_.get(), idx);
}

std::string Field::name() const {
    std::ostringstream os;
    os << "F_" << d_->q;
    if (d_->m > 1) {
        os << " = F_" << d_->p << "[t]/(";
        bool first = true;
        for (std::size_t i = d_->modulus.size(); i-- > 0;) {
            std::uint32_t c = d_->modulus[i];
            if (c == 0) continue;
            if (!first) os << "+";
            first = false;
            if (i == 0) {
                os << c;
            } else {
                if (c != 1) os << c << "*";
                os << "t";
                if (i > 1) os << "^" << i;
            }
        }
        os << ")";
    }
    return os.str();
}

bool Field::operator==(const Field& o) const {
    return d_ == o.d_ || d_->same_descriptor(*o.d_);
}

std::vector<std::uint32_t> FieldElem::coeffs() const {
    return detail::index_to_vec(idx_, d_->p, d_->m);
}

Field FieldElem::field() const {
    return Field(const_cast<detail::FieldData*>(d_)->shared_from_this());
}

const detail::FieldData* FieldElem::check_same(const FieldElem& o, const char* op) const {
    if (d_ == o.d_ || d_->same_descriptor(*o.d_)) return d_;
    throw FieldMismatchError(std::string("field mismatch in ") + op);
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    const auto* d = check_same(o, "+");
    return FieldElem(d, d->add(idx_, o.idx_));
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
    const auto* d = check_same(o, "-");
    return FieldElem(d, d->add(idx_, d->neg(o.idx_)));
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    const auto* d = check_same(o, "*");
    return FieldElem(d, d->mul(idx_, o.idx_));
}

FieldElem FieldElem::operator-() const { return FieldElem(d_, d_->neg(idx_)); }

FieldElem FieldElem::inverse() const {
    if (idx_ == 0) throw std::domain_error("inverse of zero field element");
    return FieldElem(d_, d_->inv(idx_));
}

bool FieldElem::operator==(const FieldElem& o) const {
    check_same(o, "==");
    return idx_ == o.idx_;
}

bool FieldElem::operator<(const FieldElem& o) const {
    check_same(o, "<");
    return idx_ < o.idx_;
}

} // namespace mindenom
