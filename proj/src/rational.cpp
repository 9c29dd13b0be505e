#include "mindenom/rational.hpp"

#include <stdexcept>

namespace mindenom {

Rational::Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    reduce();
}

void Rational::reduce() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Int g = boost::multiprecision::gcd(num_ < 0 ? Int(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (num_ == 0) den_ = 1;
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::domain_error("division by zero rational");
    return Rational(num_ * o.den_, den_ * o.num_);
}

Int ipow(Int base, std::uint64_t e) {
    Int r = 1;
    for (std::uint64_t i = 0; i < e; ++i) r *= base;
    return r;
}

Rational qpow(std::uint32_t q, std::int64_t e) {
    if (e >= 0) return Rational(ipow(Int(q), static_cast<std::uint64_t>(e)));
    return Rational(Int(1), ipow(Int(q), static_cast<std::uint64_t>(-e)));
}

std::string to_string(const Rational& r) {
    std::string s = r.num().str();
    if (r.den() != 1) s += "/" + r.den().str();
    return s;
}

} // namespace mindenom
