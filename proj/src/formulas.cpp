#include "mindenom/formulas.hpp"

#include "mindenom/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mindenom {

Int poly_abs(const Poly& p) {
    if (p.is_zero()) return 0;
    return ipow(Int(p.field().size()), static_cast<std::uint64_t>(p.degree()));
}

Rational pmf_deg_closed_form(std::uint32_t q, std::size_t k, std::size_t d) {
    if (k == 0) throw std::invalid_argument("pmf needs k >= 1");
    if (k == 1) {
        if (d == 0) return Rational(Int(1), Int(q));
        if (d == 1) return Rational(Int(q) - 1, Int(q));
        return Rational(0);
    }
    if (d == 0) return qpow(q, -static_cast<std::int64_t>(k));
    std::size_t ceil_half = (k + 1) / 2;
    if (d <= ceil_half) {
        std::int64_t e = static_cast<std::int64_t>(k) - 2 * static_cast<std::int64_t>(d) + 1;
        return Rational(Int(q) - 1) * qpow(q, -e);
    }
    return Rational(0);
}

bool pmf_deg_interior(std::size_t k, std::size_t d) {
    if (k == 1) return d <= 1;
    return d <= k / 2;
}

Rational expectation_closed_form(std::uint32_t q, std::size_t k) {
    if (k == 0) throw std::invalid_argument("expectation needs k >= 1");
    if (k == 1) return Rational(Int(q) - 1, Int(q));
    std::uint64_t c = (k + 1) / 2; // ceil(k/2)
    Int qq(q);
    Int numerator = ipow(qq, 2 * c + 1) * Int(c + 1) - Int(c + 2) * ipow(qq, 2 * c) + 1;
    Int denom = (qq * qq - 1) * (qq * qq - 1);
    Rational prefactor = Rational(qq - 1) * qpow(q, -(static_cast<std::int64_t>(k) - 1));
    return prefactor * Rational(numerator, denom);
}

Rational expectation_from_pmf(const std::vector<Rational>& pmf) {
    Rational e(0);
    for (std::size_t d = 0; d < pmf.size(); ++d)
        e = e + Rational(Int(d)) * pmf[d];
    return e;
}

Rational qmin_mass_totient(const Poly& q, std::size_t k) {
    return Rational(Int(totient(q))) * qpow(q.field().size(), -static_cast<std::int64_t>(k));
}

bool qmin_mass_interior(const Poly& q, std::size_t k) {
    return q.degree() >= 0 && 2 * static_cast<std::size_t>(q.degree()) <= k;
}

std::uint64_t primitive_tuple_count_enum(const Poly& q, std::size_t len) {
    if (len == 0) throw std::invalid_argument("tuple length must be >= 1");
    if (q.degree() == 0) return 0; // no divisors of degree < 0
    DivisorLattice lat = divisor_lattice(q);
    std::vector<Poly> eligible;
    for (const Poly& d : lat.divisors)
        if (d.degree() < q.degree()) eligible.push_back(d);
    if (eligible.size() < len) return 0;
    if (eligible.size() > 16)
        throw BudgetError("primitive-tuple enumeration infeasible for this divisor count");

    // Ordered tuples of distinct eligible divisors with gcd 1.
    std::uint64_t count = 0;
    std::vector<std::size_t> pick;
    std::vector<bool> used(eligible.size(), false);
    auto rec = [&](auto&& self) -> void {
        if (pick.size() == len) {
            Poly g = eligible[pick[0]];
            for (std::size_t i = 1; i < pick.size(); ++i) g = poly_gcd(g, eligible[pick[i]]);
            if (g.degree() == 0) ++count;
            return;
        }
        for (std::size_t i = 0; i < eligible.size(); ++i) {
            if (used[i]) continue;
            used[i] = true;
            pick.push_back(i);
            self(self);
            pick.pop_back();
            used[i] = false;
        }
    };
    rec(rec);
    return count;
}

namespace {

// Falling factorial n(n-1)...(n-len+1); zero once the product crosses zero.
std::int64_t falling(std::int64_t n, std::size_t len) {
    std::int64_t r = 1;
    for (std::size_t i = 0; i < len; ++i) {
        if (n - static_cast<std::int64_t>(i) <= 0) return 0;
        r *= n - static_cast<std::int64_t>(i);
    }
    return r;
}

} // namespace

std::int64_t primitive_tuple_count_closed_form(const Poly& q, std::size_t len) {
    if (len == 0) throw std::invalid_argument("tuple length must be >= 1");
    auto dq = static_cast<std::int64_t>(divisor_count(q));
    if (dq < static_cast<std::int64_t>(len)) return 0;
    std::int64_t total = falling(dq, len);
    DivisorLattice lat = divisor_lattice(q);
    for (std::size_t i = 0; i < lat.divisors.size(); ++i) {
        const Poly& n = lat.divisors[i];
        int mu = lat.mobius[i];
        if (mu == 0) continue;
        if (divisor_count(q / n) < len) continue;
        total += mu * falling(static_cast<std::int64_t>(divisor_count(n)), len);
    }
    return total;
}

Rational qmin_mass_closed_form_verbatim(const Poly& q, std::size_t k) {
    if (q.is_zero() || !q.is_monic())
        throw std::invalid_argument("closed form needs a monic Q");
    std::uint32_t qsize = q.field().size();
    Int acc = poly_abs(q);
    if (q.degree() >= 1) {
        DivisorLattice lat = divisor_lattice(q);
        for (const Poly& n : lat.divisors) {
            if (n.degree() >= q.degree()) continue;
            Poly rest = q / n;
            Int inner = 0;
            std::int64_t sign = -1;
            for (std::size_t len = 1;; ++len, sign = -sign) {
                std::uint64_t c = primitive_tuple_count_enum(rest, len);
                if (c == 0) break;
                inner += Int(sign) * Int(c);
            }
            acc += poly_abs(n) * inner;
        }
    }
    return Rational(acc) * qpow(qsize, -static_cast<std::int64_t>(k));
}

Rational joint_low_degree_bound(std::uint32_t q, std::size_t k, std::size_t n, std::size_t d) {
    std::int64_t e = static_cast<std::int64_t>(k * n) -
                     static_cast<std::int64_t>((n + 1) * d);
    return qpow(q, -e);
}

Rational joint_zero_mass(std::uint32_t q, std::size_t k, std::size_t n) {
    return qpow(q, -static_cast<std::int64_t>(n * k));
}

Int square_rank_count_closed_form(std::size_t r, std::size_t h, std::uint32_t q) {
    if (r > h) throw std::invalid_argument("rank exceeds matrix size");
    Int qq(q);
    if (r == 0) return 1;
    if (r == h) return ipow(qq, 2 * h - 2) * (qq - 1);
    return ipow(qq, 2 * r - 2) * (qq * qq - 1);
}

Int low_rank_count_closed_form(std::size_t r, std::uint32_t q) {
    return ipow(Int(q), 2 * r);
}

double BlockDimension::value() const {
    return std::log(static_cast<double>(count)) /
           (static_cast<double>(denominator) * std::log(static_cast<double>(q)));
}

std::string BlockDimension::log_ratio() const {
    std::ostringstream os;
    os << "log_" << q << "(" << count.str() << ")/" << denominator;
    return os.str();
}

BlockDimension block_count_closed_form(const Poly& P, std::size_t k, std::size_t d) {
    if (!P.is_monic() || !is_irreducible(P))
        throw std::invalid_argument("block count needs a monic irreducible P");
    if (d < 1 || d > (k + 1) / 2) throw std::invalid_argument("d out of range [1, ceil(k/2)]");
    std::uint32_t q = P.field().size();
    std::uint64_t degp = static_cast<std::uint64_t>(P.degree());
    Int pabs = ipow(Int(q), degp); // |P|
    BlockDimension out;
    out.count = ipow(pabs, k) - ipow(pabs, 2 * (d - 1));
    out.q = q;
    out.denominator = k * degp;
    return out;
}

BlockDimension missing_digit_dimension(std::uint32_t q, Int block_count, std::size_t k,
                                       std::size_t deg_p) {
    BlockDimension out;
    out.count = std::move(block_count);
    out.q = q;
    out.denominator = k * deg_p;
    return out;
}

} // namespace mindenom
