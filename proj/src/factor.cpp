#include "mindenom/factor.hpp"

#include <algorithm>
#include <stdexcept>

namespace mindenom {

Poly Factorization::reassemble() const {
    Poly r = Poly::constant(unit);
    for (const auto& [f, e] : factors)
        for (int i = 0; i < e; ++i) r = r * f;
    return r;
}

bool Factorization::square_free() const {
    return std::all_of(factors.begin(), factors.end(),
                       [](const auto& fe) { return fe.second == 1; });
}

bool is_irreducible(const Poly& p) {
    if (p.degree() < 1) return false;
    const Field& f = p.field();
    for (int d = 1; 2 * d <= p.degree(); ++d) {
        std::uint64_t n = monic_count(f, d);
        for (std::uint64_t i = 0; i < n; ++i)
            if (divides(monic_at(f, d, i), p)) return false;
    }
    return true;
}

Factorization factor(const Poly& a) {
    if (a.is_zero()) throw std::domain_error("cannot factor the zero polynomial");
    const Field& f = a.field();
    Factorization out{a.leading(), {}};
    Poly work = a.made_monic();

    // Trial division in ascending degree: any monic divisor reached this
    // way is irreducible because all smaller prime factors are gone.
    for (int d = 1; 2 * d <= work.degree(); ++d) {
        std::uint64_t n = monic_count(f, d);
        for (std::uint64_t i = 0; i < n && 2 * d <= work.degree(); ++i) {
            Poly p = monic_at(f, d, i);
            int e = 0;
            while (divides(p, work)) {
                work = work / p;
                ++e;
            }
            if (e > 0) out.factors.emplace_back(p, e);
        }
    }
    if (work.degree() >= 1) out.factors.emplace_back(work, 1);
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& x, const auto& y) { return poly_less(x.first, y.first); });
    return out;
}

std::vector<Poly> monic_irreducibles(const Field& f, int deg) {
    std::vector<Poly> out;
    for_each_monic(f, deg, [&](const Poly& p) {
        if (is_irreducible(p)) out.push_back(p);
    });
    return out;
}

DivisorLattice divisor_lattice(const Poly& q) {
    if (q.is_zero() || !q.is_monic())
        throw std::invalid_argument("divisor lattice needs a monic, nonzero polynomial");
    Factorization fac = factor(q);
    const auto& primes = fac.factors;

    DivisorLattice out;
    std::vector<int> exps(primes.size(), 0);
    std::vector<std::pair<Poly, int>> items; // (divisor, mobius)
    for (;;) {
        Poly d = Poly::constant(q.field().one());
        int mu = 1;
        for (std::size_t i = 0; i < primes.size(); ++i) {
            for (int e = 0; e < exps[i]; ++e) d = d * primes[i].first;
            if (exps[i] >= 2) mu = 0;
            if (exps[i] == 1) mu = -mu;
        }
        items.emplace_back(std::move(d), mu);
        // Odometer over exponent tuples.
        std::size_t i = 0;
        for (; i < primes.size(); ++i) {
            if (exps[i] < primes[i].second) {
                ++exps[i];
                break;
            }
            exps[i] = 0;
        }
        if (i == primes.size()) break;
    }
    std::sort(items.begin(), items.end(),
              [](const auto& x, const auto& y) { return poly_less(x.first, y.first); });
    for (auto& [d, mu] : items) {
        out.divisors.push_back(std::move(d));
        out.mobius.push_back(mu);
    }
    out.count = out.divisors.size();
    return out;
}

int DivisorLattice::mobius_of(const Poly& d) const {
    auto it = std::lower_bound(divisors.begin(), divisors.end(), d, PolyLess{});
    if (it == divisors.end() || !(*it == d))
        throw std::invalid_argument("not a divisor");
    return mobius[static_cast<std::size_t>(it - divisors.begin())];
}

int mobius(const Poly& q) {
    if (q.is_zero() || !q.is_monic())
        throw std::invalid_argument("mobius needs a monic, nonzero polynomial");
    Factorization fac = factor(q);
    if (!fac.square_free()) return 0;
    return fac.prime_count() % 2 == 0 ? 1 : -1;
}

std::uint64_t divisor_count(const Poly& q) {
    if (q.is_zero() || !q.is_monic())
        throw std::invalid_argument("divisor count needs a monic, nonzero polynomial");
    std::uint64_t n = 1;
    for (const auto& [f, e] : factor(q).factors) n *= static_cast<std::uint64_t>(e) + 1;
    return n;
}

std::uint64_t totient_direct(const Poly& q) {
    if (q.is_zero() || !q.is_monic())
        throw std::invalid_argument("totient needs a monic, nonzero polynomial");
    const Field& f = q.field();
    if (q.degree() == 0) return 1; // only P = 0 has deg < 0, and gcd(0,1) = 1
    std::uint64_t count = 0;
    // All polynomials (not only monic) of degree < deg q, including 0.
    std::uint64_t total = 1;
    for (int i = 0; i < q.degree(); ++i) total *= f.size();
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::vector<FieldElem> c;
        c.reserve(static_cast<std::size_t>(q.degree()));
        std::uint64_t rest = idx;
        for (int i = 0; i < q.degree(); ++i) {
            c.push_back(f.elem(static_cast<std::uint32_t>(rest % f.size())));
            rest /= f.size();
        }
        Poly p(f, std::move(c));
        if (p.is_zero()) continue; // gcd(0, q) = q != 1 for deg q >= 1
        if (poly_gcd(p, q).degree() == 0) ++count;
    }
    return count;
}

std::uint64_t totient(const Poly& q) {
    if (q.is_zero() || !q.is_monic())
        throw std::invalid_argument("totient needs a monic, nonzero polynomial");
    const Field& f = q.field();
    DivisorLattice lat = divisor_lattice(q);
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < lat.divisors.size(); ++i) {
        const Poly& d = lat.divisors[i];
        int mu = lat.mobius_of(q / d);
        if (mu == 0) continue;
        std::int64_t qd = 1;
        for (int j = 0; j < d.degree(); ++j) qd *= f.size();
        sum += mu * qd;
    }
    if (sum < 0) throw std::logic_error("totient: negative Möbius sum");
    std::uint64_t value = static_cast<std::uint64_t>(sum);

    // Self-check against the definition when the enumeration is small.
    std::uint64_t space = 1;
    bool small = true;
    for (int i = 0; i < q.degree(); ++i) {
        space *= f.size();
        if (space > 1u << 20) {
            small = false;
            break;
        }
    }
    if (small && totient_direct(q) != value)
        throw std::logic_error("totient: Möbius sum disagrees with direct count");
    return value;
}

} // namespace mindenom
