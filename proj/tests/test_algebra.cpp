#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mindenom/errors.hpp"
#include "mindenom/factor.hpp"
#include "mindenom/parse.hpp"
#include "mindenom/poly.hpp"

#include <set>

using namespace mindenom;

TEST_CASE("prime field arithmetic") {
    Field f2 = Field::prime(2);
    CHECK((f2.one() + f2.one()).is_zero());

    Field f3 = Field::prime(3);
    FieldElem two = f3.elem(2);
    CHECK(two.inverse() == two); // 2*2 = 4 = 1 mod 3
    CHECK((two * two) == f3.one());
    CHECK((-f3.one()) == two);

    CHECK_THROWS_AS(f3.zero().inverse(), std::domain_error);
    CHECK_THROWS_AS((void)(f2.one() + f3.one()), FieldMismatchError);
}

TEST_CASE("extension field arithmetic") {
    // Default modulus for F_4 is t^2+t+1, so t*t = t+1.
    Field f4 = Field::extension(2, 2);
    CHECK(f4.modulus() == std::vector<std::uint32_t>{1, 1, 1});
    FieldElem t = f4.elem_from_coeffs({0, 1});
    FieldElem t_plus_1 = f4.elem_from_coeffs({1, 1});
    CHECK(t * t == t_plus_1);
    CHECK(t * t_plus_1 == f4.one()); // t(t+1) = t^2+t = 1
    CHECK(t.inverse() == t_plus_1);

    // Field axioms over the whole (small) field.
    for (std::uint32_t a = 0; a < 4; ++a)
        for (std::uint32_t b = 0; b < 4; ++b) {
            CHECK(f4.elem(a) + f4.elem(b) == f4.elem(b) + f4.elem(a));
            CHECK(f4.elem(a) * f4.elem(b) == f4.elem(b) * f4.elem(a));
        }
    for (std::uint32_t a = 1; a < 4; ++a)
        CHECK(f4.elem(a) * f4.elem(a).inverse() == f4.one());

    CHECK_THROWS_AS(Field::extension(2, 2, {0, 0, 1}), std::invalid_argument); // t^2 reducible
    CHECK_THROWS_AS(Field::prime(4), std::invalid_argument);
}

TEST_CASE("field element order is the index order") {
    Field f4 = Field::extension(2, 2);
    CHECK(f4.zero() < f4.one());
    CHECK(f4.one() < f4.elem(2));
    CHECK(f4.elem(2) < f4.elem(3));
    CHECK(f4.elem(2).coeffs() == std::vector<std::uint32_t>{0, 1}); // t
}

TEST_CASE("polynomial division") {
    Field f2 = Field::prime(2);
    Poly x = Poly::x(f2);
    Poly x2x = parse_poly(f2, "x^2+x");
    DivModResult dm = poly_divmod(x2x, x);
    CHECK(dm.quot == parse_poly(f2, "x+1"));
    CHECK(dm.rem.is_zero());

    dm = poly_divmod(parse_poly(f2, "x^2+1"), parse_poly(f2, "x+1"));
    CHECK(dm.quot == parse_poly(f2, "x+1")); // (x+1)^2 in characteristic 2
    CHECK(dm.rem.is_zero());

    Field f3 = Field::prime(3);
    dm = poly_divmod(parse_poly(f3, "x^2"), parse_poly(f3, "x+1"));
    CHECK(dm.quot == parse_poly(f3, "x+2"));
    CHECK(dm.rem == parse_poly(f3, "1"));

    CHECK_THROWS_AS(poly_divmod(x, Poly(f2)), std::domain_error);
}

TEST_CASE("division reconstruction, exhaustively") {
    for (std::uint32_t q : {2u, 3u}) {
        Field f = Field::prime(q);
        for (int da = 0; da <= 3; ++da)
            for (int db = 0; db <= 2; ++db)
                for (std::uint64_t ia = 0; ia < monic_count(f, da); ++ia)
                    for (std::uint64_t ib = 0; ib < monic_count(f, db); ++ib) {
                        Poly a = monic_at(f, da, ia);
                        Poly b = monic_at(f, db, ib);
                        DivModResult dm = poly_divmod(a, b);
                        CHECK(dm.quot * b + dm.rem == a);
                        CHECK(dm.rem.degree() < b.degree());
                    }
    }
}

TEST_CASE("gcd") {
    Field f2 = Field::prime(2);
    CHECK(poly_gcd(parse_poly(f2, "x^2"), parse_poly(f2, "x")) == parse_poly(f2, "x"));
    CHECK(poly_gcd(parse_poly(f2, "x+1"), parse_poly(f2, "x")) == parse_poly(f2, "1"));
    CHECK(poly_gcd(parse_poly(f2, "x^2+1"), parse_poly(f2, "x^2+x")) == parse_poly(f2, "x+1"));
    CHECK_THROWS_AS(poly_gcd(Poly(f2), Poly(f2)), std::domain_error);

    // gcd divides both arguments and is monic.
    Field f3 = Field::prime(3);
    for (std::uint64_t ia = 0; ia < monic_count(f3, 2); ++ia)
        for (std::uint64_t ib = 0; ib < monic_count(f3, 2); ++ib) {
            Poly g = poly_gcd(monic_at(f3, 2, ia), monic_at(f3, 2, ib));
            CHECK(g.is_monic());
            CHECK(divides(g, monic_at(f3, 2, ia)));
            CHECK(divides(g, monic_at(f3, 2, ib)));
        }
}

TEST_CASE("factorization") {
    Field f2 = Field::prime(2);
    Factorization fx = factor(parse_poly(f2, "x^2+x"));
    REQUIRE(fx.factors.size() == 2);
    CHECK(fx.factors[0].first == parse_poly(f2, "x"));
    CHECK(fx.factors[0].second == 1);
    CHECK(fx.factors[1].first == parse_poly(f2, "x+1"));
    CHECK(fx.factors[1].second == 1);

    fx = factor(parse_poly(f2, "x^2+1"));
    REQUIRE(fx.factors.size() == 1);
    CHECK(fx.factors[0].first == parse_poly(f2, "x+1"));
    CHECK(fx.factors[0].second == 2);

    fx = factor(parse_poly(f2, "x^2+x+1"));
    REQUIRE(fx.factors.size() == 1);
    CHECK(fx.factors[0].second == 1);
    CHECK(is_irreducible(parse_poly(f2, "x^2+x+1")));

    // Non-monic input: the leading coefficient lands in the unit.
    Field f3 = Field::prime(3);
    fx = factor(parse_poly(f3, "2*x^2+2*x"));
    CHECK(fx.unit == f3.elem(2));
    CHECK(fx.reassemble() == parse_poly(f3, "2*x^2+2*x"));

    CHECK_THROWS_AS(factor(Poly(f2)), std::domain_error);
}

TEST_CASE("factorization recomposes and yields irreducibles, exhaustively") {
    for (std::uint32_t q : {2u, 3u}) {
        Field f = Field::prime(q);
        for (int d = 1; d <= 4; ++d)
            for (std::uint64_t i = 0; i < monic_count(f, d); ++i) {
                Poly p = monic_at(f, d, i);
                Factorization fx = factor(p);
                CHECK(fx.reassemble() == p);
                for (const auto& [fac, e] : fx.factors) {
                    CHECK(e >= 1);
                    CHECK(is_irreducible(fac));
                }
            }
    }
}

TEST_CASE("divisor lattice") {
    Field f2 = Field::prime(2);
    Poly x = parse_poly(f2, "x");
    Poly x2 = parse_poly(f2, "x^2");
    DivisorLattice lat = divisor_lattice(x2);
    CHECK(lat.count == 3);
    REQUIRE(lat.divisors.size() == 3);
    CHECK(lat.divisors[0] == parse_poly(f2, "1"));
    CHECK(lat.divisors[1] == x);
    CHECK(lat.divisors[2] == x2);
    CHECK(lat.mobius_of(x) == -1);
    CHECK(lat.mobius_of(x2) == 0);

    Poly xx1 = parse_poly(f2, "x^2+x"); // x(x+1)
    CHECK(divisor_count(xx1) == 4);
    CHECK(mobius(xx1) == 1);

    DivisorLattice irred = divisor_lattice(parse_poly(f2, "x^2+x+1"));
    CHECK(irred.count == 2);

    CHECK_THROWS_AS(divisor_lattice(Poly(f2)), std::invalid_argument);
    Field f3 = Field::prime(3);
    CHECK_THROWS_AS(divisor_lattice(parse_poly(f3, "2*x")), std::invalid_argument);
}

TEST_CASE("mobius is multiplicative on coprime pairs") {
    for (std::uint32_t q : {2u, 3u}) {
        Field f = Field::prime(q);
        for (int da = 1; da <= 3; ++da)
            for (int db = 1; db <= 3; ++db)
                for (std::uint64_t ia = 0; ia < monic_count(f, da); ++ia)
                    for (std::uint64_t ib = 0; ib < monic_count(f, db); ++ib) {
                        Poly a = monic_at(f, da, ia);
                        Poly b = monic_at(f, db, ib);
                        if (poly_gcd(a, b).degree() != 0) continue;
                        CHECK(mobius(a * b) == mobius(a) * mobius(b));
                    }
    }
}

TEST_CASE("totient") {
    Field f2 = Field::prime(2);
    CHECK(totient(parse_poly(f2, "x")) == 1);
    CHECK(totient(parse_poly(f2, "x^2")) == 2);
    CHECK(totient(parse_poly(f2, "x^2+x+1")) == 3);
    CHECK(totient(parse_poly(f2, "1")) == 1);
    CHECK_THROWS_AS(totient(Poly(f2)), std::invalid_argument);
    Field f3 = Field::prime(3);
    CHECK_THROWS_AS(totient(parse_poly(f3, "2*x")), std::invalid_argument);
}

TEST_CASE("totient identities, exhaustively") {
    for (std::uint32_t q : {2u, 3u}) {
        Field f = Field::prime(q);
        // Möbius sum vs direct count, plus the divisor-sum identity.
        for (int d = 1; d <= 4; ++d)
            for (std::uint64_t i = 0; i < monic_count(f, d); ++i) {
                Poly p = monic_at(f, d, i);
                CHECK(totient(p) == totient_direct(p));
                std::uint64_t sum = 0;
                for (const Poly& div : divisor_lattice(p).divisors) sum += totient(div);
                std::uint64_t qd = 1;
                for (int j = 0; j < d; ++j) qd *= q;
                CHECK(sum == qd);
            }
        // Mass per degree: sum of Phi over monic Q of degree d.
        for (int d = 1; d <= 3; ++d) {
            std::uint64_t sum = 0;
            for_each_monic(f, d, [&](const Poly& p) { sum += totient(p); });
            std::uint64_t expect = q - 1;
            for (int j = 0; j < 2 * d - 1; ++j) expect *= q;
            CHECK(sum == expect);
        }
    }
}

TEST_CASE("monic enumeration") {
    Field f2 = Field::prime(2);
    CHECK(monic_count(f2, 0) == 1);
    CHECK(monic_at(f2, 0, 0) == parse_poly(f2, "1"));
    CHECK(monic_at(f2, 1, 0) == parse_poly(f2, "x"));
    CHECK(monic_at(f2, 1, 1) == parse_poly(f2, "x+1"));

    Field f3 = Field::prime(3);
    CHECK(monic_count(f3, 2) == 9);
    std::set<std::string> seen;
    Poly prev(f3);
    for (std::uint64_t i = 0; i < 9; ++i) {
        Poly p = monic_at(f3, 2, i);
        CHECK(p.is_monic());
        CHECK(p.degree() == 2);
        seen.insert(to_string(p));
        if (i > 0) CHECK(poly_less(prev, p)); // enumeration = canonical order
        prev = p;
    }
    CHECK(seen.size() == 9);
    CHECK_THROWS_AS(monic_count(f2, -1), std::invalid_argument);
}

TEST_CASE("polynomial literals") {
    Field f2 = Field::prime(2);
    CHECK(parse_poly(f2, "1,1,0,1") == parse_poly(f2, "x^3+x+1"));
    CHECK(parse_poly(f2, "0") .is_zero());
    CHECK(to_string(parse_poly(f2, "1,1,0,1")) == "x^3+x+1");

    Field f3 = Field::prime(3);
    Poly p3 = parse_poly(f3, "2*x^2+x+1");
    CHECK(p3.coeff(2) == f3.elem(2));
    CHECK(parse_poly(f3, to_string(p3)) == p3); // print/parse round trip

    Field f4 = Field::extension(2, 2);
    Poly pe = parse_poly(f4, "[1+t]*x^2+[t]");
    CHECK(pe.coeff(2) == f4.elem_from_coeffs({1, 1}));
    CHECK(pe.coeff(0) == f4.elem_from_coeffs({0, 1}));
    CHECK(parse_poly(f4, to_string(pe)) == pe);

    CHECK(parse_elem(f3, "2") == f3.elem(2));
    CHECK(parse_elem(f4, "t+1") == f4.elem(3));
    CHECK_THROWS_AS(parse_poly(f2, ""), ParseError);
    CHECK_THROWS_AS(parse_poly(f2, "x^"), ParseError);
    CHECK_THROWS_AS(parse_elem(f2, "t"), ParseError);
    CHECK_THROWS_AS(parse_elem(f4, "7"), ParseError);
}

TEST_CASE("digit strings") {
    Field f3 = Field::prime(3);
    auto digits = parse_digits(f3, "1,0,2");
    REQUIRE(digits.size() == 3);
    CHECK(digits[2] == f3.elem(2));
    CHECK(digits_to_string(digits) == "1,0,2");
    CHECK(parse_digits(f3, "").empty());
}
