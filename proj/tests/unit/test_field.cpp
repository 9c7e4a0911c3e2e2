#include <random>

#include "doctest.h"

#include "bringlab/field.hpp"

using namespace bringlab;

TEST_CASE("golden ratio inverse in Q(r5)") {
    FieldElement eps = golden_eps();
    // eps^2 = eps + 1 forces eps^-1 = eps - 1
    CHECK(eps * eps == eps + FieldElement::one(Field::root5()));
    CHECK(eps.inverse() == eps - FieldElement::one(Field::root5()));
    CHECK((eps.inverse() * eps).is_one());
}

TEST_CASE("i inverse in Q(i)") {
    FieldElement i = FieldElement::generator(Field::gaussian());
    CHECK(i.inverse() == -i);
    CHECK((i * i) == FieldElement::from_rational(Field::gaussian(), Rational(-1)));
}

TEST_CASE("inverse of 1+zeta5 via extended Euclid") {
    const FieldPtr& F = Field::zeta5();
    FieldElement z = FieldElement::generator(F);
    FieldElement e = FieldElement::one(F) + z;
    FieldElement inv = e.inverse();
    CHECK((inv * e).is_one());
    CHECK_THROWS_AS(FieldElement::zero(F).inverse(), ZeroDivision);
}

TEST_CASE("non-invertible element reports a reducible modulus") {
    // x^2 - 1 is reducible; x - 1 shares a factor with it
    const FieldPtr& Q = Field::rationals();
    std::vector<FieldElement> mp = {FieldElement(-1), FieldElement(0), FieldElement(1)};
    FieldPtr R = Field::extension(Q, "Q[x]/(x^2-1)", "g", std::move(mp));
    FieldElement bad = FieldElement::generator(R) - FieldElement::one(R);
    CHECK_THROWS_AS(bad.inverse(), NonInvertible);
}

TEST_CASE("tower extension: s with s^2 + s + eps^2 = 0 over Q(r5)") {
    const FieldPtr& K = Field::root5();
    FieldElement eps = golden_eps();
    std::vector<FieldElement> mp = {eps * eps, FieldElement::one(K), FieldElement::one(K)};
    FieldPtr E = Field::extension(K, "K(s)", "s", std::move(mp));
    FieldElement s = FieldElement::generator(E);
    CHECK((s * s + s + (eps * eps).promote_to(E)).is_zero());
    CHECK(E->absolute_degree() == 4);
    FieldElement t = (s + eps.promote_to(E)).inverse();
    CHECK((t * (s + eps.promote_to(E))).is_one());
}

TEST_CASE("field axioms on randomized elements") {
    std::mt19937 rng(20240501);
    std::uniform_int_distribution<long> d(-9, 9);
    auto rand_elem = [&](const FieldPtr& F) {
        std::vector<FieldElement> c;
        for (int i = 0; i < F->degree(); ++i)
            c.push_back(FieldElement(Rational(d(rng), 1 + std::abs(d(rng)))));
        return FieldElement::from_coords(F, std::move(c));
    };
    for (const FieldPtr& F : {Field::gaussian(), Field::root5(), Field::zeta5()}) {
        for (int trial = 0; trial < 25; ++trial) {
            FieldElement a = rand_elem(F), b = rand_elem(F), c = rand_elem(F);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
        }
    }
}

TEST_CASE("field square roots") {
    const FieldPtr& K = Field::root5();
    FieldElement r5 = FieldElement::generator(K);
    // 1/5 = (r5/5)^2
    auto u = field_sqrt(FieldElement::from_rational(K, Rational(1, 5)));
    REQUIRE(u.has_value());
    CHECK(*u * *u == FieldElement::from_rational(K, Rational(1, 5)));
    // eps - 3 is negative in both real embeddings' product sense: not a square
    FieldElement eps = golden_eps();
    CHECK(!field_sqrt(eps - FieldElement(3).promote_to(K)).has_value());
    // a square with nonzero generator part
    FieldElement v = (FieldElement(2).promote_to(K) + r5);
    auto w = field_sqrt(v * v);
    REQUIRE(w.has_value());
    CHECK(*w * *w == v * v);
}

TEST_CASE("upoly gcd and xgcd") {
    const FieldPtr& Q = Field::rationals();
    // (x+1)^2 (x-2) and (x+1)(x-3)
    UPoly x = UPoly::x(Q);
    UPoly one = UPoly::constant(FieldElement::one(Q));
    auto lin = [&](long c) { return x + UPoly::constant(FieldElement(c)); };
    UPoly a = lin(1) * lin(1) * lin(-2);
    UPoly b = lin(1) * lin(-3);
    CHECK(gcd(a, b).str("x") == "x + 1");
    UPoly g, u, v;
    xgcd(a, b, g, u, v);
    CHECK((u * a + v * b - g).is_zero());
    (void)one;
}
