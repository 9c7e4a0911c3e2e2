#include "doctest.h"

#include "bringlab/elliptic.hpp"

using namespace bringlab;

namespace {
const FieldPtr& Q() { return Field::rationals(); }

WeierstrassCurve e50a3() {
    return WeierstrassCurve::make(Q(), FieldElement(1), FieldElement(0), FieldElement(1),
                                  FieldElement(-1), FieldElement(-2));
}

WeierstrassCurve e100a3() {
    const FieldPtr& K = Field::root5();
    FieldElement eps = golden_eps();
    FieldElement one = FieldElement::one(K);
    return WeierstrassCurve::make(K, eps + one, eps, eps + one, FieldElement::zero(K),
                                  FieldElement::zero(K));
}
}  // namespace

TEST_CASE("standard invariants") {
    WeierstrassInvariants iv = invariants(e50a3());
    CHECK(iv.b2 == FieldElement(1));
    CHECK(iv.b4 == FieldElement(-1));
    CHECK(iv.b6 == FieldElement(-7));
    CHECK(iv.b8 == FieldElement(-2));
    CHECK(iv.c4 == FieldElement(25));
    CHECK(iv.disc == FieldElement(-1250L));
    CHECK(iv.j == FieldElement(Rational(-25, 2)));
    // b-identity
    CHECK(FieldElement(4) * iv.b8 == iv.b2 * iv.b6 - iv.b4 * iv.b4);

    // y^2 = x^3 + x has j = 1728
    WeierstrassCurve c = WeierstrassCurve::make(Q(), FieldElement(0), FieldElement(0),
                                                FieldElement(0), FieldElement(1),
                                                FieldElement(0));
    CHECK(invariants(c).j == FieldElement(1728L));

    // the quadratic-twist companion over Q(r5) has the same j
    CHECK(invariants(e100a3()).j.as_rational() == Rational(-25, 2));

    // singular curve: y^2 = x^3
    WeierstrassCurve s = WeierstrassCurve::make(Q(), FieldElement(0), FieldElement(0),
                                                FieldElement(0), FieldElement(0),
                                                FieldElement(0));
    CHECK_THROWS_AS(invariants(s), Singular);
}

TEST_CASE("transform apply: identity and j invariance") {
    WeierstrassCurve e = e50a3();
    Transform id{FieldElement(1), FieldElement(0), FieldElement(0), FieldElement(0)};
    CHECK(transform_apply(e, id) == e);
    std::vector<Transform> samples = {
        {FieldElement(2), FieldElement(3), FieldElement(-1), FieldElement(5)},
        {FieldElement(Rational(1, 3)), FieldElement(Rational(-2, 7)), FieldElement(4),
         FieldElement(Rational(9, 2))},
    };
    for (const auto& tr : samples) {
        WeierstrassCurve e2 = transform_apply(e, tr);
        CHECK(invariants(e2).j == invariants(e).j);
        // disc scales by u^-12
        CHECK(invariants(e2).disc == invariants(e).disc * tr.u.pow(12).inverse());
        // round trip through the inverse transform
        CHECK(transform_apply(e2, inverse_transform(tr)) == e);
    }
}

TEST_CASE("solve onto the golden-ratio model needs one quadratic step") {
    const FieldPtr& K = Field::root5();
    WeierstrassCurve e = e50a3().promote_to(K);
    WeierstrassCurve e1 = e100a3();
    std::vector<Transform> sols = transform_solve(e, e1);
    REQUIRE(sols.size() == 2);
    FieldElement eps = golden_eps();
    bool matched = false;
    for (const auto& tr : sols) {
        const FieldPtr& F = tr.u.field();
        REQUIRE(!F->is_rationals());
        REQUIRE(F->base().get() == K.get());
        // the adjoined slope satisfies s^2 + s + eps^2 = 0
        CHECK(F->min_poly()[0] == eps * eps);
        CHECK(F->min_poly()[1] == FieldElement::one(K));
        FieldElement s = FieldElement::generator(F);
        CHECK((s * s + s + (eps * eps).promote_to(F)).is_zero());
        if (tr.r == (-eps).promote_to(F) &&
            tr.u == (eps.pow(-2)).promote_to(F) *
                        (FieldElement::one(F) + FieldElement(2) * s))
            matched = true;
        CHECK(transform_apply(e, tr) == e1.promote_to(F));
    }
    CHECK(matched);
}

TEST_CASE("solve onto the twist companion stays in Q(r5)") {
    const FieldPtr& K = Field::root5();
    FieldElement r5 = FieldElement::generator(K);
    WeierstrassCurve e = e50a3().promote_to(K);
    WeierstrassCurve eb = WeierstrassCurve::make(K, FieldElement(1), FieldElement(1),
                                                 FieldElement(1), FieldElement(-13),
                                                 FieldElement(-219));
    std::vector<Transform> sols = transform_solve(e, eb);
    REQUIRE(sols.size() == 2);
    bool found = false;
    for (const auto& tr : sols) {
        CHECK(tr.u.field().get() == K.get());
        CHECK(transform_apply(e, tr) == eb);
        if (tr.u == r5 / FieldElement(5) && tr.r.is_zero() &&
            tr.s == (r5 - FieldElement(5).promote_to(K)) / FieldElement(10) &&
            tr.t == (r5 - FieldElement(25).promote_to(K)) / FieldElement(50))
            found = true;
    }
    CHECK(found);
}

TEST_CASE("self solve and j mismatch") {
    WeierstrassCurve e = e50a3();
    std::vector<Transform> sols = transform_solve(e, e);
    bool id = false;
    for (const auto& tr : sols)
        if (tr.u.is_one() && tr.r.is_zero() && tr.s.is_zero() && tr.t.is_zero()) id = true;
    CHECK(id);
    WeierstrassCurve other = WeierstrassCurve::make(Q(), FieldElement(0), FieldElement(0),
                                                    FieldElement(0), FieldElement(1),
                                                    FieldElement(0));
    CHECK(transform_solve(e, other).empty());
}

TEST_CASE("curve records parse with golden-ratio entries") {
    std::string path = std::string(BRINGLAB_DATA_DIR) + "/curves.txt";
    WeierstrassCurve a = curve_from_file(path, "50.a3");
    CHECK(a.field->is_rationals());
    CHECK(a == e50a3());
    WeierstrassCurve b = curve_from_file(path, "100.1-a3");
    CHECK(b == e100a3());
    WeierstrassCurve c = curve_from_file(path, "50.b3");
    CHECK(invariants(c).j == FieldElement(Rational(-25, 2)));
    CHECK_THROWS_AS(curve_from_file(path, "nope"), Error);
}
