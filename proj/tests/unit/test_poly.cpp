#include "doctest.h"

#include "bringlab/poly.hpp"

using namespace bringlab;

namespace {
const FieldPtr& Q() { return Field::rationals(); }
}

TEST_CASE("parser round trips") {
    VarListPtr v = make_vars({"x", "y", "z", "w"});
    for (const char* text : {
             "x^2 - y",
             "-(x^2+y^2)+2*(z^2+w^2)",
             "1/2*x - 3",
             "x^3+x*y^2+2*y^3-4*x*z^2-8*x*z*w",
             "7",
             "0",
         }) {
        MultiPoly p = parse_poly(text, v, Q());
        MultiPoly back = parse_poly(p.str(), v, Q());
        CHECK(p == back);
    }
    MultiPoly q = parse_poly("-(x^2+y^2)+2*(z^2+w^2)", v, Q());
    CHECK(q.coeff(Monomial({2})) == FieldElement(-1));
    CHECK(q.coeff(Monomial({0, 0, 2})) == FieldElement(2));
    MultiPoly c = parse_poly("1/2*x - 3", v, Q());
    CHECK(c.coeff(Monomial({1})) == FieldElement(Rational(1, 2)));
    CHECK(c.coeff(Monomial()) == FieldElement(-3));
}

TEST_CASE("parse errors carry position and expectation") {
    VarListPtr v = make_vars({"x"});
    CHECK_THROWS_AS(parse_poly("x +", v, Q()), ParseError);
    CHECK_THROWS_AS(parse_poly("x^", v, Q()), ParseError);
    CHECK_THROWS_AS(parse_poly("(x", v, Q()), ParseError);
    CHECK_THROWS_AS(parse_poly("q + 1", v, Q()), ParseError);
    try {
        parse_poly("x + unknown", v, Q());
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position == 4);
    }
}

TEST_CASE("monomial orders") {
    // grevlex vs lex on x^2 vs x y vs y^3 (x > y)
    Monomial x2({2, 0}), xy({1, 1}), y3({0, 3});
    MonomialOrder grev = MonomialOrder::grevlex();
    MonomialOrder lex = MonomialOrder::lex();
    CHECK(grev.compare(y3, x2) > 0);   // higher total degree wins
    CHECK(grev.compare(x2, xy) > 0);   // same degree: reverse-lex tie break
    CHECK(lex.compare(x2, y3) > 0);    // lex: x-power dominates
    // block order eliminating the first variable
    MonomialOrder blk = MonomialOrder::block(1);
    CHECK(blk.compare(xy, y3) > 0);    // any x beats pure-y
    CHECK(blk.compare(x2, xy) > 0);
}

TEST_CASE("arithmetic, substitution, series evaluation") {
    VarListPtr v = make_vars({"x", "y"});
    MultiPoly p = parse_poly("x^2-y", v, Q());
    MultiPoly q = parse_poly("x+y", v, Q());
    CHECK((p * q).total_degree() == 3);
    CHECK((p + (-p)).is_zero());
    // substitute x -> t^1, y -> t^2 kills x^2 - y
    VarListPtr tv = make_vars({"t"});
    std::vector<MultiPoly> images = {MultiPoly::variable(Q(), tv, 0),
                                     parse_poly("t^2", tv, Q())};
    CHECK(p.substitute(images).is_zero());
    // series evaluation
    LaurentSeries t = LaurentSeries::q_power(Q(), 1, 12);
    LaurentSeries t2 = t * t;
    CHECK(p.eval_series({t, t2}).is_zero());
    CHECK(!p.eval_series({t, t}).is_zero());
}

TEST_CASE("normalization helpers") {
    VarListPtr v = make_vars({"x", "y"});
    MultiPoly p = parse_poly("-2*x^2 + 4*y", v, Q());
    MultiPoly n = p.normalized_integer();
    CHECK(n == parse_poly("x^2 - 2*y", v, Q()));
    CHECK(p.equal_up_to_unit(n));
    CHECK(!p.equal_up_to_unit(parse_poly("x^2 + 2*y", v, Q())));
    MultiPoly t = parse_poly("3*x + 6", v, Q()).normalized_trailing_one();
    CHECK(t == parse_poly("1/2*x + 1", v, Q()));
}

TEST_CASE("homogeneous detection and degree queries") {
    VarListPtr v = make_vars({"x", "y"});
    CHECK(parse_poly("x^2+x*y", v, Q()).is_homogeneous());
    CHECK(!parse_poly("x^2+x", v, Q()).is_homogeneous());
    CHECK(parse_poly("x^3*y+2*x", v, Q()).degree_in(0) == 3);
}
