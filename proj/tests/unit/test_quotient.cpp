#include "doctest.h"

#include "bringlab/quotient.hpp"

using namespace bringlab;

namespace {
const FieldPtr& Q() { return Field::rationals(); }
}

TEST_CASE("permutations compose and invert") {
    Permutation rho = Permutation::cycle({0, 1, 2, 3, 4});
    Permutation p = Permutation::identity();
    for (int i = 0; i < 5; ++i) p = rho.after(p);
    CHECK(p == Permutation::identity());
    Permutation k = Permutation::transposition(0, 1);
    CHECK(k.after(k) == Permutation::identity());
    CHECK(rho.after(rho.inverse()) == Permutation::identity());
}

TEST_CASE("coordinate action") {
    RationalFunction f = quotient_seed();
    CHECK(s5_act(Permutation::identity(), f) == f);
    // (01) swaps x0/x1 inside x0/x1^1: use a simple quotient
    VarListPtr v = make_vars({"x0", "x1", "x2", "x3", "x4"});
    RationalFunction g(parse_poly("x0", v, Q()), parse_poly("x1", v, Q()));
    RationalFunction gk = s5_act(Permutation::transposition(0, 1), g);
    CHECK(gk == RationalFunction(parse_poly("x1", v, Q()), parse_poly("x0", v, Q())));
    // rho^5 fixes the seed
    Permutation rho = Permutation::cycle({0, 1, 2, 3, 4});
    RationalFunction h = f;
    for (int i = 0; i < 5; ++i) h = s5_act(rho, h);
    CHECK(h == f);
}

TEST_CASE("the invariant sum") {
    RationalFunction t = build_t();
    // ten summands collapse onto five distinct orbit terms, twice each:
    // numerator 2 * sum of products of quintic powers
    CHECK(t.num.term_count() == 5);
    CHECK(t.num.total_degree() == 24);
    CHECK(t.den.total_degree() == 24);
    CHECK(t.num.is_homogeneous());
    // scale invariance is homogeneity of matching degrees
    VarListPtr v = make_vars({"x0", "x1", "x2", "x3", "x4"});
    MultiPoly expected = parse_poly(
        "2*(x1^5*x2^5*x3^5*x4^5+x0^5*x2^5*x3^5*x4^5+x0^5*x1^5*x3^5*x4^5"
        "+x0^5*x1^5*x2^5*x4^5+x0^5*x1^5*x2^5*x3^5)", v, Q());
    CHECK((t.num * parse_poly("1", v, Q())).equal_up_to_unit(expected));
    CHECK(t.den.equal_up_to_unit(parse_poly("x0^4*x1^4*x2^4*x3^4*x4^4", v, Q())));
}

TEST_CASE("newton values") {
    auto e = newton_symmetric_values();
    VarListPtr vv = make_vars({"v"});
    CHECK((e[0] - parse_poly("-(1+v)", vv, Q()).to_upoly(0)).is_zero());
    CHECK((e[1] - parse_poly("1+v+v^2", vv, Q()).to_upoly(0)).is_zero());
    CHECK((e[2] - parse_poly("-(1+v)*(1+v^2)", vv, Q()).to_upoly(0)).is_zero());
}

TEST_CASE("closed form in v") {
    TClosedForm cf = express_t_in_v();
    REQUIRE(cf.g.degree() == 20);
    std::vector<long> paper = {1, 5, 15, 35, 65, 101, 135, 155, 165, 165, 161,
                               165, 165, 155, 135, 101, 65, 35, 15, 5, 1};
    for (int k = 0; k <= 20; ++k)
        CHECK(cf.g.coeff(k) == FieldElement(paper[static_cast<std::size_t>(k)]));
    CHECK(gcd(cf.g, cf.g.derivative()).degree() == 0);
    CHECK(degree_audit(cf).status == CertReport::Status::pass);
}

TEST_CASE("degree audit rejects a truncated g") {
    TClosedForm cf = express_t_in_v();
    TClosedForm broken = cf;
    std::vector<FieldElement> c = cf.g.c;
    c.pop_back();  // degree 19
    broken.g = UPoly::of(Q(), std::move(c));
    CHECK(degree_audit(broken).status == CertReport::Status::fail);
}
