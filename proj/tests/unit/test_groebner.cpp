#include <random>

#include "doctest.h"

#include "bringlab/groebner.hpp"

using namespace bringlab;

namespace {
const FieldPtr& Q() { return Field::rationals(); }

MultiPoly s_poly(const MultiPoly& f, const MultiPoly& g) {
    Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
    Monomial mf = *l.divide(f.leading_monomial());
    Monomial mg = *l.divide(g.leading_monomial());
    return f.mul_term(mf, g.leading_coeff()) - g.mul_term(mg, f.leading_coeff());
}
}  // namespace

TEST_CASE("single-generator basis") {
    VarListPtr v = make_vars({"x", "y"});
    auto basis = buchberger({parse_poly("x", v, Q())}, MonomialOrder::lex());
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == parse_poly("x", v, Q()).with_order(MonomialOrder::lex()));
    CHECK(normal_form(parse_poly("x^2", v, Q()), basis, MonomialOrder::lex()).is_zero());
    CHECK(normal_form(parse_poly("y", v, Q()), basis, MonomialOrder::lex()) ==
          parse_poly("y", v, Q()).with_order(MonomialOrder::lex()));
}

TEST_CASE("twisted cubic implicitization under lex") {
    VarListPtr v = make_vars({"x", "y", "z"});
    std::vector<MultiPoly> gens = {parse_poly("x^2-y", v, Q()),
                                   parse_poly("x^3-z", v, Q())};
    auto basis = buchberger(gens, MonomialOrder::lex());
    // the reduced lex basis of the twisted cubic's ideal
    bool found = false;
    for (const auto& g : basis)
        if (g.equal_up_to_unit(parse_poly("y^3-z^2", v, Q()))) found = true;
    CHECK(found);
    CHECK(basis.size() == 4);
    // every input reduces to zero; every S-polynomial of the output reduces to zero
    for (const auto& g : gens)
        CHECK(normal_form(g, basis, MonomialOrder::lex()).is_zero());
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            CHECK(normal_form(s_poly(basis[i], basis[j]), basis, MonomialOrder::lex()).is_zero());
}

TEST_CASE("reduced basis is permutation invariant") {
    VarListPtr v = make_vars({"x", "y", "z"});
    std::vector<MultiPoly> gens = {parse_poly("x^2-y", v, Q()),
                                   parse_poly("x^3-z", v, Q()),
                                   parse_poly("x*y-z", v, Q())};
    auto b1 = buchberger(gens, MonomialOrder::grevlex());
    std::vector<std::vector<std::size_t>> perms = {{1, 0, 2}, {2, 1, 0}, {1, 2, 0}};
    for (const auto& perm : perms) {
        std::vector<MultiPoly> shuffled;
        for (std::size_t i : perm) shuffled.push_back(gens[i]);
        auto b2 = buchberger(shuffled, MonomialOrder::grevlex());
        REQUIRE(b1.size() == b2.size());
        for (std::size_t i = 0; i < b1.size(); ++i) CHECK(b1[i] == b2[i]);
    }
}

TEST_CASE("normal form idempotence and division remainder") {
    VarListPtr v = make_vars({"x", "y"});
    auto basis = buchberger({parse_poly("x^2-y", v, Q()), parse_poly("x*y-1", v, Q())},
                            MonomialOrder::grevlex());
    std::mt19937 rng(2024);
    std::uniform_int_distribution<long> d(-4, 4);
    for (int trial = 0; trial < 20; ++trial) {
        MultiPoly p = MultiPoly::zero(Q(), v);
        for (int t = 0; t < 6; ++t) {
            std::vector<unsigned> e = {static_cast<unsigned>(rng() % 4),
                                       static_cast<unsigned>(rng() % 4)};
            p.add_term(Monomial(e), FieldElement(d(rng)));
        }
        MultiPoly nf = normal_form(p, basis, MonomialOrder::grevlex());
        CHECK(normal_form(nf, basis, MonomialOrder::grevlex()) == nf);
        // remainder is reduced: no term divisible by a basis lead
        for (const auto& [m, c] : nf.terms())
            for (const auto& g : basis) CHECK(!g.leading_monomial().divides(m));
    }
}

TEST_CASE("elimination: trivial and twisted cubic") {
    VarListPtr v = make_vars({"T", "x"});
    Ideal i1;
    i1.generators = {parse_poly("T-x", v, Q()), parse_poly("x", v, Q())};
    Ideal e1 = eliminate(i1, {"x"});
    REQUIRE(e1.generators.size() == 1);
    VarListPtr tv = make_vars({"T"});
    CHECK(e1.generators[0].equal_up_to_unit(parse_poly("T", tv, Q())));

    VarListPtr v3 = make_vars({"x", "y", "z"});
    Ideal i2;
    i2.generators = {parse_poly("x^2-y", v3, Q()), parse_poly("x^3-z", v3, Q())};
    Ideal e2 = eliminate(i2, {"x"});
    REQUIRE(e2.generators.size() == 1);
    VarListPtr yz = make_vars({"y", "z"});
    CHECK(e2.generators[0].equal_up_to_unit(parse_poly("y^3-z^2", yz, Q())));
    // soundness: the generator is a member of the original ideal
    MultiPoly lifted = e2.generators[0].with_vars(v3);
    CHECK(ideal_contains(i2, lifted, MonomialOrder::grevlex()));
}

TEST_CASE("pair cap raises ResourceLimit") {
    VarListPtr v = make_vars({"x", "y", "z"});
    GroebnerOptions opts;
    opts.pair_cap = 1;
    std::vector<MultiPoly> gens = {parse_poly("x^2-y", v, Q()), parse_poly("x^3-z", v, Q()),
                                   parse_poly("y^2-x*z", v, Q())};
    CHECK_THROWS_AS(buchberger(gens, MonomialOrder::lex(), opts), ResourceLimit);
}
