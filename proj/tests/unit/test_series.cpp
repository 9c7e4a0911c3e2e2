#include "doctest.h"

#include "bringlab/series.hpp"

using namespace bringlab;

namespace {
const FieldPtr& Q() { return Field::rationals(); }
LaurentSeries qpow(long e, long prec) { return LaurentSeries::q_power(Q(), e, prec); }
}  // namespace

TEST_CASE("division basics") {
    LaurentSeries q = qpow(1, 20);
    CHECK((qpow(2, 20) / q).valuation() == 1);
    // 1/(1-q) = geometric series
    LaurentSeries one = LaurentSeries::constant(FieldElement::one(Q()), 20);
    LaurentSeries g = one / (one - q);
    for (long e = 0; e < 15; ++e) CHECK(g.coeff(e).is_one());
    CHECK_THROWS_AS(one / LaurentSeries::zero(Q(), 20), DivisionByZeroSeries);
}

TEST_CASE("precision bookkeeping") {
    // product precision: min(val_a + prec_b, val_b + prec_a)
    LaurentSeries a(Q(), 2, {FieldElement(1)}, 10);   // q^2 + O(q^10)
    LaurentSeries b(Q(), -1, {FieldElement(1)}, 5);   // q^-1 + O(q^5)
    CHECK((a * b).precision() == 7);
    CHECK((a * b).valuation() == 1);
    // inversion costs 2*valuation
    CHECK(a.inverse().precision() == 6);
    CHECK(a.inverse().valuation() == -2);
    CHECK_THROWS_AS(a.coeff(10), InsufficientPrecision);
}

TEST_CASE("derivative and shift") {
    LaurentSeries s(Q(), -2, {FieldElement(3), FieldElement(0), FieldElement(5)}, 6);
    LaurentSeries d = s.derivative();
    CHECK(d.coeff(-3) == FieldElement(-6));
    CHECK(d.coeff(-1) == FieldElement(0));
    CHECK(d.precision() == 5);
    CHECK(s.shift(2).valuation() == 0);
}

TEST_CASE("equality up to shared precision") {
    LaurentSeries a(Q(), 0, {FieldElement(1), FieldElement(2)}, 9);
    // the q^2 term falls outside this series' window and is discarded
    LaurentSeries b(Q(), 0, {FieldElement(1), FieldElement(2), FieldElement(7)}, 2);
    CHECK(b.precision() == 2);
    CHECK(a.agrees_with(b));
    LaurentSeries c(Q(), 0, {FieldElement(1), FieldElement(2), FieldElement(7)}, 5);
    CHECK(!a.agrees_with(c));
    CHECK((a - c).valuation() == 2);
}

TEST_CASE("pow with negative valuation") {
    LaurentSeries x = qpow(-1, 12) + LaurentSeries::constant(FieldElement(1), 12);
    LaurentSeries p = x.pow(3);
    CHECK(p.valuation() == -3);
    CHECK(p.coeff(-2) == FieldElement(3));
    CHECK(p.coeff(0) == FieldElement(1));
}
