#include <random>

#include "doctest.h"

#include "bringlab/matrix.hpp"

using namespace bringlab;

namespace {
const FieldPtr& Q() { return Field::rationals(); }

ExactMatrix from_longs(const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<FieldElement>> r;
    for (const auto& row : rows) {
        std::vector<FieldElement> fr;
        for (long x : row) fr.push_back(FieldElement(x));
        r.push_back(fr);
    }
    return ExactMatrix::from_rows(Q(), r);
}
}  // namespace

TEST_CASE("nullspace basics") {
    CHECK(matrix_nullspace(ExactMatrix::identity(2, Q())).empty());
    auto ns = matrix_nullspace(from_longs({{1, 1}, {1, 1}}));
    REQUIRE(ns.size() == 1);
    CHECK(ns[0][0] == FieldElement(1));
    CHECK(ns[0][1] == FieldElement(-1));
}

TEST_CASE("nullspace exactness and rank-nullity on random matrices") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<long> d(-5, 5);
    for (int trial = 0; trial < 30; ++trial) {
        int rows = 2 + static_cast<int>(rng() % 4), cols = 2 + static_cast<int>(rng() % 5);
        ExactMatrix m(rows, cols, Q());
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m.at(i, j) = FieldElement(d(rng));
        auto ns = matrix_nullspace(m);
        CHECK(m.rank() + static_cast<int>(ns.size()) == cols);
        for (const auto& v : ns) {
            for (int i = 0; i < rows; ++i) {
                FieldElement acc = FieldElement::zero(Q());
                for (int j = 0; j < cols; ++j) acc += m.at(i, j) * v[static_cast<std::size_t>(j)];
                CHECK(acc.is_zero());
            }
        }
    }
}

TEST_CASE("inverse: identity, diagonal, singular") {
    ExactMatrix id = ExactMatrix::identity(3, Q());
    CHECK(matrix_inverse(id) == id);
    ExactMatrix d(2, 2, Q());
    d.at(0, 0) = FieldElement(2);
    d.at(1, 1) = FieldElement(Rational(1, 2));
    ExactMatrix di = matrix_inverse(d);
    CHECK(di.at(0, 0) == FieldElement(Rational(1, 2)));
    CHECK(di.at(1, 1) == FieldElement(2));
    CHECK_THROWS_AS(matrix_inverse(from_longs({{1, 2}, {2, 4}})), Singular);
}

TEST_CASE("solve") {
    ExactMatrix m = from_longs({{1, 2}, {3, 4}});
    int k = -5;
    auto x = matrix_solve(m, {FieldElement(5), FieldElement(11)}, k);
    CHECK(k == 0);
    CHECK(x[0] == FieldElement(1));
    CHECK(x[1] == FieldElement(2));
    // inconsistent
    auto y = matrix_solve(from_longs({{1, 1}, {1, 1}}), {FieldElement(0), FieldElement(1)}, k);
    CHECK(k == -1);
    CHECK(y.empty());
}
