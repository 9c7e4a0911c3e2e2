#pragma once

#include <array>

#include "bringlab/curves.hpp"

namespace bringlab {

/// Permutation of {0,...,4}.
struct Permutation {
    std::array<int, 5> img{0, 1, 2, 3, 4};

    static Permutation identity() { return {}; }
    /// Cycle notation, e.g. cycle({0,1,2,3,4}) maps 0->1->2->3->4->0.
    static Permutation cycle(const std::vector<int>& c);
    static Permutation transposition(int a, int b);

    Permutation after(const Permutation& first) const;  // this ∘ first
    Permutation inverse() const;
    bool operator==(const Permutation& o) const { return img == o.img; }
};

/// Quotient of polynomials in x0..x4 over Q, kept in cleared form: common
/// monomial factors cancelled, integer content removed, denominator's
/// leading coefficient positive.
struct RationalFunction {
    MultiPoly num;
    MultiPoly den;

    RationalFunction() = default;
    RationalFunction(MultiPoly n, MultiPoly d);
    RationalFunction operator+(const RationalFunction& o) const;
    bool operator==(const RationalFunction& o) const;
    void normalize();
};

/// Coordinate permutation action on a rational function.
RationalFunction s5_act(const Permutation& sigma, const RationalFunction& f);

/// The monomial x0 x1 x2 x3 / x4^4.
RationalFunction quotient_seed();

/// The invariant: sum of rho^i(T) and kappa rho^i(T), i = 1..5, for
/// rho = (01234), kappa = (01), over a common cleared denominator.
RationalFunction build_t();

struct TClosedForm {
    UPoly g;                        // degree-20 numerator polynomial
    std::array<int, 3> den_shape;   // exponents of v, 1+v, 1+v^2
};

/// Sets x0 = 1, x1 = v, solves the elementary symmetric functions of the
/// remaining coordinates from the three vanishing power sums via Newton's
/// identities, reduces the invariant to a function of v, and returns it in
/// the shape -2 g(v) / (v^4 (1+v)^4 (1+v^2)^4). Throws ShapeMismatch if the
/// reduced denominator is not that product.
TClosedForm express_t_in_v();

/// Newton solve used by express_t_in_v: elementary symmetric values
/// (e1, e2, e3) over Q[v] of the three remaining coordinates.
std::array<UPoly, 3> newton_symmetric_values();

/// Degree bookkeeping: deg g = 20, g squarefree, fiber count 20 x 6 = 120
/// equals the order of S5 (the factor 6 is a recorded assumption, not
/// recomputed), plus a sample-fiber squarefreeness probe.
CertReport degree_audit(const TClosedForm& cf);

}  // namespace bringlab
