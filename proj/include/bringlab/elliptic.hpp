#pragma once

#include "bringlab/field.hpp"
#include "bringlab/report.hpp"

namespace bringlab {

/// Long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
/// over an exact field.
struct WeierstrassCurve {
    FieldPtr field;
    FieldElement a1, a2, a3, a4, a6;

    static WeierstrassCurve make(const FieldPtr& f, const FieldElement& a1,
                                 const FieldElement& a2, const FieldElement& a3,
                                 const FieldElement& a4, const FieldElement& a6);
    WeierstrassCurve promote_to(const FieldPtr& f) const;
    bool operator==(const WeierstrassCurve& o) const;
    std::string str() const;
};

struct WeierstrassInvariants {
    FieldElement b2, b4, b6, b8, c4, c6, disc, j;
};

/// The standard b-, c-quantities, discriminant and j = c4^3 / disc.
/// Throws Singular when the discriminant vanishes.
WeierstrassInvariants invariants(const WeierstrassCurve& e);

/// Coordinate change (u, r, s, t), u invertible.
struct Transform {
    FieldElement u, r, s, t;
    std::string str() const;
};

/// The curve in the transformed coordinates: u a1' = a1 + 2s, and the four
/// companion relations. j is preserved; disc scales by u^-12.
WeierstrassCurve transform_apply(const WeierstrassCurve& e, const Transform& t);

/// The coordinate change undoing `t`.
Transform inverse_transform(const Transform& t);

/// All coordinate changes from e to e2 over their common field K, or over
/// one quadratic extension of K constructed on demand (the returned
/// transforms then live in that extension). Returns {} when the j-invariants
/// differ. Throws ExtensionRequired when a solution would need more than
/// one quadratic step (j = 0 or 1728 special forms beyond scope).
std::vector<Transform> transform_solve(const WeierstrassCurve& e, const WeierstrassCurve& e2);

/// Reads "label: a1,a2,a3,a4,a6" records; entries may use the symbols
/// eps = (1+r5)/2 and r5 over Q(sqrt5). Rational-only records come back
/// over Q.
WeierstrassCurve curve_from_file(const std::string& path, const std::string& label);

}  // namespace bringlab
