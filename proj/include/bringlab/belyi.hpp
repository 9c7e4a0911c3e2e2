#pragma once

#include "bringlab/curves.hpp"
#include "bringlab/qexp.hpp"

namespace bringlab {

/// Numerator data of the level-50 j-map: j = (A(s) + B(s) t) / den with the
/// fixed denominator den = 2 s^25 (s^4 - s^3 + s^2 - s + 1)^2.
struct JMapData {
    UPoly A;
    UPoly B;
};

/// The pair of hyperelliptic-model functions (S, T) = (f2/f1, f3/f4)
/// attached to the cusp form basis.
std::pair<LaurentSeries, LaurentSeries> st_series(long prec);

/// The hyperelliptic coordinates (s, t) on the level-50 model as q-series,
/// computed through the certified birational map from the (S,T) curve.
std::pair<LaurentSeries, LaurentSeries> hyperelliptic_point(long prec);

/// The corrected birational map (S,T) -> (s,t); two signs of the published
/// display are repaired (certified by the series arbiter).
RationalMap map_strel_to_x050(const CurveRegistry& reg);
/// Its inverse (s,t) -> (S,T); the published denominator is replaced by the
/// derived one.
RationalMap map_x050_to_strel(const CurveRegistry& reg);
/// The plane-sextic to canonical-model isomorphism (verified as displayed).
RationalMap map_hc_to_xgb(const CurveRegistry& reg);

/// Fixed j-map denominator 2 s^25 (s^4-s^3+s^2-s+1)^2 as a univariate.
UPoly jmap_denominator();

/// Solves j(q) * den(s(q)) = A(s(q)) + B(s(q)) t(q) for the coefficients of
/// A, B with the given degree bounds, then re-verifies the solution by
/// resubstitution at precision 2*prec. Throws NoSolution when the bounds are
/// too small and NonUnique (with kernel dimension) when the solve is
/// underdetermined.
JMapData derive_j_map(int deg_A, int deg_B, long prec);

struct EscalationPolicy {
    int start_A = 35;
    int start_B = 30;
    int step = 5;
    int cap = 100;
};

/// Escalation driver: starts at the policy bounds and widens by `step` on
/// NoSolution until `cap`. Records each attempt in `log` when given.
JMapData derive_j_map_auto(long prec, const EscalationPolicy& policy = {}, Json* log = nullptr);

/// The Belyi map on the canonical model: (1/1728) h(s,t) composed with the
/// coordinate expressions of (s,t) in [x:y:z:w]. Returned as a one-coordinate
/// rational map to P^1 with exact cleared numerator and denominator.
RationalMap assemble_belyi(const JMapData& jmap, const CurveRegistry& reg);

/// Cross-multiplied polynomial identities relating the published Belyi
/// argument displays, the (S,T) substitutions, and the corrected pipeline
/// arguments; records the readings that fail.
CertReport belyi_argument_identity(const CurveRegistry& reg);

JMapData read_jmap_file(const std::string& path);
void write_jmap_file(const JMapData& jm, const std::string& path);

}  // namespace bringlab
