#pragma once

#include <map>

#include "bringlab/groebner.hpp"
#include "bringlab/report.hpp"
#include "bringlab/series.hpp"

namespace bringlab {

/// A registered curve model: ambient variables, defining ideal, metadata.
struct CurveModel {
    std::string name;
    VarListPtr vars;
    bool projective = false;
    Ideal ideal;
    FieldPtr field;
    std::map<std::string, std::string> metadata;
};

/// Rational map between registered models: one (numerator, denominator)
/// pair of source-variable polynomials per target coordinate.
struct RationalMap {
    std::string name;
    const CurveModel* source = nullptr;
    const CurveModel* target = nullptr;
    std::vector<std::pair<MultiPoly, MultiPoly>> coords;
};

/// The five curve models of the toolkit.
///   bring  - quintic power-sum curve in P^4, coordinates x0..x4
///   xgb    - canonical genus-4 model in P^3 (quadric and cubic), x,y,z,w
///   hc     - plane sextic model in P^2, x1,y1,z1
///   x050   - hyperelliptic model t^2 = s^6-4s^5-10s^3-4s+1, affine (s,t)
///   strel  - the degree-5 relation curve in affine (S,T)
class CurveRegistry {
  public:
    CurveRegistry();
    const CurveModel& get(const std::string& name) const;
    std::vector<std::string> names() const;

    const MultiPoly& xgb_quadric() const { return xgb_quadric_; }
    const MultiPoly& xgb_cubic() const { return xgb_cubic_; }
    const MultiPoly& st_relation() const { return st_relation_; }

  private:
    std::map<std::string, CurveModel> models_;
    MultiPoly xgb_quadric_, xgb_cubic_, st_relation_;
};

/// Checks that every generator of the curve ideal vanishes on the series
/// point up to q^prec. Throws InsufficientPrecision when the evaluations
/// are not justified that far.
CertReport verify_series_point(const CurveModel& curve, const SeriesTuple& point, long prec);

/// Canonical-model reconstruction from four weight-one-valuation power
/// series: the unique quadric vanishing on them (10-column nullspace) and
/// the cubic chosen as the residual direction after quotienting out
/// {linear} x quadric from the 20-column cubic nullspace. Both are returned
/// integer-cleared with positive leading coefficient. Throws RankDefect
/// (with the full offending basis in the message) when dimensions are off.
std::pair<MultiPoly, MultiPoly> reconstruct_canonical(const SeriesTuple& f, long prec);

/// Monomial basis of degree-d forms in the given variables, greatest first.
std::vector<Monomial> monomial_basis(std::size_t nvars, unsigned degree);

/// Pullback of every target ideal generator through the map, cleared of
/// denominators, must reduce to zero against the source ideal.
CertReport verify_rational_map(const RationalMap& map);

/// Composition check: bwd(fwd(x)) = x modulo the source ideal and
/// symmetrically.
CertReport roundtrip_check(const RationalMap& fwd, const RationalMap& bwd);

/// Substitutes rational expressions into a polynomial, returning a
/// numerator/denominator pair over the image variables.
std::pair<MultiPoly, MultiPoly> compose_rational(
    const MultiPoly& g, const std::vector<std::pair<MultiPoly, MultiPoly>>& images);

}  // namespace bringlab
