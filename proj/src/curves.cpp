#include "bringlab/curves.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "bringlab/matrix.hpp"

namespace bringlab {

namespace {
long now_ms() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now().time_since_epoch()).count();
}
}  // namespace

CurveRegistry::CurveRegistry() {
    const FieldPtr& Q = Field::rationals();

    {  // Bring's curve: vanishing power sums p1, p2, p3 in P^4
        CurveModel m;
        m.name = "bring";
        m.vars = make_vars({"x0", "x1", "x2", "x3", "x4"});
        m.projective = true;
        m.field = Q;
        for (int k = 1; k <= 3; ++k) {
            MultiPoly p = MultiPoly::zero(Q, m.vars);
            for (std::size_t i = 0; i < 5; ++i)
                p = p + MultiPoly::variable(Q, m.vars, i).pow(static_cast<unsigned>(k));
            m.ideal.generators.push_back(p);
        }
        m.metadata["genus"] = "4";
        m.metadata["automorphisms"] = "S5, order 120";
        m.metadata["uniformization"] = "triangle-group quotient; the source names "
            "Delta(3,4,5), Delta(2,4,5) and Delta(2,3,5) in different places; "
            "recorded as-is, not adjudicated";
        models_["bring"] = std::move(m);
    }

    {  // canonical genus-4 model in P^3
        CurveModel m;
        m.name = "xgb";
        m.vars = make_vars({"x", "y", "z", "w"});
        m.projective = true;
        m.field = Q;
        xgb_quadric_ = parse_poly("-(x^2+y^2)+2*(z^2+w^2)", m.vars, Q);
        xgb_cubic_ = parse_poly("x^3+x*y^2+2*y^3-4*x*z^2-8*x*z*w", m.vars, Q);
        m.ideal.generators = {xgb_quadric_, xgb_cubic_};
        m.metadata["genus"] = "4";
        m.metadata["group"] = "congruence subgroup of SL2(Z): a=d=1 mod 5, c=0 mod 50";
        m.metadata["conjugation"] = "scaling by diag(1/5,1) carries the group to "
            "Gamma0(2) intersect Gamma(5); bookkeeping only, not formalized";
        models_["xgb"] = std::move(m);
    }

    {  // plane sextic model in P^2
        CurveModel m;
        m.name = "hc";
        m.vars = make_vars({"x1", "y1", "z1"});
        m.projective = true;
        m.field = Q;
        m.ideal.generators = {parse_poly(
            "x1*(y1^5+z1^5)+x1^2*y1^2*z1^2-x1^4*y1*z1-2*y1^3*z1^3", m.vars, Q)};
        m.metadata["genus"] = "4 (after desingularization)";
        models_["hc"] = std::move(m);
    }

    {  // hyperelliptic level-50 model, affine
        CurveModel m;
        m.name = "x050";
        m.vars = make_vars({"s", "t"});
        m.projective = false;
        m.field = Q;
        m.ideal.generators = {parse_poly("t^2-(s^6-4*s^5-10*s^3-4*s+1)", m.vars, Q)};
        m.metadata["genus"] = "2";
        models_["x050"] = std::move(m);
    }

    {  // the (S,T) relation curve, affine
        CurveModel m;
        m.name = "strel";
        m.vars = make_vars({"S", "T"});
        m.projective = false;
        m.field = Q;
        st_relation_ = parse_poly(
            "1+S^2+2*S^3-4*T-4*S^2*T-T^2-S^2*T^2+2*S^3*T^2", m.vars, Q);
        m.ideal.generators = {st_relation_};
        models_["strel"] = std::move(m);
    }
}

const CurveModel& CurveRegistry::get(const std::string& name) const {
    auto it = models_.find(name);
    if (it == models_.end()) throw Error("no curve model named '" + name + "'");
    return it->second;
}

std::vector<std::string> CurveRegistry::names() const {
    std::vector<std::string> out;
    for (const auto& [n, m] : models_) out.push_back(n);
    return out;
}

CertReport verify_series_point(const CurveModel& curve, const SeriesTuple& point, long prec) {
    long t0 = now_ms();
    CertReport rep;
    rep.name = "series-point/" + curve.name;
    rep.precision_used = prec;
    if (point.size() != curve.vars->size())
        throw Error("point arity does not match curve ambient");
    std::vector<LaurentSeries> coords;
    for (std::size_t i = 0; i < point.size(); ++i) coords.push_back(point.at(i));
    rep.status = CertReport::Status::pass;
    Json gens = Json::array();
    for (std::size_t gi = 0; gi < curve.ideal.generators.size(); ++gi) {
        LaurentSeries val = curve.ideal.generators[gi].eval_series(coords);
        if (val.precision() < prec)
            throw InsufficientPrecision(
                "evaluation of generator " + std::to_string(gi) + " justified only to O(q^" +
                std::to_string(val.precision()) + "), requested " + std::to_string(prec));
        val = val.truncate(prec);
        Json g;
        g["generator"] = curve.ideal.generators[gi].str();
        if (val.is_zero()) {
            g["vanishes_to"] = prec;
        } else {
            rep.status = CertReport::Status::fail;
            g["fails_at_order"] = val.valuation();
            g["value"] = val.raw_coeffs()[0].str();
        }
        gens.push_back(g);
    }
    rep.witness["generators"] = gens;
    rep.millis = now_ms() - t0;
    return rep;
}

std::vector<Monomial> monomial_basis(std::size_t nvars, unsigned degree) {
    std::vector<Monomial> out;
    std::vector<unsigned> e(nvars, 0);
    // lexicographic descent from x0^degree
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned rem) {
        if (i + 1 == nvars) {
            e[i] = rem;
            out.push_back(Monomial(e));
            return;
        }
        for (int k = static_cast<int>(rem); k >= 0; --k) {
            e[i] = static_cast<unsigned>(k);
            rec(i + 1, rem - static_cast<unsigned>(k));
        }
    };
    if (nvars == 0) return out;
    rec(0, degree);
    return out;
}

namespace {

/// Coefficient matrix of deg-d monomials evaluated on the series tuple:
/// rows are q-exponents, columns the monomials.
ExactMatrix monomial_value_matrix(const std::vector<Monomial>& mons,
                                  const std::vector<LaurentSeries>& f, long prec,
                                  long& row_lo) {
    const FieldPtr& Q = f[0].field();
    std::vector<LaurentSeries> values;
    long lo = prec, hi = prec;
    for (const auto& m : mons) {
        LaurentSeries v = LaurentSeries::constant(FieldElement::one(Q), prec + 8);
        for (std::size_t i = 0; i < f.size(); ++i)
            for (unsigned k = 0; k < m.exp(i); ++k) v = v * f[i];
        v = v.truncate(prec);
        lo = std::min(lo, v.valuation());
        values.push_back(v);
    }
    row_lo = lo;
    int rows = static_cast<int>(hi - lo);
    ExactMatrix M(rows, static_cast<int>(mons.size()), Q);
    for (int c = 0; c < static_cast<int>(values.size()); ++c)
        for (long e = lo; e < hi; ++e)
            M.at(static_cast<int>(e - lo), c) = values[static_cast<std::size_t>(c)].coeff(e);
    return M;
}

MultiPoly poly_from_coeffs(const std::vector<Monomial>& mons,
                           const std::vector<FieldElement>& v, const VarListPtr& vars,
                           const FieldPtr& field) {
    MultiPoly p = MultiPoly::zero(field, vars);
    for (std::size_t i = 0; i < mons.size(); ++i) p.add_term(mons[i], v[i]);
    return p;
}

std::vector<FieldElement> coeff_vector(const MultiPoly& p, const std::vector<Monomial>& mons) {
    std::vector<FieldElement> v;
    v.reserve(mons.size());
    for (const auto& m : mons) v.push_back(p.coeff(m));
    return v;
}

}  // namespace

std::pair<MultiPoly, MultiPoly> reconstruct_canonical(const SeriesTuple& f, long prec) {
    if (f.size() != 4) throw Error("reconstruct_canonical expects four series");
    const FieldPtr& Q = f.field();
    std::vector<LaurentSeries> fs;
    for (std::size_t i = 0; i < 4; ++i) {
        if (f.at(i).valuation() < 1) throw Error("input series must have valuation >= 1");
        fs.push_back(f.at(i).truncate(prec));
    }
    VarListPtr vars = make_vars({"x", "y", "z", "w"});

    std::vector<Monomial> mons2 = monomial_basis(4, 2);
    long lo2 = 0;
    ExactMatrix M2 = monomial_value_matrix(mons2, fs, prec, lo2);
    auto null2 = matrix_nullspace(M2);
    if (null2.size() != 1) {
        std::ostringstream os;
        os << "quadric nullspace dimension " << null2.size() << " (expected 1); basis:";
        for (const auto& v : null2)
            os << " [" << poly_from_coeffs(mons2, v, vars, Q).str() << "]";
        throw RankDefect(os.str());
    }
    MultiPoly quadric =
        poly_from_coeffs(mons2, integer_clear(null2[0]), vars, Q).normalized_integer();

    std::vector<Monomial> mons3 = monomial_basis(4, 3);
    long lo3 = 0;
    ExactMatrix M3 = monomial_value_matrix(mons3, fs, prec, lo3);
    auto null3 = matrix_nullspace(M3);
    if (null3.size() != 5) {
        std::ostringstream os;
        os << "cubic nullspace dimension " << null3.size() << " (expected 5 = 4 + 1)";
        throw RankDefect(os.str());
    }
    // quotient out the 4-dimensional space {x,y,z,w} * quadric: reduce each
    // nullspace vector against its row space, then the residues must span a
    // line whose canonical representative is the cubic
    ExactMatrix L(4, static_cast<int>(mons3.size()), Q);
    for (int i = 0; i < 4; ++i) {
        MultiPoly lq = MultiPoly::variable(Q, vars, static_cast<std::size_t>(i)) * quadric;
        auto v = coeff_vector(lq, mons3);
        for (std::size_t c = 0; c < v.size(); ++c) L.at(i, static_cast<int>(c)) = v[c];
    }
    std::vector<int> pl = L.rref();
    if (pl.size() != 4) throw RankDefect("linear*quadric span degenerate");
    ExactMatrix resid(5, static_cast<int>(mons3.size()), Q);
    for (int i = 0; i < 5; ++i) {
        std::vector<FieldElement> v = null3[static_cast<std::size_t>(i)];
        for (std::size_t r = 0; r < pl.size(); ++r) {
            const FieldElement& pivot_val = v[static_cast<std::size_t>(pl[r])];
            if (pivot_val.is_zero()) continue;
            FieldElement k = pivot_val;
            for (std::size_t c = 0; c < mons3.size(); ++c)
                v[c] -= k * L.at(static_cast<int>(r), static_cast<int>(c));
        }
        for (std::size_t c = 0; c < mons3.size(); ++c)
            resid.at(i, static_cast<int>(c)) = v[c];
    }
    std::vector<int> pr = resid.rref();
    if (pr.size() != 1)
        throw RankDefect("cubic residual dimension " + std::to_string(pr.size()) +
                         " (expected 1)");
    std::vector<FieldElement> cub(mons3.size(), FieldElement::zero(Q));
    for (std::size_t c = 0; c < mons3.size(); ++c) cub[c] = resid.at(0, static_cast<int>(c));
    MultiPoly cubic = poly_from_coeffs(mons3, integer_clear(cub), vars, Q).normalized_integer();
    return {quadric, cubic};
}

std::pair<MultiPoly, MultiPoly> compose_rational(
    const MultiPoly& g, const std::vector<std::pair<MultiPoly, MultiPoly>>& images) {
    if (images.size() != g.vars()->size()) throw Error("compose_rational arity mismatch");
    const VarListPtr& tv = images[0].first.vars();
    const FieldPtr& f = g.field();
    MonomialOrder ord = images[0].first.order();
    std::vector<unsigned> degs(images.size(), 0);
    for (std::size_t i = 0; i < images.size(); ++i) degs[i] = g.degree_in(i);
    MultiPoly num = MultiPoly::zero(f, tv, ord);
    // per-variable power caches for numerators and denominators
    std::vector<std::vector<MultiPoly>> npow(images.size()), dpow(images.size());
    auto power = [&](std::vector<MultiPoly>& cache, const MultiPoly& base, unsigned e) {
        if (e == 0) return MultiPoly::constant(f, tv, FieldElement::one(f), ord);
        while (cache.size() < e) cache.push_back(cache.empty() ? base : cache.back() * base);
        return cache[e - 1];
    };
    for (const auto& [m, c] : g.terms()) {
        MultiPoly term = MultiPoly::constant(f, tv, c, ord);
        for (std::size_t i = 0; i < images.size(); ++i) {
            unsigned e = m.exp(i);
            if (e) term = term * power(npow[i], images[i].first, e);
            if (degs[i] - e) term = term * power(dpow[i], images[i].second, degs[i] - e);
        }
        num = num + term;
    }
    MultiPoly den = MultiPoly::constant(f, tv, FieldElement::one(f), ord);
    for (std::size_t i = 0; i < images.size(); ++i)
        if (degs[i]) den = den * power(dpow[i], images[i].second, degs[i]);
    return {num, den};
}

CertReport verify_rational_map(const RationalMap& map) {
    long t0 = now_ms();
    CertReport rep;
    rep.name = "rational-map/" + map.name;
    rep.order_used = "grevlex";
    rep.status = CertReport::Status::pass;
    const auto& gb = groebner_basis(map.source->ideal, MonomialOrder::grevlex());
    Json gens = Json::array();
    for (const auto& g : map.target->ideal.generators) {
        auto [num, den] = compose_rational(g, map.coords);
        MultiPoly nf = normal_form(num, gb, MonomialOrder::grevlex());
        Json item;
        item["generator"] = g.str();
        if (nf.is_zero()) {
            item["pullback_in_ideal"] = true;
        } else {
            rep.status = CertReport::Status::fail;
            item["pullback_in_ideal"] = false;
            item["normal_form"] = nf.str();
        }
        gens.push_back(item);
    }
    rep.witness["pullbacks"] = gens;
    rep.millis = now_ms() - t0;
    return rep;
}

CertReport roundtrip_check(const RationalMap& fwd, const RationalMap& bwd) {
    long t0 = now_ms();
    if (fwd.target != bwd.source || bwd.target != fwd.source)
        throw Error("roundtrip_check: maps are not composable");
    CertReport rep;
    rep.name = "roundtrip/" + fwd.name + "+" + bwd.name;
    rep.order_used = "grevlex";
    rep.status = CertReport::Status::pass;
    auto one_direction = [&](const RationalMap& first, const RationalMap& second,
                             const char* tag) {
        const CurveModel& src = *first.source;
        const auto& gb = groebner_basis(src.ideal, MonomialOrder::grevlex());
        Json items = Json::array();
        for (std::size_t i = 0; i < second.coords.size(); ++i) {
            // coordinate i of second(first(x)) as rational expression in src vars
            auto [n2, d2] = compose_rational(second.coords[i].first, first.coords);
            auto [n2d, d2d] = compose_rational(second.coords[i].second, first.coords);
            // second_i = (n2/d2) / (n2d/d2d); compare with identity variable:
            // n2 * d2d - var * d2 * n2d in source ideal
            MultiPoly var = MultiPoly::variable(src.field, src.vars, i);
            MultiPoly lhs = n2 * d2d - var * (d2 * n2d);
            MultiPoly nf = normal_form(lhs, gb, MonomialOrder::grevlex());
            Json item;
            item["coordinate"] = (*src.vars)[i];
            if (nf.is_zero()) {
                item["identity"] = true;
            } else {
                rep.status = CertReport::Status::fail;
                item["identity"] = false;
                item["normal_form"] = nf.str();
            }
            items.push_back(item);
        }
        rep.witness[tag] = items;
    };
    one_direction(fwd, bwd, "bwd_after_fwd");
    one_direction(bwd, fwd, "fwd_after_bwd");
    rep.millis = now_ms() - t0;
    return rep;
}

}  // namespace bringlab
