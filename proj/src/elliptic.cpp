#include "bringlab/elliptic.hpp"

#include <fstream>
#include <sstream>

#include "bringlab/poly.hpp"

namespace bringlab {

WeierstrassCurve WeierstrassCurve::make(const FieldPtr& f, const FieldElement& a1,
                                        const FieldElement& a2, const FieldElement& a3,
                                        const FieldElement& a4, const FieldElement& a6) {
    WeierstrassCurve e{f, a1.promote_to(f), a2.promote_to(f), a3.promote_to(f),
                       a4.promote_to(f), a6.promote_to(f)};
    return e;
}

WeierstrassCurve WeierstrassCurve::promote_to(const FieldPtr& f) const {
    return make(f, a1, a2, a3, a4, a6);
}

bool WeierstrassCurve::operator==(const WeierstrassCurve& o) const {
    return a1 == o.a1 && a2 == o.a2 && a3 == o.a3 && a4 == o.a4 && a6 == o.a6;
}

std::string WeierstrassCurve::str() const {
    return "[" + a1.str() + ", " + a2.str() + ", " + a3.str() + ", " + a4.str() + ", " +
           a6.str() + "]";
}

WeierstrassInvariants invariants(const WeierstrassCurve& e) {
    WeierstrassInvariants iv{};
    FieldElement two(2), four(4);
    iv.b2 = e.a1 * e.a1 + e.a2 * four;
    iv.b4 = e.a4 * two + e.a1 * e.a3;
    iv.b6 = e.a3 * e.a3 + e.a6 * four;
    iv.b8 = (iv.b2 * iv.b6 - iv.b4 * iv.b4) / four;
    iv.c4 = iv.b2 * iv.b2 - iv.b4 * FieldElement(24);
    iv.c6 = -(iv.b2.pow(3)) + iv.b2 * iv.b4 * FieldElement(36) - iv.b6 * FieldElement(216);
    iv.disc = -(iv.b2 * iv.b2 * iv.b8) - iv.b4.pow(3) * FieldElement(8) -
              iv.b6 * iv.b6 * FieldElement(27) + iv.b2 * iv.b4 * iv.b6 * FieldElement(9);
    if (iv.disc.is_zero()) throw Singular("singular curve: discriminant vanishes");
    iv.j = iv.c4.pow(3) / iv.disc;
    return iv;
}

std::string Transform::str() const {
    return "(u=" + u.str() + ", r=" + r.str() + ", s=" + s.str() + ", t=" + t.str() + ")";
}

WeierstrassCurve transform_apply(const WeierstrassCurve& e, const Transform& tr) {
    const FieldPtr& f = tr.u.field();
    WeierstrassCurve c = e.promote_to(f);
    const FieldElement &u = tr.u, &r = tr.r, &s = tr.s, &t = tr.t;
    if (u.is_zero()) throw ZeroDivision("transform with u = 0");
    FieldElement two(2), three(3);
    FieldElement ui = u.inverse();
    FieldElement ui2 = ui * ui, ui3 = ui2 * ui, ui4 = ui2 * ui2, ui6 = ui3 * ui3;
    WeierstrassCurve out;
    out.field = f;
    out.a1 = (c.a1 + s * two) * ui;
    out.a2 = (c.a2 - s * c.a1 + r * three - s * s) * ui2;
    out.a3 = (c.a3 + r * c.a1 + t * two) * ui3;
    out.a4 = (c.a4 - s * c.a3 + (r * c.a2) * two - (t + r * s) * c.a1 + (r * r) * three -
              (s * t) * two) * ui4;
    out.a6 = (c.a6 + r * c.a4 + r * r * c.a2 + r.pow(3) - t * c.a3 - t * t - r * t * c.a1) * ui6;
    return out;
}

Transform inverse_transform(const Transform& tr) {
    FieldElement ui = tr.u.inverse();
    FieldElement ui2 = ui * ui, ui3 = ui2 * ui;
    return Transform{ui, -(tr.r) * ui2, -(tr.s) * ui, (tr.r * tr.s - tr.t) * ui3};
}

namespace {

/// Given a candidate u, back-substitute the linear relations for s, r, t.
std::optional<Transform> complete_transform(const WeierstrassCurve& e,
                                            const WeierstrassCurve& e2,
                                            const FieldElement& u) {
    const FieldPtr& f = u.field();
    WeierstrassCurve a = e.promote_to(f), b = e2.promote_to(f);
    FieldElement two(2), three(3);
    FieldElement s = (u * b.a1 - a.a1) / two;
    FieldElement r = (u * u * b.a2 - a.a2 + s * a.a1 + s * s) / three;
    FieldElement t = (u.pow(3) * b.a3 - a.a3 - r * a.a1) / two;
    Transform tr{u, r, s, t};
    if (transform_apply(e, tr) == b) return tr;
    return std::nullopt;
}

}  // namespace

std::vector<Transform> transform_solve(const WeierstrassCurve& e, const WeierstrassCurve& e2) {
    if (e.field.get() != e2.field.get())
        throw Error("transform_solve: curves over different fields");
    const FieldPtr& K = e.field;
    WeierstrassInvariants i1 = invariants(e), i2 = invariants(e2);
    if (i1.j != i2.j) return {};

    // u^2 from the c-invariants; j is away from 0 and 1728 exactly when both
    // c4 and c6 are nonzero
    FieldElement usq = FieldElement::zero(K);
    if (!i1.c4.is_zero() && !i1.c6.is_zero()) {
        usq = (i1.c6 * i2.c4) / (i2.c6 * i1.c4);
    } else if (i1.c6.is_zero() && i2.c6.is_zero()) {
        // j = 1728: u^4 = c4/c4'
        auto w = field_sqrt(i1.c4 / i2.c4);
        if (!w) throw ExtensionRequired("u^4 = c4/c4' needs x^2 - " +
                                        (i1.c4 / i2.c4).str() + " beyond one quadratic step");
        usq = *w;
    } else if (i1.c4.is_zero() && i2.c4.is_zero()) {
        // j = 0: u^6 = c6/c6'; rational cube root only
        FieldElement ratio = i1.c6 / i2.c6;
        if (!ratio.is_rational_valued())
            throw ExtensionRequired("u^6 = c6/c6' with irrational ratio " + ratio.str());
        Rational rr = ratio.as_rational();
        mpz_class n = rr.num(), d = rr.den(), rn, rd;
        if (mpz_root(rn.get_mpz_t(), n.get_mpz_t(), 3) == 0 ||
            mpz_root(rd.get_mpz_t(), d.get_mpz_t(), 3) == 0)
            throw ExtensionRequired("u^6 = " + rr.str() + " has no rational cube root");
        usq = FieldElement::from_rational(K, Rational(rn, rd));
    } else {
        return {};
    }

    std::vector<FieldElement> candidates;
    if (auto u0 = field_sqrt(usq)) {
        candidates.push_back(*u0);
        candidates.push_back(-*u0);
    } else {
        // one quadratic step; present the extension through the slope
        // variable of the a1-relation when possible, so the adjoined
        // generator g satisfies u = (a1 + 2g)/a1'
        FieldPtr ext;
        FieldElement u_ext = FieldElement();
        if (!e2.a1.is_zero()) {
            FieldElement a1 = e.a1, a1p = e2.a1;
            FieldElement c0 = (a1 * a1 - usq * a1p * a1p) / FieldElement(4);
            std::vector<FieldElement> mp = {c0, a1, FieldElement::one(K)};
            ext = Field::extension(K, K->name() + "(s)", "s", std::move(mp));
            u_ext = (a1.promote_to(ext) + FieldElement(2) * FieldElement::generator(ext)) /
                    a1p.promote_to(ext);
        } else {
            std::vector<FieldElement> mp = {-usq, FieldElement::zero(K), FieldElement::one(K)};
            ext = Field::extension(K, K->name() + "(u)", "u", std::move(mp));
            u_ext = FieldElement::generator(ext);
        }
        candidates.push_back(u_ext);
        candidates.push_back(-u_ext);
    }

    std::vector<Transform> out;
    for (const auto& u : candidates) {
        if (auto tr = complete_transform(e, e2, u)) out.push_back(*tr);
    }
    return out;
}

WeierstrassCurve curve_from_file(const std::string& path, const std::string& label) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open curve file '" + path + "'");
    std::string line;
    while (std::getline(in, line)) {
        auto colon = line.find(':');
        if (colon == std::string::npos) continue;
        std::string key = line.substr(0, colon);
        key.erase(0, key.find_first_not_of(" \t"));
        key.erase(key.find_last_not_of(" \t") + 1);
        if (key != label) continue;
        std::string rest = line.substr(colon + 1);
        std::vector<std::string> parts;
        std::stringstream ss(rest);
        std::string item;
        while (std::getline(ss, item, ',')) parts.push_back(item);
        if (parts.size() != 5)
            throw Error("curve record '" + label + "' must have 5 coefficients");
        const FieldPtr& K5 = Field::root5();
        std::vector<std::pair<std::string, FieldElement>> consts = {
            {"eps", golden_eps()}, {"r5", FieldElement::generator(K5)}};
        VarListPtr novars = make_vars(std::vector<std::string>{});
        std::vector<FieldElement> coeffs;
        bool all_rational = true;
        for (const auto& p : parts) {
            MultiPoly mp = parse_poly_ext(p, novars, K5, consts);
            FieldElement v = mp.is_zero() ? FieldElement::zero(K5) : mp.trailing_coeff();
            all_rational = all_rational && v.is_rational_valued();
            coeffs.push_back(v);
        }
        if (all_rational) {
            const FieldPtr& Q = Field::rationals();
            return WeierstrassCurve::make(Q, FieldElement(coeffs[0].as_rational()),
                                          FieldElement(coeffs[1].as_rational()),
                                          FieldElement(coeffs[2].as_rational()),
                                          FieldElement(coeffs[3].as_rational()),
                                          FieldElement(coeffs[4].as_rational()));
        }
        return WeierstrassCurve::make(K5, coeffs[0], coeffs[1], coeffs[2], coeffs[3], coeffs[4]);
    }
    throw Error("no curve labelled '" + label + "' in " + path);
}

}  // namespace bringlab
