#include "bringlab/quotient.hpp"

#include <chrono>

namespace bringlab {

namespace {
long now_ms() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now().time_since_epoch()).count();
}
const FieldPtr& Q() { return Field::rationals(); }

VarListPtr bring_vars() {
    static VarListPtr v = make_vars({"x0", "x1", "x2", "x3", "x4"});
    return v;
}
}  // namespace

Permutation Permutation::cycle(const std::vector<int>& c) {
    Permutation p;
    for (std::size_t i = 0; i < c.size(); ++i)
        p.img[static_cast<std::size_t>(c[i])] = c[(i + 1) % c.size()];
    return p;
}

Permutation Permutation::transposition(int a, int b) { return cycle({a, b}); }

Permutation Permutation::after(const Permutation& first) const {
    Permutation p;
    for (int i = 0; i < 5; ++i)
        p.img[static_cast<std::size_t>(i)] =
            img[static_cast<std::size_t>(first.img[static_cast<std::size_t>(i)])];
    return p;
}

Permutation Permutation::inverse() const {
    Permutation p;
    for (int i = 0; i < 5; ++i) p.img[static_cast<std::size_t>(img[static_cast<std::size_t>(i)])] = i;
    return p;
}

RationalFunction::RationalFunction(MultiPoly n, MultiPoly d) : num(std::move(n)), den(std::move(d)) {
    normalize();
}

void RationalFunction::normalize() {
    if (den.is_zero()) throw ZeroDivision("rational function with zero denominator");
    if (num.is_zero()) {
        den = MultiPoly::constant(den.field(), den.vars(), FieldElement::one(den.field()),
                                  den.order());
        return;
    }
    // cancel the common monomial factor
    std::size_t nv = num.vars()->size();
    std::vector<unsigned> mn(nv, ~0u), md(nv, ~0u);
    for (const auto& [m, c] : num.terms())
        for (std::size_t i = 0; i < nv; ++i) mn[i] = std::min(mn[i], m.exp(i));
    for (const auto& [m, c] : den.terms())
        for (std::size_t i = 0; i < nv; ++i) md[i] = std::min(md[i], m.exp(i));
    std::vector<unsigned> common(nv);
    bool any = false;
    for (std::size_t i = 0; i < nv; ++i) {
        common[i] = std::min(mn[i], md[i]);
        any = any || common[i];
    }
    if (any) {
        Monomial g(common);
        MultiPoly n2(num.field(), num.vars(), num.order());
        for (const auto& [m, c] : num.terms()) n2.add_term(*m.divide(g), c);
        MultiPoly d2(den.field(), den.vars(), den.order());
        for (const auto& [m, c] : den.terms()) d2.add_term(*m.divide(g), c);
        num = n2;
        den = d2;
    }
    // one joint scalar: denominator primitive integral with positive lead
    MultiPoly dn = den.normalized_integer();
    FieldElement k = dn.leading_coeff() / den.leading_coeff();
    num = num.scale(k);
    den = dn;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num * o.den + o.num * den, den * o.den);
}

bool RationalFunction::operator==(const RationalFunction& o) const {
    return (num * o.den - o.num * den).is_zero();
}

RationalFunction s5_act(const Permutation& sigma, const RationalFunction& f) {
    std::vector<MultiPoly> images;
    for (std::size_t i = 0; i < 5; ++i)
        images.push_back(MultiPoly::variable(Q(), bring_vars(),
                                             static_cast<std::size_t>(sigma.img[i])));
    return RationalFunction(f.num.substitute(images), f.den.substitute(images));
}

RationalFunction quotient_seed() {
    MultiPoly n = parse_poly("x0*x1*x2*x3", bring_vars(), Q());
    MultiPoly d = parse_poly("x4^4", bring_vars(), Q());
    return RationalFunction(n, d);
}

RationalFunction build_t() {
    Permutation rho = Permutation::cycle({0, 1, 2, 3, 4});
    Permutation kappa = Permutation::transposition(0, 1);
    RationalFunction T = quotient_seed();
    RationalFunction acc(MultiPoly::zero(Q(), bring_vars()),
                         MultiPoly::constant(Q(), bring_vars(), FieldElement::one(Q())));
    Permutation p = Permutation::identity();
    for (int i = 1; i <= 5; ++i) {
        p = rho.after(p);
        acc = acc + s5_act(p, T);
        acc = acc + s5_act(kappa.after(p), T);
    }
    return acc;
}

std::array<UPoly, 3> newton_symmetric_values() {
    // power sums of the three remaining coordinates at x0 = 1, x1 = v:
    // q_k = -(1 + v^k), from the vanishing of the full power sums
    VarListPtr vv = make_vars({"v"});
    auto up = [&](const char* txt) { return parse_poly(txt, vv, Q()).to_upoly(0); };
    UPoly q1 = up("-(1+v)");
    UPoly q2 = up("-(1+v^2)");
    UPoly q3 = up("-(1+v^3)");
    UPoly e1 = q1;
    UPoly e2 = (e1 * q1 - q2).scale(FieldElement(Rational(1, 2)));
    UPoly e3 = (e2 * q1 - e1 * q2 + q3).scale(FieldElement(Rational(1, 3)));
    return {e1, e2, e3};
}

namespace {

/// Rewrites a polynomial symmetric in (x2,x3,x4) with Q[v]-coefficients as a
/// univariate in v by substituting the elementary symmetric values.
UPoly symmetric_reduce(const MultiPoly& poly, const std::array<UPoly, 3>& evals) {
    // variables (x2, x3, x4, v), lex order
    VarListPtr xv = make_vars({"x2", "x3", "x4", "v"});
    MultiPoly cur = poly.with_vars(xv).with_order(MonomialOrder::lex());
    MultiPoly e1 = parse_poly("x2+x3+x4", xv, Q(), MonomialOrder::lex());
    MultiPoly e2 = parse_poly("x2*x3+x2*x4+x3*x4", xv, Q(), MonomialOrder::lex());
    MultiPoly e3 = parse_poly("x2*x3*x4", xv, Q(), MonomialOrder::lex());
    VarListPtr vv = make_vars({"v"});
    UPoly out = UPoly::zero(Q());
    UPoly vpoly = UPoly::x(Q());
    while (!cur.is_zero()) {
        const Monomial& lm = cur.leading_monomial();
        FieldElement lc = cur.leading_coeff();
        unsigned a = lm.exp(0), b = lm.exp(1), c = lm.exp(2), ve = lm.exp(3);
        if (!(a >= b && b >= c))
            throw Error("symmetric_reduce: input not symmetric (lead " + cur.str() + ")");
        // subtract lc * v^ve * e1^(a-b) e2^(b-c) e3^c and accumulate the image
        MultiPoly sub = MultiPoly::constant(Q(), xv, lc, MonomialOrder::lex());
        if (a - b) sub = sub * e1.pow(a - b);
        if (b - c) sub = sub * e2.pow(b - c);
        if (c) sub = sub * e3.pow(c);
        if (ve) {
            std::vector<unsigned> vm(4, 0);
            vm[3] = ve;
            sub = sub.mul_term(Monomial(vm), FieldElement::one(Q()));
        }
        cur = cur - sub;
        UPoly img = UPoly::constant(lc);
        for (unsigned k = 0; k < a - b; ++k) img = img * evals[0];
        for (unsigned k = 0; k < b - c; ++k) img = img * evals[1];
        for (unsigned k = 0; k < c; ++k) img = img * evals[2];
        for (unsigned k = 0; k < ve; ++k) img = img * vpoly;
        out = out + img;
    }
    return out;
}

}  // namespace

TClosedForm express_t_in_v() {
    RationalFunction t = build_t();
    // specialize x0 = 1, x1 = v, keep x2..x4
    VarListPtr sv = make_vars({"x2", "x3", "x4", "v"});
    std::vector<MultiPoly> images;
    images.push_back(MultiPoly::constant(Q(), sv, FieldElement::one(Q())));
    images.push_back(MultiPoly::variable(Q(), sv, 3));
    for (std::size_t i = 0; i < 3; ++i) images.push_back(MultiPoly::variable(Q(), sv, i));
    MultiPoly num_s = t.num.substitute(images);
    MultiPoly den_s = t.den.substitute(images);

    auto evals = newton_symmetric_values();
    UPoly num_v = symmetric_reduce(num_s, evals);
    UPoly den_v = symmetric_reduce(den_s, evals);

    // expected denominator v^4 (1+v)^4 (1+v^2)^4
    VarListPtr vv = make_vars({"v"});
    UPoly shape = parse_poly("v^4*(1+v)^4*(1+v^2)^4", vv, Q()).to_upoly(0);
    // den_v should be shape up to a unit; and num_v/den_v already reduced
    UPoly quot, rem;
    std::tie(quot, rem) = den_v.divmod(shape);
    if (!rem.is_zero() || quot.degree() != 0)
        throw ShapeMismatch("reduced denominator is not v^4 (1+v)^4 (1+v^2)^4: got " +
                            den_v.str("v"));
    UPoly common = gcd(num_v, den_v);
    if (common.degree() != 0)
        throw ShapeMismatch("numerator and fixed denominator share the factor " +
                            common.str("v"));
    // t = num_v / den_v = -2 g / shape  =>  g = -num_v / (2 unit)
    FieldElement unit = quot.c[0];
    UPoly g = num_v.scale((FieldElement(-2L) * unit).inverse());
    TClosedForm cf;
    cf.g = g;
    cf.den_shape = {4, 4, 4};
    return cf;
}

CertReport degree_audit(const TClosedForm& cf) {
    long t0 = now_ms();
    CertReport rep;
    rep.name = "degree-audit";
    rep.status = CertReport::Status::pass;
    Json w;
    w["deg_g"] = cf.g.degree();
    bool deg_ok = cf.g.degree() == 20;
    UPoly d = gcd(cf.g, cf.g.derivative());
    bool sqfree = d.degree() == 0;
    w["g_squarefree"] = sqfree;
    // fiber polynomial at the sample value t0 = 1: -2g - shape
    VarListPtr vv = make_vars({"v"});
    UPoly shape = parse_poly("v^4*(1+v)^4*(1+v^2)^4", vv, Q()).to_upoly(0);
    UPoly fiber = cf.g.scale(FieldElement(-2L)) - shape;
    bool fiber_sqfree = gcd(fiber, fiber.derivative()).degree() == 0;
    w["sample_fiber_squarefree"] = fiber_sqfree;
    w["fiber_count"] = "20 x 6 = 120";
    w["pairs_factor"] = "6 orderings of the residual cubic roots; recorded assumption, "
                        "not recomputed";
    w["group_order"] = 120;
    bool count_ok = 20 * 6 == 120;
    if (!(deg_ok && sqfree && fiber_sqfree && count_ok)) rep.status = CertReport::Status::fail;
    rep.witness = w;
    rep.millis = now_ms() - t0;
    return rep;
}

}  // namespace bringlab
