#include "bringlab/field.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace bringlab {

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

// ---------------------------------------------------------------------------
// FieldElement
// ---------------------------------------------------------------------------

FieldElement::FieldElement() : field_(Field::rationals()), rat_(0) {}
FieldElement::FieldElement(long n) : field_(Field::rationals()), rat_(n) {}
FieldElement::FieldElement(const Rational& r) : field_(Field::rationals()), rat_(r) {}

FieldElement FieldElement::zero(const FieldPtr& f) {
    return from_rational(f, Rational(0));
}

FieldElement FieldElement::one(const FieldPtr& f) {
    return from_rational(f, Rational(1));
}

FieldElement FieldElement::from_rational(const FieldPtr& f, const Rational& r) {
    FieldElement e;
    e.field_ = f;
    if (f->is_rationals()) {
        e.rat_ = r;
        return e;
    }
    e.coords_.assign(f->degree(), zero(f->base()));
    e.coords_[0] = from_rational(f->base(), r);
    return e;
}

FieldElement FieldElement::generator(const FieldPtr& f) {
    if (f->is_rationals()) throw Error("Q has no generator");
    FieldElement e;
    e.field_ = f;
    e.coords_.assign(f->degree(), zero(f->base()));
    e.coords_[1] = one(f->base());
    return e;
}

FieldElement FieldElement::from_coords(const FieldPtr& f, std::vector<FieldElement> coords) {
    if (f->is_rationals()) throw Error("from_coords needs an extension field");
    if (static_cast<int>(coords.size()) > f->degree())
        throw Error("coordinate vector longer than field degree");
    FieldElement e;
    e.field_ = f;
    e.coords_ = std::move(coords);
    while (static_cast<int>(e.coords_.size()) < f->degree())
        e.coords_.push_back(zero(f->base()));
    return e;
}

bool FieldElement::in_rationals() const { return field_->is_rationals(); }

const FieldElement& FieldElement::coord(int i) const {
    return coords_.at(static_cast<std::size_t>(i));
}

bool FieldElement::is_rational_valued() const {
    if (in_rationals()) return true;
    for (std::size_t i = 1; i < coords_.size(); ++i)
        if (!coords_[i].is_zero()) return false;
    return coords_[0].is_rational_valued();
}

Rational FieldElement::as_rational() const {
    if (in_rationals()) return rat_;
    if (!is_rational_valued()) throw Error("element does not lie in Q: " + str());
    return coords_[0].as_rational();
}

bool FieldElement::is_zero() const {
    if (in_rationals()) return rat_.is_zero();
    return std::all_of(coords_.begin(), coords_.end(),
                       [](const FieldElement& c) { return c.is_zero(); });
}

bool FieldElement::is_one() const {
    if (in_rationals()) return rat_.is_one();
    if (!coords_[0].is_one()) return false;
    for (std::size_t i = 1; i < coords_.size(); ++i)
        if (!coords_[i].is_zero()) return false;
    return true;
}

FieldElement FieldElement::promote_to(const FieldPtr& f) const {
    if (f.get() == field_.get()) return *this;
    // climb f's base chain looking for our field
    std::vector<FieldPtr> chain;
    FieldPtr cur = f;
    while (cur && cur.get() != field_.get()) {
        chain.push_back(cur);
        cur = cur->base();
    }
    if (!cur) throw Error("cannot promote element of " + field_->name() + " into " + f->name());
    FieldElement e = *this;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        FieldElement lifted;
        lifted.field_ = *it;
        lifted.coords_.assign((*it)->degree(), zero((*it)->base()));
        lifted.coords_[0] = e;
        e = std::move(lifted);
    }
    return e;
}

void FieldElement::align(FieldElement& a, FieldElement& b) {
    if (a.field_.get() == b.field_.get()) return;
    if (a.field_->absolute_degree() < b.field_->absolute_degree())
        a = a.promote_to(b.field_);
    else
        b = b.promote_to(a.field_);
}

FieldElement FieldElement::operator-() const {
    FieldElement e = *this;
    if (in_rationals()) {
        e.rat_ = -rat_;
    } else {
        for (auto& c : e.coords_) c = -c;
    }
    return e;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    FieldElement a = *this, b = o;
    align(a, b);
    if (a.in_rationals()) {
        a.rat_ += b.rat_;
        return a;
    }
    for (std::size_t i = 0; i < a.coords_.size(); ++i) a.coords_[i] += b.coords_[i];
    return a;
}

FieldElement FieldElement::operator-(const FieldElement& o) const { return *this + (-o); }

FieldElement FieldElement::operator*(const FieldElement& o) const {
    FieldElement a = *this, b = o;
    align(a, b);
    if (a.in_rationals()) {
        a.rat_ *= b.rat_;
        return a;
    }
    const FieldPtr& f = a.field_;
    const int d = f->degree();
    const FieldPtr& base = f->base();
    // convolution, then reduce g^k for k >= d via the power table
    std::vector<FieldElement> conv(2 * d - 1, zero(base));
    for (int i = 0; i < d; ++i) {
        if (a.coords_[i].is_zero()) continue;
        for (int j = 0; j < d; ++j) {
            if (b.coords_[j].is_zero()) continue;
            conv[i + j] += a.coords_[i] * b.coords_[j];
        }
    }
    std::vector<FieldElement> out(conv.begin(), conv.begin() + d);
    const auto& table = f->power_table();
    for (int k = d; k <= 2 * d - 2; ++k) {
        if (conv[k].is_zero()) continue;
        const auto& pk = table[k - d];
        for (int i = 0; i < d; ++i)
            if (!pk[i].is_zero()) out[i] += conv[k] * pk[i];
    }
    FieldElement e;
    e.field_ = f;
    e.coords_ = std::move(out);
    return e;
}

FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * o.inverse(); }

bool FieldElement::operator==(const FieldElement& o) const {
    FieldElement a = *this, b = o;
    align(a, b);
    if (a.in_rationals()) return a.rat_ == b.rat_;
    return a.coords_ == b.coords_;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw ZeroDivision("inverse of zero field element");
    if (in_rationals()) return FieldElement(rat_.inverse());
    const FieldPtr& base = field_->base();
    UPoly rep = UPoly::of(base, coords_);
    UPoly m = UPoly::of(base, field_->min_poly());
    UPoly g, u, v;
    xgcd(rep, m, g, u, v);
    if (g.degree() != 0)
        throw NonInvertible("gcd with modulus has degree " + std::to_string(g.degree()) +
                            " (reducible modulus) for " + str());
    UPoly inv = u.scale(g.c[0].inverse());
    std::vector<FieldElement> coords = inv.c;
    return from_coords(field_, std::move(coords));
}

FieldElement FieldElement::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElement r = one(field_);
    FieldElement b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

std::string FieldElement::str() const {
    if (in_rationals()) return rat_.str();
    std::ostringstream os;
    bool first = true;
    for (int i = field_->degree() - 1; i >= 0; --i) {
        const FieldElement& c = coords_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        std::string cs = c.str();
        bool compound = cs.find_first_of("+-") != std::string::npos && cs[0] != '-';
        if (cs.find_first_of("+") != std::string::npos ||
            (cs.rfind('-') != std::string::npos && cs.rfind('-') > 0))
            compound = true;
        if (!first) os << " + ";
        if (i == 0) {
            os << cs;
        } else {
            if (compound)
                os << "(" << cs << ")";
            else if (!c.is_one())
                os << cs << "*";
            os << field_->gen_name();
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) return "0";
    return os.str();
}

// ---------------------------------------------------------------------------
// UPoly
// ---------------------------------------------------------------------------

UPoly UPoly::constant(const FieldElement& e) {
    UPoly p{e.field(), {e}};
    p.trim();
    return p;
}

UPoly UPoly::x(const FieldPtr& f) {
    return UPoly{f, {FieldElement::zero(f), FieldElement::one(f)}};
}

UPoly UPoly::of(const FieldPtr& f, std::vector<FieldElement> coeffs) {
    UPoly p{f, std::move(coeffs)};
    p.trim();
    return p;
}

void UPoly::trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

FieldElement UPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c.size())) return FieldElement::zero(field);
    return c[static_cast<std::size_t>(i)];
}

UPoly UPoly::operator+(const UPoly& o) const {
    UPoly r{field, c};
    if (o.c.size() > r.c.size()) r.c.resize(o.c.size(), FieldElement::zero(field));
    for (std::size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
    r.trim();
    return r;
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + o.scale(FieldElement(-1L).promote_to(field)); }

UPoly UPoly::operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return zero(field);
    std::vector<FieldElement> r(c.size() + o.c.size() - 1, FieldElement::zero(field));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c.size(); ++j) {
            if (o.c[j].is_zero()) continue;
            r[i + j] += c[i] * o.c[j];
        }
    }
    return of(field, std::move(r));
}

UPoly UPoly::scale(const FieldElement& k) const {
    if (k.is_zero()) return zero(field);
    UPoly r{field, c};
    for (auto& e : r.c) e *= k;
    return r;
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    return scale(lead().inverse());
}

UPoly UPoly::derivative() const {
    if (c.size() <= 1) return zero(field);
    std::vector<FieldElement> r;
    r.reserve(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i)
        r.push_back(c[i] * FieldElement(static_cast<long>(i)).promote_to(field));
    return of(field, std::move(r));
}

FieldElement UPoly::eval(const FieldElement& x) const {
    FieldElement acc = FieldElement::zero(x.field());
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + it->promote_to(x.field());
    return acc;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
    if (d.is_zero()) throw ZeroDivision("polynomial division by zero");
    UPoly q = zero(field), r = *this;
    FieldElement dlinv = d.lead().inverse();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int k = r.degree() - d.degree();
        FieldElement f = r.lead() * dlinv;
        std::vector<FieldElement> qc(static_cast<std::size_t>(k) + 1, FieldElement::zero(field));
        qc.back() = f;
        UPoly term = of(field, std::move(qc));
        q = q + term;
        r = r - term * d;
    }
    return {q, r};
}

std::string UPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const FieldElement& e = c[static_cast<std::size_t>(i)];
        if (e.is_zero()) continue;
        if (!first) os << " + ";
        std::string es = e.str();
        if (i == 0) {
            os << es;
        } else {
            if (es.find_first_of("+*") != std::string::npos || (es.size() > 1 && es.find('-', 1) != std::string::npos))
                os << "(" << es << ")*";
            else if (!e.is_one())
                os << es << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

UPoly gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a, y = b;
    while (!y.is_zero()) {
        UPoly r = x.divmod(y).second;
        x = y;
        y = r;
    }
    return x.monic();
}

void xgcd(const UPoly& a, const UPoly& b, UPoly& g, UPoly& u, UPoly& v) {
    const FieldPtr& f = a.field;
    UPoly r0 = a, r1 = b;
    UPoly s0 = UPoly::constant(FieldElement::one(f)), s1 = UPoly::zero(f);
    UPoly t0 = UPoly::zero(f), t1 = UPoly::constant(FieldElement::one(f));
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = r1; r1 = r;
        UPoly s2 = s0 - q * s1;
        s0 = s1; s1 = s2;
        UPoly t2 = t0 - q * t1;
        t0 = t1; t1 = t2;
    }
    g = r0; u = s0; v = t0;
}

// ---------------------------------------------------------------------------
// Field
// ---------------------------------------------------------------------------

const FieldPtr& Field::rationals() {
    static FieldPtr q = [] {
        auto f = std::shared_ptr<Field>(new Field());
        f->degree_ = 1;
        f->name_ = "Q";
        return FieldPtr(f);
    }();
    return q;
}

FieldPtr Field::extension(const FieldPtr& base, const std::string& name,
                          const std::string& gen_name,
                          std::vector<FieldElement> monic_min_poly) {
    if (monic_min_poly.size() < 2 || !monic_min_poly.back().is_one())
        throw Error("minimal polynomial must be monic of degree >= 1");
    auto f = std::shared_ptr<Field>(new Field());
    f->base_ = base;
    f->degree_ = static_cast<int>(monic_min_poly.size()) - 1;
    f->name_ = name;
    f->gen_name_ = gen_name;
    f->min_poly_ = std::move(monic_min_poly);
    // power table: g^d = -(m_0 + m_1 g + ... + m_{d-1} g^{d-1}), then multiply up
    const int d = f->degree_;
    std::vector<FieldElement> gd(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) gd[static_cast<std::size_t>(i)] = -f->min_poly_[static_cast<std::size_t>(i)];
    f->powers_.push_back(gd);
    for (int k = d + 1; k <= 2 * d - 2; ++k) {
        const auto& prev = f->powers_.back();
        std::vector<FieldElement> nxt(static_cast<std::size_t>(d), FieldElement::zero(base));
        // multiply prev by g: shift, reduce the overflow coefficient
        for (int i = 0; i < d - 1; ++i) nxt[static_cast<std::size_t>(i + 1)] = prev[static_cast<std::size_t>(i)];
        const FieldElement& top = prev[static_cast<std::size_t>(d - 1)];
        if (!top.is_zero())
            for (int i = 0; i < d; ++i)
                nxt[static_cast<std::size_t>(i)] += top * gd[static_cast<std::size_t>(i)];
        f->powers_.push_back(std::move(nxt));
    }
    return FieldPtr(f);
}

static FieldPtr make_quadratic(const char* name, const char* gen, long c0) {
    const FieldPtr& q = Field::rationals();
    std::vector<FieldElement> m = {FieldElement(c0), FieldElement(0L), FieldElement(1L)};
    return Field::extension(q, name, gen, std::move(m));
}

const FieldPtr& Field::gaussian() {
    static FieldPtr f = make_quadratic("Q(i)", "i", 1);
    return f;
}

const FieldPtr& Field::root5() {
    static FieldPtr f = make_quadratic("Q(r5)", "r5", -5);
    return f;
}

const FieldPtr& Field::zeta5() {
    static FieldPtr f = [] {
        const FieldPtr& q = rationals();
        std::vector<FieldElement> m(5, FieldElement(1L));
        return extension(q, "Q(z5)", "z5", std::move(m));
    }();
    return f;
}

int Field::absolute_degree() const {
    int d = degree_;
    const Field* b = base_.get();
    while (b) {
        d *= b->degree();
        b = b->base().get();
    }
    return d;
}

FieldElement golden_eps() {
    const FieldPtr& f = Field::root5();
    return FieldElement::from_coords(f, {FieldElement(Rational(1, 2)), FieldElement(Rational(1, 2))});
}

std::optional<FieldElement> field_sqrt(const FieldElement& x) {
    if (x.in_rationals()) {
        Rational out;
        if (x.as_rational().sqrt_exact(out)) return FieldElement(out);
        return std::nullopt;
    }
    const FieldPtr& f = x.field();
    if (f->degree() != 2 || !f->base()->is_rationals()) return std::nullopt;
    // minimal polynomial x^2 + b1 x + c1 over Q
    Rational b1 = f->min_poly()[1].as_rational();
    Rational c1 = f->min_poly()[0].as_rational();
    Rational p = x.coord(0).as_rational();
    Rational q = x.coord(1).as_rational();
    auto mk = [&](const Rational& a, const Rational& b) {
        return FieldElement::from_coords(f, {FieldElement(a), FieldElement(b)});
    };
    if (q.is_zero()) {
        Rational a;
        if (p.sqrt_exact(a)) return mk(a, Rational(0));
        // (b*g)^2 with 2a = b1*b: a = b1*b/2, b^2 (b1^2/4 - c1) = p
        Rational denom = b1 * b1 / Rational(4) - c1;
        if (!denom.is_zero()) {
            Rational b2 = p / denom, b;
            if (b2.sqrt_exact(b)) return mk(b1 * b / Rational(2), b);
        }
        return std::nullopt;
    }
    // (a + b g)^2 = p + q g with g^2 = -b1 g - c1:
    //   a^2 - c1 b^2 = p,  2ab - b1 b^2 = q
    // substitute a = (q + b1 b^2)/(2b), set B = b^2:
    //   (b1^2 - 4 c1) B^2 + (2 q b1 - 4 p) B + q^2 = 0
    Rational A2 = b1 * b1 - Rational(4) * c1;
    Rational A1 = Rational(2) * q * b1 - Rational(4) * p;
    Rational A0 = q * q;
    std::vector<Rational> roots;
    if (A2.is_zero()) {
        if (!A1.is_zero()) roots.push_back(-A0 / A1);
    } else {
        Rational disc = A1 * A1 - Rational(4) * A2 * A0, sd;
        if (disc.sqrt_exact(sd)) {
            roots.push_back((-A1 + sd) / (Rational(2) * A2));
            roots.push_back((-A1 - sd) / (Rational(2) * A2));
        }
    }
    for (const Rational& B : roots) {
        Rational b;
        if (!B.sqrt_exact(b) || b.is_zero()) continue;
        Rational a = (q + b1 * B) / (Rational(2) * b);
        FieldElement cand = mk(a, b);
        if (cand * cand == x) return cand;
    }
    return std::nullopt;
}

}  // namespace bringlab
