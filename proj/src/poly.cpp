#include "bringlab/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace bringlab {

VarListPtr make_vars(std::initializer_list<const char*> names) {
    auto v = std::make_shared<VarList>();
    for (const char* n : names) v->push_back(n);
    return v;
}

VarListPtr make_vars(const std::vector<std::string>& names) {
    return std::make_shared<VarList>(names);
}

// ---------------------------------------------------------------------------
// Monomial and orders
// ---------------------------------------------------------------------------

Monomial::Monomial(std::vector<unsigned> exps) : e_(std::move(exps)) {
    while (!e_.empty() && e_.back() == 0) e_.pop_back();
    deg_ = 0;
    for (unsigned x : e_) deg_ += x;
}

Monomial Monomial::operator*(const Monomial& o) const {
    std::vector<unsigned> e(std::max(e_.size(), o.e_.size()), 0);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = exp(i) + o.exp(i);
    return Monomial(std::move(e));
}

std::optional<Monomial> Monomial::divide(const Monomial& o) const {
    if (o.deg_ > deg_) return std::nullopt;
    std::vector<unsigned> e(e_.size(), 0);
    for (std::size_t i = 0; i < std::max(e_.size(), o.e_.size()); ++i) {
        if (o.exp(i) > exp(i)) return std::nullopt;
        if (i < e_.size()) e[i] = exp(i) - o.exp(i);
    }
    return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& o) const { return o.divide(*this).has_value(); }

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    std::vector<unsigned> e(std::max(a.e_.size(), b.e_.size()), 0);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exp(i), b.exp(i));
    return Monomial(std::move(e));
}

bool Monomial::coprime_with(const Monomial& o) const {
    for (std::size_t i = 0; i < std::min(e_.size(), o.e_.size()); ++i)
        if (e_[i] && o.e_[i]) return false;
    return true;
}

static int cmp_lex(const Monomial& a, const Monomial& b, std::size_t from, std::size_t to) {
    for (std::size_t i = from; i < to; ++i) {
        if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? -1 : 1;
    }
    return 0;
}

static int cmp_grevlex(const Monomial& a, const Monomial& b, std::size_t from, std::size_t to) {
    unsigned da = 0, db = 0;
    for (std::size_t i = from; i < to; ++i) { da += a.exp(i); db += b.exp(i); }
    if (da != db) return da < db ? -1 : 1;
    // reverse-lex tie break: last differing exponent, larger exponent is smaller
    for (std::size_t i = to; i-- > from;) {
        if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i) ? -1 : 1;
    }
    return 0;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    std::size_t n = std::max(a.exps().size(), b.exps().size());
    switch (kind) {
        case Kind::lex:
            return cmp_lex(a, b, 0, n);
        case Kind::grevlex:
            return cmp_grevlex(a, b, 0, std::max(n, std::size_t(1)));
        case Kind::block: {
            int c = cmp_lex(a, b, 0, elim);
            if (c) return c;
            return cmp_grevlex(a, b, elim, std::max(n, elim));
        }
    }
    return 0;
}

std::string MonomialOrder::str() const {
    switch (kind) {
        case Kind::lex: return "lex";
        case Kind::grevlex: return "grevlex";
        case Kind::block: return "block(" + std::to_string(elim) + ")";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// MultiPoly
// ---------------------------------------------------------------------------

MultiPoly::MultiPoly()
    : field_(Field::rationals()), vars_(std::make_shared<VarList>()),
      order_(MonomialOrder::grevlex()), terms_(MonoGreater{order_}) {}

MultiPoly::MultiPoly(const FieldPtr& field, const VarListPtr& vars, MonomialOrder order)
    : field_(field), vars_(vars), order_(order), terms_(MonoGreater{order}) {}

MultiPoly MultiPoly::zero(const FieldPtr& f, const VarListPtr& vars, MonomialOrder order) {
    return MultiPoly(f, vars, order);
}

MultiPoly MultiPoly::constant(const FieldPtr& f, const VarListPtr& vars, const FieldElement& c,
                              MonomialOrder order) {
    MultiPoly p(f, vars, order);
    p.add_term(Monomial(), c.promote_to(f));
    return p;
}

MultiPoly MultiPoly::variable(const FieldPtr& f, const VarListPtr& vars, std::size_t index,
                              MonomialOrder order) {
    if (index >= vars->size()) throw Error("variable index out of range");
    MultiPoly p(f, vars, order);
    std::vector<unsigned> e(index + 1, 0);
    e[index] = 1;
    p.add_term(Monomial(std::move(e)), FieldElement::one(f));
    return p;
}

void MultiPoly::add_term(const Monomial& m, const FieldElement& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

const Monomial& MultiPoly::leading_monomial() const {
    if (is_zero()) throw Error("leading term of zero polynomial");
    return terms_.begin()->first;
}

const FieldElement& MultiPoly::leading_coeff() const {
    if (is_zero()) throw Error("leading term of zero polynomial");
    return terms_.begin()->second;
}

const Monomial& MultiPoly::trailing_monomial() const {
    if (is_zero()) throw Error("trailing term of zero polynomial");
    return terms_.rbegin()->first;
}

const FieldElement& MultiPoly::trailing_coeff() const {
    if (is_zero()) throw Error("trailing term of zero polynomial");
    return terms_.rbegin()->second;
}

FieldElement MultiPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? FieldElement::zero(field_) : it->second;
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.total_degree()));
    return d;
}

unsigned MultiPoly::degree_in(std::size_t i) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exp(i));
    return d;
}

bool MultiPoly::is_homogeneous() const {
    if (is_zero()) return true;
    unsigned d = terms_.begin()->first.total_degree();
    for (const auto& [m, c] : terms_)
        if (m.total_degree() != d) return false;
    return true;
}

bool MultiPoly::uses_var(std::size_t i) const {
    for (const auto& [m, c] : terms_)
        if (m.exp(i) > 0) return true;
    return false;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly r(field_, vars_, order_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
    return r;
}

MultiPoly MultiPoly::scale(const FieldElement& k) const {
    if (k.is_zero()) return zero(field_, vars_, order_);
    MultiPoly r = *this;
    for (auto& [m, c] : r.terms_) c *= k;
    return r;
}

MultiPoly MultiPoly::mul_term(const Monomial& m, const FieldElement& c) const {
    MultiPoly r(field_, vars_, order_);
    if (c.is_zero()) return r;
    for (const auto& [m1, c1] : terms_) r.terms_.emplace(m1 * m, c1 * c);
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r = constant(field_, vars_, FieldElement::one(field_), order_);
    MultiPoly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (!(it->first == jt->first) || it->second != jt->second) return false;
    }
    return true;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
    MultiPoly r(field_, vars_, order_);
    for (const auto& [m, c] : terms_) {
        unsigned e = m.exp(var);
        if (!e) continue;
        std::vector<unsigned> ex = m.exps();
        ex[var] -= 1;
        r.add_term(Monomial(std::move(ex)), c * FieldElement(static_cast<long>(e)).promote_to(field_));
    }
    return r;
}

MultiPoly MultiPoly::with_order(MonomialOrder order) const {
    MultiPoly r(field_, vars_, order);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c);
    return r;
}

MultiPoly MultiPoly::with_vars(const VarListPtr& new_vars) const {
    std::vector<int> map(vars_->size(), -1);
    for (std::size_t i = 0; i < vars_->size(); ++i) {
        for (std::size_t j = 0; j < new_vars->size(); ++j)
            if ((*vars_)[i] == (*new_vars)[j]) { map[i] = static_cast<int>(j); break; }
    }
    MultiPoly r(field_, new_vars, order_);
    for (const auto& [m, c] : terms_) {
        std::vector<unsigned> e(new_vars->size(), 0);
        for (std::size_t i = 0; i < vars_->size(); ++i) {
            if (!m.exp(i)) continue;
            if (map[i] < 0)
                throw Error("variable " + (*vars_)[i] + " missing from target list");
            e[static_cast<std::size_t>(map[i])] = m.exp(i);
        }
        r.add_term(Monomial(std::move(e)), c);
    }
    return r;
}

MultiPoly MultiPoly::monic() const {
    if (is_zero()) return *this;
    return scale(leading_coeff().inverse());
}

MultiPoly MultiPoly::normalized_integer() const {
    if (is_zero()) return *this;
    bool rational = field_->is_rationals();
    if (!rational) return monic();
    mpz_class den(1), num(0);
    for (const auto& [m, c] : terms_) {
        den = lcm(den, c.as_rational().den());
        num = gcd(num, c.as_rational().num());
    }
    Rational k(den, num);
    if ((leading_coeff().as_rational() * k).sign() < 0) k = -k;
    return scale(FieldElement(k));
}

MultiPoly MultiPoly::normalized_trailing_one() const {
    if (is_zero()) return *this;
    return scale(trailing_coeff().inverse());
}

bool MultiPoly::equal_up_to_unit(const MultiPoly& o) const {
    if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
    if (terms_.size() != o.terms_.size()) return false;
    FieldElement k = leading_coeff() / o.leading_coeff();
    return *this == o.scale(k);
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
    if (images.size() != vars_->size()) throw Error("substitute: image count mismatch");
    if (terms_.empty()) {
        if (images.empty()) return *this;
        return zero(field_, images[0].vars(), images[0].order());
    }
    const VarListPtr& tv = images.empty() ? vars_ : images[0].vars();
    MonomialOrder to = images.empty() ? order_ : images[0].order();
    MultiPoly acc = zero(field_, tv, to);
    // cache powers per variable
    std::vector<std::vector<MultiPoly>> pows(vars_->size());
    for (const auto& [m, c] : terms_) {
        MultiPoly term = constant(field_, tv, c, to);
        for (std::size_t i = 0; i < vars_->size(); ++i) {
            unsigned e = m.exp(i);
            if (!e) continue;
            auto& pv = pows[i];
            if (pv.empty()) pv.push_back(images[i]);  // pv[k] = images[i]^(k+1)
            while (pv.size() < e) pv.push_back(pv.back() * images[i]);
            term = term * pv[e - 1];
        }
        acc = acc + term;
    }
    return acc;
}

LaurentSeries MultiPoly::eval_series(const std::vector<LaurentSeries>& point) const {
    if (point.size() != vars_->size()) throw Error("eval_series: point arity mismatch");
    long prec = point.empty() ? 1 << 28 : point[0].precision();
    for (const auto& s : point) prec = std::min(prec, s.precision());
    const FieldPtr& sf = point.empty() ? field_ : point[0].field();
    if (is_zero()) return LaurentSeries::zero(sf, prec);
    // collect terms into a simple list grouped by exponent of var 0, recursively
    struct Rec {
        const std::vector<LaurentSeries>& pt;
        const FieldPtr& sf;
        long basep;
        LaurentSeries run(std::vector<std::pair<Monomial, FieldElement>>& ts, std::size_t v) {
            if (ts.empty()) return LaurentSeries::zero(sf, basep);
            if (v == pt.size()) {
                FieldElement c = FieldElement::zero(sf);
                for (auto& [m, k] : ts) c += k.promote_to(sf);
                return LaurentSeries::constant(c, basep);
            }
            // group by exponent of variable v, descending, then Horner
            std::map<unsigned, std::vector<std::pair<Monomial, FieldElement>>> groups;
            for (auto& [m, k] : ts) {
                std::vector<unsigned> e = m.exps();
                unsigned ev = m.exp(v);
                if (v < e.size()) e[v] = 0;
                groups[ev].emplace_back(Monomial(std::move(e)), k);
            }
            LaurentSeries acc = LaurentSeries::zero(sf, basep + 16);
            unsigned prev = 0;
            bool first = true;
            for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
                if (!first) {
                    unsigned gap = prev - it->first;
                    for (unsigned g = 0; g < gap; ++g) acc = acc * pt[v];
                }
                acc = acc + run(it->second, v + 1);
                prev = it->first;
                first = false;
            }
            for (unsigned g = 0; g < prev; ++g) acc = acc * pt[v];
            return acc;
        }
    };
    std::vector<std::pair<Monomial, FieldElement>> ts(terms_.begin(), terms_.end());
    Rec rec{point, sf, prec};
    return rec.run(ts, 0).truncate(prec);
}

FieldElement MultiPoly::eval(const std::vector<FieldElement>& point) const {
    if (point.size() != vars_->size()) throw Error("eval: point arity mismatch");
    const FieldPtr& f = point.empty() ? field_ : point[0].field();
    FieldElement acc = FieldElement::zero(f);
    for (const auto& [m, c] : terms_) {
        FieldElement t = c.promote_to(f);
        for (std::size_t i = 0; i < point.size(); ++i)
            if (m.exp(i)) t *= point[i].pow(m.exp(i));
        acc += t;
    }
    return acc;
}

UPoly MultiPoly::to_upoly(std::size_t var) const {
    for (std::size_t i = 0; i < vars_->size(); ++i)
        if (i != var && uses_var(i))
            throw Error("to_upoly: polynomial uses variable " + (*vars_)[i]);
    std::vector<FieldElement> c(degree_in(var) + 1, FieldElement::zero(field_));
    for (const auto& [m, k] : terms_) c[m.exp(var)] = k;
    return UPoly::of(field_, std::move(c));
}

MultiPoly MultiPoly::from_upoly(const UPoly& p, const VarListPtr& vars, std::size_t var,
                                MonomialOrder order) {
    MultiPoly r(p.field, vars, order);
    for (std::size_t i = 0; i < p.c.size(); ++i) {
        if (p.c[i].is_zero()) continue;
        std::vector<unsigned> e(var + 1, 0);
        e[var] = static_cast<unsigned>(i);
        r.add_term(Monomial(std::move(e)), p.c[i]);
    }
    return r;
}

std::string MultiPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-' && cs.find_first_of("+*", 1) == std::string::npos &&
                   cs.find('-', 1) == std::string::npos;
        if (first) {
            if (neg) { os << "-"; cs = cs.substr(1); }
        } else {
            if (neg) { os << " - "; cs = cs.substr(1); }
            else os << " + ";
        }
        bool compound = cs.find_first_of("+*") != std::string::npos || cs.find('-', 1) != std::string::npos;
        if (m.is_constant()) {
            os << (compound ? "(" + cs + ")" : cs);
        } else {
            bool printed = false;
            if (compound) { os << "(" << cs << ")*"; printed = true; }
            else if (cs != "1") { os << cs << "*"; printed = true; }
            (void)printed;
            bool fv = true;
            for (std::size_t i = 0; i < vars_->size(); ++i) {
                unsigned e = m.exp(i);
                if (!e) continue;
                if (!fv) os << "*";
                os << (*vars_)[i];
                if (e > 1) os << "^" << e;
                fv = false;
            }
        }
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

struct Parser {
    const std::string& text;
    std::size_t pos = 0;
    const VarListPtr& vars;
    const FieldPtr& field;
    MonomialOrder order;
    const std::vector<std::pair<std::string, FieldElement>>& consts;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool peek(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }

    bool eat(char c) {
        if (peek(c)) { ++pos; return true; }
        return false;
    }

    [[noreturn]] void fail(const std::string& expected) {
        throw ParseError("parse error in '" + text + "'", pos, expected);
    }

    MultiPoly parse_expr() {
        MultiPoly acc = MultiPoly::zero(field, vars, order);
        bool first = true;
        for (;;) {
            skip_ws();
            int sign = 1;
            if (eat('+')) sign = 1;
            else if (eat('-')) sign = -1;
            else if (!first) break;
            skip_ws();
            if (pos >= text.size()) {
                if (first) break;
                fail("term");
            }
            MultiPoly t = parse_term();
            acc = sign > 0 ? acc + t : acc - t;
            first = false;
            skip_ws();
            if (pos >= text.size() || text[pos] == ')') break;
        }
        return acc;
    }

    MultiPoly parse_term() {
        MultiPoly acc = MultiPoly::constant(field, vars, FieldElement::one(field), order);
        bool any = false;
        for (;;) {
            skip_ws();
            if (pos >= text.size()) break;
            char c = text[pos];
            if (c == '(') {
                ++pos;
                MultiPoly inner = parse_expr();
                skip_ws();
                if (!eat(')')) fail("')'");
                acc = acc * maybe_power(inner);
                any = true;
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                acc = acc.scale(parse_rational());
                any = true;
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                acc = acc * maybe_power(parse_symbol());
                any = true;
            } else {
                break;
            }
            skip_ws();
            if (eat('*')) continue;
            // juxtaposition continues the term only for a var/paren/digit
            if (pos < text.size() &&
                (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '(' || text[pos] == '_'))
                continue;
            break;
        }
        if (!any) fail("coefficient or variable");
        return acc;
    }

    MultiPoly maybe_power(MultiPoly base) {
        skip_ws();
        if (eat('^')) {
            skip_ws();
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == start) fail("exponent");
            unsigned e = static_cast<unsigned>(std::stoul(text.substr(start, pos - start)));
            return base.pow(e);
        }
        return base;
    }

    FieldElement parse_rational() {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        std::string num = text.substr(start, pos - start);
        skip_ws();
        if (pos < text.size() && text[pos] == '/') {
            std::size_t save = pos;
            ++pos;
            skip_ws();
            std::size_t dstart = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == dstart) { pos = save; }
            else {
                std::string den = text.substr(dstart, pos - dstart);
                return FieldElement::from_rational(field, Rational::parse(num + "/" + den));
            }
        }
        return FieldElement::from_rational(field, Rational::parse(num));
    }

    MultiPoly parse_symbol() {
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        std::string name = text.substr(start, pos - start);
        for (std::size_t i = 0; i < vars->size(); ++i)
            if ((*vars)[i] == name) return MultiPoly::variable(field, vars, i, order);
        for (const auto& [n, val] : consts)
            if (n == name)
                return MultiPoly::constant(field, vars, val.promote_to(field), order);
        pos = start;
        fail("known variable (got '" + name + "')");
    }
};

}  // namespace

MultiPoly parse_poly_ext(const std::string& text, const VarListPtr& vars, const FieldPtr& field,
                         const std::vector<std::pair<std::string, FieldElement>>& consts,
                         MonomialOrder order) {
    Parser p{text, 0, vars, field, order, consts};
    MultiPoly r = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("end of input");
    return r;
}

MultiPoly parse_poly(const std::string& text, const VarListPtr& vars, const FieldPtr& field,
                     MonomialOrder order) {
    static const std::vector<std::pair<std::string, FieldElement>> none;
    return parse_poly_ext(text, vars, field, none, order);
}

}  // namespace bringlab
