#include "bringlab/series.hpp"

#include <algorithm>
#include <sstream>

namespace bringlab {

LaurentSeries::LaurentSeries(const FieldPtr& field, long val,
                             std::vector<FieldElement> coeffs, long prec)
    : field_(field), val_(val), coeffs_(std::move(coeffs)), prec_(prec) {
    normalize();
}

void LaurentSeries::normalize() {
    if (static_cast<long>(coeffs_.size()) > prec_ - val_)
        coeffs_.resize(static_cast<std::size_t>(std::max<long>(0, prec_ - val_)));
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
    if (lead) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
        val_ += static_cast<long>(lead);
    }
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    if (coeffs_.empty()) val_ = prec_;
}

LaurentSeries LaurentSeries::zero(const FieldPtr& f, long prec) {
    return LaurentSeries(f, prec, {}, prec);
}

LaurentSeries LaurentSeries::constant(const FieldElement& c, long prec) {
    return LaurentSeries(c.field(), 0, {c}, prec);
}

LaurentSeries LaurentSeries::q_power(const FieldPtr& f, long e, long prec) {
    return LaurentSeries(f, e, {FieldElement::one(f)}, prec);
}

FieldElement LaurentSeries::coeff(long e) const {
    if (e >= prec_)
        throw InsufficientPrecision("coefficient of q^" + std::to_string(e) +
                                    " beyond precision O(q^" + std::to_string(prec_) + ")");
    long i = e - val_;
    if (i < 0 || i >= static_cast<long>(coeffs_.size())) return FieldElement::zero(field_);
    return coeffs_[static_cast<std::size_t>(i)];
}

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
    long prec = std::min(prec_, o.prec_);
    if (is_zero()) return LaurentSeries(o.field_, o.val_, o.coeffs_, prec);
    if (o.is_zero()) return LaurentSeries(field_, val_, coeffs_, prec);
    long val = std::min(val_, o.val_);
    std::vector<FieldElement> c(static_cast<std::size_t>(std::max<long>(0, prec - val)),
                                FieldElement::zero(field_));
    auto acc = [&](const LaurentSeries& s, bool neg) {
        (void)neg;
        for (std::size_t i = 0; i < s.coeffs_.size(); ++i) {
            long e = s.val_ + static_cast<long>(i);
            if (e >= prec) break;
            c[static_cast<std::size_t>(e - val)] += s.coeffs_[i];
        }
    };
    acc(*this, false);
    acc(o, false);
    return LaurentSeries(field_, val, std::move(c), prec);
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& o) const { return *this + (-o); }

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
    if (is_zero() || o.is_zero()) {
        long prec = std::min({val_ + o.prec_, o.val_ + prec_, prec_ + o.prec_});
        return zero(field_, prec);
    }
    long prec = std::min(val_ + o.prec_, o.val_ + prec_);
    long val = val_ + o.val_;
    long n = prec - val;
    std::vector<FieldElement> c(static_cast<std::size_t>(std::max<long>(0, n)),
                                FieldElement::zero(field_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
            long k = static_cast<long>(i + j);
            if (k >= n) break;
            if (o.coeffs_[j].is_zero()) continue;
            c[static_cast<std::size_t>(k)] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return LaurentSeries(field_, val, std::move(c), prec);
}

LaurentSeries LaurentSeries::scale(const FieldElement& k) const {
    if (k.is_zero()) return zero(field_, prec_);
    LaurentSeries r = *this;
    for (auto& c : r.coeffs_) c *= k;
    return r;
}

LaurentSeries LaurentSeries::inverse() const {
    if (is_zero())
        throw DivisionByZeroSeries("inverting a series that vanishes up to O(q^" +
                                   std::to_string(prec_) + ")");
    long n = prec_ - val_;
    std::vector<FieldElement> u = coeffs_;
    u.resize(static_cast<std::size_t>(n), FieldElement::zero(field_));
    std::vector<FieldElement> inv(static_cast<std::size_t>(n), FieldElement::zero(field_));
    FieldElement lead_inv = u[0].inverse();
    inv[0] = lead_inv;
    for (long k = 1; k < n; ++k) {
        FieldElement s = FieldElement::zero(field_);
        for (long j = 1; j <= k; ++j) {
            if (u[static_cast<std::size_t>(j)].is_zero()) continue;
            s += u[static_cast<std::size_t>(j)] * inv[static_cast<std::size_t>(k - j)];
        }
        inv[static_cast<std::size_t>(k)] = -(s * lead_inv);
    }
    return LaurentSeries(field_, -val_, std::move(inv), prec_ - 2 * val_);
}

LaurentSeries LaurentSeries::operator/(const LaurentSeries& o) const { return *this * o.inverse(); }

LaurentSeries LaurentSeries::operator+(const FieldElement& c) const {
    return *this + constant(c.promote_to(field_), prec_);
}

LaurentSeries LaurentSeries::operator-(const FieldElement& c) const {
    return *this + constant(-c.promote_to(field_), prec_);
}

LaurentSeries LaurentSeries::derivative() const {
    std::vector<FieldElement> c;
    c.reserve(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        c.push_back(coeffs_[i] * FieldElement(val_ + static_cast<long>(i)).promote_to(field_));
    return LaurentSeries(field_, val_ - 1, std::move(c), prec_ - 1);
}

LaurentSeries LaurentSeries::shift(long k) const {
    return LaurentSeries(field_, val_ + k, coeffs_, prec_ + k);
}

LaurentSeries LaurentSeries::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    // exponentiation by squaring; the constant 1 carries effectively
    // unlimited precision so it never caps the result
    LaurentSeries r = constant(FieldElement::one(field_), prec_ + (e + 1) * std::abs(val_) + 16);
    LaurentSeries b = *this;
    long k = e;
    while (k) {
        if (k & 1) r = r * b;
        k >>= 1;
        if (k) b = b * b;
    }
    return r;
}

LaurentSeries LaurentSeries::truncate(long prec) const {
    return LaurentSeries(field_, val_, coeffs_, std::min(prec, prec_));
}

bool LaurentSeries::agrees_with(const LaurentSeries& o) const {
    return (*this - o).is_zero();
}

std::string LaurentSeries::str(long max_terms) const {
    std::ostringstream os;
    long shown = 0;
    for (std::size_t i = 0; i < coeffs_.size() && shown < max_terms; ++i) {
        if (coeffs_[i].is_zero()) continue;
        std::string cs = coeffs_[i].str();
        if (shown && cs[0] != '-') os << " + ";
        else if (shown) { os << " - "; cs = cs.substr(1); }
        long e = val_ + static_cast<long>(i);
        if (e == 0) os << cs;
        else {
            if (cs != "1") os << cs << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
        ++shown;
    }
    if (!shown) os << "0";
    os << " + O(q^" << prec_ << ")";
    return os.str();
}

SeriesTuple::SeriesTuple(std::vector<std::string> names, std::vector<LaurentSeries> series)
    : names_(std::move(names)), series_(std::move(series)) {
    if (names_.size() != series_.size()) throw Error("name/series count mismatch");
    for (std::size_t i = 1; i < series_.size(); ++i)
        if (series_[i].field().get() != series_[0].field().get())
            throw Error("series tuple over mixed fields");
}

const LaurentSeries& SeriesTuple::operator[](const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return series_[i];
    throw Error("no series named '" + name + "' in tuple");
}

long SeriesTuple::min_precision() const {
    long p = series_.empty() ? 0 : series_[0].precision();
    for (const auto& s : series_) p = std::min(p, s.precision());
    return p;
}

const FieldPtr& SeriesTuple::field() const {
    if (series_.empty()) return Field::rationals();
    return series_[0].field();
}

}  // namespace bringlab
