#pragma once

#include <map>
#include <string>
#include <vector>

#include "bringlab/field.hpp"

namespace bringlab {

/// Truncated Laurent series sum c_e q^e, known exactly for all exponents
/// e < prec. Stored coefficients start at the valuation; the leading stored
/// coefficient is nonzero unless the series vanishes identically up to prec.
///
/// Precision bookkeeping: results carry the minimum justified precision of
/// their inputs. A product of series known mod O(q^Pa), O(q^Pb) is justified
/// to min(val_a + Pb, val_b + Pa); inverting a series of valuation v costs
/// 2v of precision.
class LaurentSeries {
  public:
    LaurentSeries() : field_(Field::rationals()), val_(0), prec_(0) {}
    LaurentSeries(const FieldPtr& field, long val, std::vector<FieldElement> coeffs, long prec);

    static LaurentSeries zero(const FieldPtr& f, long prec);
    static LaurentSeries constant(const FieldElement& c, long prec);
    static LaurentSeries q_power(const FieldPtr& f, long e, long prec);

    const FieldPtr& field() const { return field_; }
    long valuation() const { return val_; }
    long precision() const { return prec_; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of q^e; throws InsufficientPrecision for e >= prec.
    FieldElement coeff(long e) const;
    const std::vector<FieldElement>& raw_coeffs() const { return coeffs_; }

    LaurentSeries operator-() const;
    LaurentSeries operator+(const LaurentSeries& o) const;
    LaurentSeries operator-(const LaurentSeries& o) const;
    LaurentSeries operator*(const LaurentSeries& o) const;
    LaurentSeries scale(const FieldElement& k) const;
    LaurentSeries inverse() const;
    LaurentSeries operator/(const LaurentSeries& o) const;

    LaurentSeries operator+(const FieldElement& c) const;
    LaurentSeries operator-(const FieldElement& c) const;

    /// Formal derivative d/dq.
    LaurentSeries derivative() const;
    /// Multiplication by q^k (exact shift).
    LaurentSeries shift(long k) const;
    LaurentSeries pow(long e) const;
    LaurentSeries truncate(long prec) const;

    /// True when the two series agree on all exponents below min(prec).
    bool agrees_with(const LaurentSeries& o) const;

    std::string str(long max_terms = 10) const;

  private:
    void normalize();
    FieldPtr field_;
    long val_;
    std::vector<FieldElement> coeffs_;  // coeffs_[i] is the coefficient of q^(val_+i)
    long prec_;
};

/// Named tuple of series over a common field, e.g. a formal curve point.
class SeriesTuple {
  public:
    SeriesTuple() = default;
    SeriesTuple(std::vector<std::string> names, std::vector<LaurentSeries> series);

    const LaurentSeries& operator[](const std::string& name) const;
    const LaurentSeries& at(std::size_t i) const { return series_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    std::size_t size() const { return series_.size(); }
    long min_precision() const;
    const FieldPtr& field() const;

  private:
    std::vector<std::string> names_;
    std::vector<LaurentSeries> series_;
};

}  // namespace bringlab
