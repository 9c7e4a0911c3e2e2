#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bringlab/rational.hpp"

namespace bringlab {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Element of Q or of an extension field K[g]/(m(g)). Elements of an
/// extension are coordinate vectors over the base field, so towers nest
/// without collapsing to an absolute field. Immutable value type.
class FieldElement {
  public:
    FieldElement();  // 0 in Q
    FieldElement(long n);
    FieldElement(const Rational& r);

    static FieldElement zero(const FieldPtr& f);
    static FieldElement one(const FieldPtr& f);
    static FieldElement from_rational(const FieldPtr& f, const Rational& r);
    static FieldElement generator(const FieldPtr& f);
    /// Element of an extension field from coordinates over the base
    /// (length at most the degree; padded with zeros).
    static FieldElement from_coords(const FieldPtr& f, std::vector<FieldElement> coords);

    const FieldPtr& field() const { return field_; }
    bool in_rationals() const;
    /// The rational value; requires the element to lie in Q (all higher
    /// coordinates zero at every level).
    Rational as_rational() const;
    bool is_rational_valued() const;
    const std::vector<FieldElement>& coords() const { return coords_; }
    const FieldElement& coord(int i) const;

    bool is_zero() const;
    bool is_one() const;

    FieldElement operator-() const;
    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
    FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    /// Extended-Euclid inverse in the quotient ring. Throws ZeroDivision on 0
    /// and NonInvertible when the representative is not coprime to the
    /// modulus (a reducible modulus; reported, never silently factored).
    FieldElement inverse() const;
    FieldElement pow(long e) const;

    /// Lift into a field whose base chain contains this element's field.
    FieldElement promote_to(const FieldPtr& f) const;

    std::string str() const;

  private:
    friend class Field;
    FieldPtr field_;
    Rational rat_;                       // used when field_ is Q
    std::vector<FieldElement> coords_;   // used otherwise; length = degree
    static void align(FieldElement& a, FieldElement& b);
};

/// Dense univariate polynomial over a field, ascending coefficients.
/// Internal workhorse for quotient-ring arithmetic, gcds and low-degree
/// solving; not the sparse multivariate type.
struct UPoly {
    FieldPtr field;
    std::vector<FieldElement> c;

    static UPoly zero(const FieldPtr& f) { return UPoly{f, {}}; }
    static UPoly constant(const FieldElement& e);
    static UPoly x(const FieldPtr& f);
    static UPoly of(const FieldPtr& f, std::vector<FieldElement> coeffs);

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    const FieldElement& lead() const { return c.back(); }
    FieldElement coeff(int i) const;
    void trim();

    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator*(const UPoly& o) const;
    UPoly scale(const FieldElement& k) const;
    UPoly monic() const;
    UPoly derivative() const;
    FieldElement eval(const FieldElement& x) const;
    std::pair<UPoly, UPoly> divmod(const UPoly& d) const;

    std::string str(const std::string& var) const;
};

UPoly gcd(const UPoly& a, const UPoly& b);
/// g = gcd(a,b) monic, with u*a + v*b = g.
void xgcd(const UPoly& a, const UPoly& b, UPoly& g, UPoly& u, UPoly& v);

/// A coefficient field: Q, or an extension of a base field by a monic
/// minimal polynomial. Instances are immutable and shared; field identity
/// is pointer identity.
class Field : public std::enable_shared_from_this<Field> {
  public:
    static const FieldPtr& rationals();
    /// Q(i), minimal polynomial x^2 + 1, generator "i".
    static const FieldPtr& gaussian();
    /// Q(sqrt5), minimal polynomial x^2 - 5, generator "r5".
    static const FieldPtr& root5();
    /// Q(zeta5), minimal polynomial x^4 + x^3 + x^2 + x + 1, generator "z5".
    static const FieldPtr& zeta5();

    /// Quotient-ring extension of `base` by a monic polynomial given by its
    /// coefficient vector over `base` (ascending, leading 1 included).
    static FieldPtr extension(const FieldPtr& base, const std::string& name,
                              const std::string& gen_name,
                              std::vector<FieldElement> monic_min_poly);

    bool is_rationals() const { return base_ == nullptr; }
    int degree() const { return degree_; }
    int absolute_degree() const;
    const FieldPtr& base() const { return base_; }
    const std::string& name() const { return name_; }
    const std::string& gen_name() const { return gen_name_; }
    /// Monic minimal polynomial coefficients over the base, ascending,
    /// length degree+1.
    const std::vector<FieldElement>& min_poly() const { return min_poly_; }
    /// Reduced coordinates of g^k for k = degree .. 2*degree-2.
    const std::vector<std::vector<FieldElement>>& power_table() const { return powers_; }

  private:
    Field() = default;
    FieldPtr base_;
    int degree_ = 1;
    std::string name_ = "Q";
    std::string gen_name_;
    std::vector<FieldElement> min_poly_;
    std::vector<std::vector<FieldElement>> powers_;
};

/// The golden-ratio element (1 + r5)/2 of Q(sqrt5).
FieldElement golden_eps();

/// Exact square root within the field, if one exists. Supports Q and
/// quadratic extensions of Q; deeper towers return nullopt.
std::optional<FieldElement> field_sqrt(const FieldElement& x);

}  // namespace bringlab
