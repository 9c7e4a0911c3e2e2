#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bringlab/field.hpp"
#include "bringlab/series.hpp"

namespace bringlab {

using VarList = std::vector<std::string>;
using VarListPtr = std::shared_ptr<const VarList>;

VarListPtr make_vars(std::initializer_list<const char*> names);
VarListPtr make_vars(const std::vector<std::string>& names);

/// Exponent vector over a fixed ordered variable list.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(std::vector<unsigned> exps);

    unsigned exp(std::size_t i) const { return i < e_.size() ? e_[i] : 0u; }
    const std::vector<unsigned>& exps() const { return e_; }
    unsigned total_degree() const { return deg_; }
    bool is_constant() const { return deg_ == 0; }

    Monomial operator*(const Monomial& o) const;
    /// Divides exactly; nullopt if any exponent would go negative.
    std::optional<Monomial> divide(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);
    bool coprime_with(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return e_ == o.e_; }

  private:
    std::vector<unsigned> e_;
    unsigned deg_ = 0;
};

/// Total order on monomials compatible with multiplication. The block kind
/// compares the first `elim` variables lexicographically, then the rest by
/// grevlex; it is an elimination order for those leading variables.
struct MonomialOrder {
    enum class Kind { lex, grevlex, block };
    Kind kind = Kind::grevlex;
    std::size_t elim = 0;

    static MonomialOrder lex() { return {Kind::lex, 0}; }
    static MonomialOrder grevlex() { return {Kind::grevlex, 0}; }
    static MonomialOrder block(std::size_t elim_vars) { return {Kind::block, elim_vars}; }

    /// <0, 0, >0 for a < b, a == b, a > b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    std::string str() const;
    bool operator==(const MonomialOrder& o) const { return kind == o.kind && elim == o.elim; }
};

/// Sparse multivariate polynomial over an exact field with an active
/// monomial order. Terms iterate greatest-first; no zero coefficients are
/// stored.
class MultiPoly {
  public:
    MultiPoly();  // zero over Q, no variables
    MultiPoly(const FieldPtr& field, const VarListPtr& vars,
              MonomialOrder order = MonomialOrder::grevlex());

    static MultiPoly zero(const FieldPtr& f, const VarListPtr& vars,
                          MonomialOrder order = MonomialOrder::grevlex());
    static MultiPoly constant(const FieldPtr& f, const VarListPtr& vars, const FieldElement& c,
                              MonomialOrder order = MonomialOrder::grevlex());
    static MultiPoly variable(const FieldPtr& f, const VarListPtr& vars, std::size_t index,
                              MonomialOrder order = MonomialOrder::grevlex());

    const FieldPtr& field() const { return field_; }
    const VarListPtr& vars() const { return vars_; }
    const MonomialOrder& order() const { return order_; }

    struct MonoGreater {
        MonomialOrder order;
        bool operator()(const Monomial& a, const Monomial& b) const {
            return order.compare(a, b) > 0;
        }
    };
    using TermMap = std::map<Monomial, FieldElement, MonoGreater>;

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    /// Greatest-first iteration.
    const TermMap& terms() const { return terms_; }

    const Monomial& leading_monomial() const;
    const FieldElement& leading_coeff() const;
    /// Trailing (least) term in the active order.
    const Monomial& trailing_monomial() const;
    const FieldElement& trailing_coeff() const;
    FieldElement coeff(const Monomial& m) const;
    int total_degree() const;  // -1 for zero
    /// Max exponent of variable i across terms.
    unsigned degree_in(std::size_t i) const;
    bool is_homogeneous() const;
    bool uses_var(std::size_t i) const;

    void add_term(const Monomial& m, const FieldElement& c);

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly scale(const FieldElement& k) const;
    MultiPoly mul_term(const Monomial& m, const FieldElement& c) const;
    MultiPoly pow(unsigned e) const;
    bool operator==(const MultiPoly& o) const;

    MultiPoly derivative(std::size_t var) const;

    /// Rebuilds the term map under a different order (same variables).
    MultiPoly with_order(MonomialOrder order) const;
    /// Re-expresses over a different variable list; every used variable must
    /// be present in the new list.
    MultiPoly with_vars(const VarListPtr& new_vars) const;

    /// Monic in the leading coefficient.
    MultiPoly monic() const;
    /// Over Q: primitive integer coefficients with positive leading
    /// coefficient; other fields: monic.
    MultiPoly normalized_integer() const;
    /// Scaled so the trailing coefficient is 1 (requires invertible trailing).
    MultiPoly normalized_trailing_one() const;
    /// True if p == scale * o for a nonzero field scalar.
    bool equal_up_to_unit(const MultiPoly& o) const;

    /// Substitute polynomials for variables (parallel substitution).
    MultiPoly substitute(const std::vector<MultiPoly>& images) const;
    /// Evaluate each variable at a Laurent series.
    LaurentSeries eval_series(const std::vector<LaurentSeries>& point) const;
    /// Evaluate at field elements.
    FieldElement eval(const std::vector<FieldElement>& point) const;

    /// Dense univariate view; requires at most one used variable.
    UPoly to_upoly(std::size_t var) const;
    static MultiPoly from_upoly(const UPoly& p, const VarListPtr& vars, std::size_t var,
                                MonomialOrder order = MonomialOrder::grevlex());

    std::string str() const;

  private:
    FieldPtr field_;
    VarListPtr vars_;
    MonomialOrder order_;
    TermMap terms_;
};

/// Parses the polynomial grammar: terms joined by + and -; a term is
/// [rational coefficient][*]{var[^exp]}*; parentheses around sums allowed.
/// Extension-field generator names appearing in `vars`'s field are accepted
/// as coefficients via the optional generator table.
MultiPoly parse_poly(const std::string& text, const VarListPtr& vars, const FieldPtr& field,
                     MonomialOrder order = MonomialOrder::grevlex());

/// Generator symbols usable inside parsed polynomials for a field tower,
/// e.g. {"r5": sqrt5, "eps": (1+sqrt5)/2}.
MultiPoly parse_poly_ext(const std::string& text, const VarListPtr& vars, const FieldPtr& field,
                         const std::vector<std::pair<std::string, FieldElement>>& consts,
                         MonomialOrder order = MonomialOrder::grevlex());

struct Ideal {
    std::vector<MultiPoly> generators;
    /// Reduced Groebner basis cache with the order it was computed under.
    mutable std::optional<std::pair<std::vector<MultiPoly>, MonomialOrder>> groebner_cache;
};

}  // namespace bringlab
