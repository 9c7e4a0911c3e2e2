#pragma once

#include "bringlab/poly.hpp"

namespace bringlab {

struct GroebnerOptions {
    /// Abort with ResourceLimit after this many treated S-pairs.
    long pair_cap = 200000;
};

/// Buchberger's algorithm with the normal pair-selection strategy and the
/// coprimality and chain criteria. Returns the unique reduced Groebner basis
/// (monic leading coefficients, pairwise reduced, sorted by leading monomial,
/// greatest first). Intermediate polynomials over Q are kept primitive to
/// control coefficient growth.
std::vector<MultiPoly> buchberger(const std::vector<MultiPoly>& gens, MonomialOrder order,
                                  const GroebnerOptions& opts = {});

/// Full multivariate division remainder; unique when `basis` is a Groebner
/// basis for the order.
MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& basis,
                      MonomialOrder order);

/// Ideal membership via a cached reduced basis (grevlex).
bool ideal_contains(const Ideal& ideal, const MultiPoly& p, MonomialOrder order,
                    const GroebnerOptions& opts = {});

const std::vector<MultiPoly>& groebner_basis(const Ideal& ideal, MonomialOrder order,
                                             const GroebnerOptions& opts = {});

/// Elimination ideal: drops the named variables via a block order that
/// ranks them first, then keeps only basis members free of them. The result
/// is expressed over the remaining variable list, generators sorted
/// deterministically.
Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& drop_vars,
                const GroebnerOptions& opts = {});

}  // namespace bringlab
