#include "bringlab/groebner.hpp"

#include <algorithm>
#include <list>

namespace bringlab {

namespace {

MultiPoly keep_primitive(const MultiPoly& p) {
    if (p.field()->is_rationals()) return p.normalized_integer();
    return p.monic();
}

/// One full reduction: reduce every term of p by the leading terms of basis.
MultiPoly reduce_full(const MultiPoly& p, const std::vector<MultiPoly>& basis,
                      MonomialOrder order) {
    MultiPoly rem = MultiPoly::zero(p.field(), p.vars(), order);
    MultiPoly cur = p.with_order(order);
    while (!cur.is_zero()) {
        const Monomial& lm = cur.leading_monomial();
        const FieldElement& lc = cur.leading_coeff();
        bool reduced = false;
        for (const MultiPoly& g : basis) {
            if (g.is_zero()) continue;
            auto q = lm.divide(g.leading_monomial());
            if (!q) continue;
            FieldElement factor = lc / g.leading_coeff();
            cur = cur - g.mul_term(*q, factor);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.add_term(lm, lc);
            // drop the leading term and continue with the tail
            MultiPoly head = MultiPoly::zero(p.field(), p.vars(), order);
            head.add_term(lm, lc);
            cur = cur - head;
        }
    }
    return rem;
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g) {
    Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
    Monomial mf = *l.divide(f.leading_monomial());
    Monomial mg = *l.divide(g.leading_monomial());
    return f.mul_term(mf, g.leading_coeff()) - g.mul_term(mg, f.leading_coeff());
}

}  // namespace

MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& basis,
                      MonomialOrder order) {
    std::vector<MultiPoly> b;
    b.reserve(basis.size());
    for (const auto& g : basis) b.push_back(g.with_order(order));
    return reduce_full(p, b, order);
}

std::vector<MultiPoly> buchberger(const std::vector<MultiPoly>& gens, MonomialOrder order,
                                  const GroebnerOptions& opts) {
    std::vector<MultiPoly> basis;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        basis.push_back(keep_primitive(g.with_order(order)));
    }
    if (basis.empty()) return {};

    struct Pair {
        std::size_t i, j;
        Monomial lcm;
        unsigned deg;
    };
    auto pair_less = [](const Pair& a, const Pair& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::vector<Pair> queue;
    auto push_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            Monomial l = Monomial::lcm(basis[i].leading_monomial(), basis[j].leading_monomial());
            queue.push_back({i, j, l, l.total_degree()});
        }
        std::sort(queue.begin(), queue.end(), pair_less);
    };
    for (std::size_t j = 1; j < basis.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) {
            Monomial l = Monomial::lcm(basis[i].leading_monomial(), basis[j].leading_monomial());
            queue.push_back({i, j, l, l.total_degree()});
        }
    std::sort(queue.begin(), queue.end(), pair_less);

    long treated = 0;
    while (!queue.empty()) {
        Pair pr = queue.front();
        queue.erase(queue.begin());
        if (++treated > opts.pair_cap)
            throw ResourceLimit("buchberger: pair cap " + std::to_string(opts.pair_cap) +
                                " exceeded");
        const MultiPoly& f = basis[pr.i];
        const MultiPoly& g = basis[pr.j];
        // coprimality criterion
        if (f.leading_monomial().coprime_with(g.leading_monomial())) continue;
        // chain criterion: some other basis element's lead divides the lcm
        // and both its pairs with (i, j) have already left the queue
        bool chained = false;
        for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!basis[k].leading_monomial().divides(pr.lcm)) continue;
            auto in_queue = [&](std::size_t a, std::size_t b) {
                if (a > b) std::swap(a, b);
                for (const Pair& p2 : queue)
                    if (p2.i == a && p2.j == b) return true;
                return false;
            };
            if (!in_queue(pr.i, k) && !in_queue(pr.j, k)) chained = true;
        }
        if (chained) continue;
        MultiPoly s = s_polynomial(f, g);
        MultiPoly r = reduce_full(s, basis, order);
        if (r.is_zero()) continue;
        basis.push_back(keep_primitive(r));
        push_pairs(basis.size() - 1);
    }

    // interreduce to the unique reduced basis
    std::vector<MultiPoly> reduced;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        // discard if another surviving lead divides this lead
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            if (!basis[j].leading_monomial().divides(basis[i].leading_monomial())) continue;
            if (basis[j].leading_monomial() == basis[i].leading_monomial() && j > i) continue;
            redundant = true;
            break;
        }
        if (!redundant) reduced.push_back(basis[i]);
    }
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        std::vector<MultiPoly> others;
        for (std::size_t j = 0; j < reduced.size(); ++j)
            if (j != i) others.push_back(reduced[j]);
        reduced[i] = reduce_full(reduced[i], others, order).monic();
    }
    reduced.erase(std::remove_if(reduced.begin(), reduced.end(),
                                 [](const MultiPoly& p) { return p.is_zero(); }),
                  reduced.end());
    std::sort(reduced.begin(), reduced.end(), [&](const MultiPoly& a, const MultiPoly& b) {
        return order.compare(a.leading_monomial(), b.leading_monomial()) > 0;
    });
    return reduced;
}

const std::vector<MultiPoly>& groebner_basis(const Ideal& ideal, MonomialOrder order,
                                             const GroebnerOptions& opts) {
    if (ideal.groebner_cache && ideal.groebner_cache->second == order)
        return ideal.groebner_cache->first;
    ideal.groebner_cache = {buchberger(ideal.generators, order, opts), order};
    return ideal.groebner_cache->first;
}

bool ideal_contains(const Ideal& ideal, const MultiPoly& p, MonomialOrder order,
                    const GroebnerOptions& opts) {
    const auto& gb = groebner_basis(ideal, order, opts);
    return normal_form(p, gb, order).is_zero();
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& drop_vars,
                const GroebnerOptions& opts) {
    if (ideal.generators.empty()) return Ideal{};
    const VarListPtr& vars = ideal.generators[0].vars();
    const FieldPtr& field = ideal.generators[0].field();
    // reorder variables: dropped ones first
    std::vector<std::string> front, back;
    for (const auto& v : *vars) {
        if (std::find(drop_vars.begin(), drop_vars.end(), v) != drop_vars.end())
            front.push_back(v);
        else
            back.push_back(v);
    }
    if (front.size() != drop_vars.size())
        throw Error("eliminate: some drop variables not present");
    std::vector<std::string> arranged = front;
    arranged.insert(arranged.end(), back.begin(), back.end());
    VarListPtr avars = make_vars(arranged);
    MonomialOrder block = MonomialOrder::block(front.size());
    std::vector<MultiPoly> gens;
    for (const auto& g : ideal.generators) gens.push_back(g.with_vars(avars).with_order(block));
    std::vector<MultiPoly> gb = buchberger(gens, block, opts);
    VarListPtr kept = make_vars(back);
    Ideal out;
    for (const auto& g : gb) {
        bool free = true;
        for (std::size_t i = 0; i < front.size(); ++i)
            if (g.uses_var(i)) { free = false; break; }
        if (free) out.generators.push_back(g.with_vars(kept).with_order(MonomialOrder::grevlex()));
    }
    std::sort(out.generators.begin(), out.generators.end(),
              [](const MultiPoly& a, const MultiPoly& b) {
                  if (a.total_degree() != b.total_degree())
                      return a.total_degree() < b.total_degree();
                  return a.str() < b.str();
              });
    return out;
}

}  // namespace bringlab
