// Acceptance suite: runs every criterion at its pinned precision and prints
// one pass/fail line each. Exit code 0 iff all pass (within their runtime
// budgets).

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <vector>

#include "bringlab/belyi.hpp"
#include "bringlab/certificates.hpp"
#include "bringlab/elliptic.hpp"
#include "bringlab/groebner.hpp"
#include "bringlab/qexp.hpp"
#include "bringlab/quotient.hpp"

using namespace bringlab;

namespace {

const FieldPtr& Q() { return Field::rationals(); }

struct Criterion {
    std::string name;
    double budget_seconds;
    std::function<bool(std::string&)> check;
};

bool run_cert(const char* name, long prec, std::string& note) {
    RunConfig cfg;
    cfg.precision = prec;
    auto reports = run_certificates(name, cfg);
    bool okflag = true;
    for (const auto& r : reports) {
        if (r.status == CertReport::Status::fail) {
            okflag = false;
            note = r.witness.dump();
        }
    }
    return okflag;
}

// --- criterion 10 building blocks, fixed seeds ---

bool engine_properties(std::string& note) {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<long> coeff(-5, 5);

    // field axioms
    for (const FieldPtr& F : {Field::gaussian(), Field::root5(), Field::zeta5()}) {
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<FieldElement> cs;
            for (int i = 0; i < 3 * F->degree(); ++i) cs.push_back(FieldElement(coeff(rng)));
            auto take = [&](int k) {
                std::vector<FieldElement> v(cs.begin() + k * F->degree(),
                                            cs.begin() + (k + 1) * F->degree());
                return FieldElement::from_coords(F, v);
            };
            FieldElement a = take(0), b = take(1), c = take(2);
            if (!((a * b) * c == a * (b * c)) || !(a * (b + c) == a * b + a * c)) {
                note = "field axiom failure over " + F->name();
                return false;
            }
            if (!a.is_zero() && !(a * a.inverse()).is_one()) {
                note = "inverse failure over " + F->name();
                return false;
            }
        }
    }

    // nullspace exactness + rank-nullity
    for (int trial = 0; trial < 12; ++trial) {
        int rows = 2 + static_cast<int>(rng() % 4), cols = 2 + static_cast<int>(rng() % 5);
        ExactMatrix m(rows, cols, Q());
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m.at(i, j) = FieldElement(coeff(rng));
        auto ns = matrix_nullspace(m);
        if (m.rank() + static_cast<int>(ns.size()) != cols) {
            note = "rank-nullity violated";
            return false;
        }
        for (const auto& v : ns)
            for (int i = 0; i < rows; ++i) {
                FieldElement acc = FieldElement::zero(Q());
                for (int j = 0; j < cols; ++j) acc += m.at(i, j) * v[static_cast<std::size_t>(j)];
                if (!acc.is_zero()) {
                    note = "nullspace vector not exact";
                    return false;
                }
            }
    }

    // random small ideals: buchberger output S-polys reduce to zero; the
    // reduced basis is invariant under generator permutation; normal form
    // is idempotent
    VarListPtr v3 = make_vars({"x", "y", "z"});
    auto random_poly = [&]() {
        MultiPoly p = MultiPoly::zero(Q(), v3);
        int terms = 2 + static_cast<int>(rng() % 3);
        for (int t = 0; t < terms; ++t) {
            std::vector<unsigned> e = {static_cast<unsigned>(rng() % 3),
                                       static_cast<unsigned>(rng() % 3),
                                       static_cast<unsigned>(rng() % 2)};
            p.add_term(Monomial(e), FieldElement(coeff(rng)));
        }
        return p;
    };
    auto s_poly = [](const MultiPoly& f, const MultiPoly& g) {
        Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
        return f.mul_term(*l.divide(f.leading_monomial()), g.leading_coeff()) -
               g.mul_term(*l.divide(g.leading_monomial()), f.leading_coeff());
    };
    for (int trial = 0; trial < 8; ++trial) {
        std::vector<MultiPoly> gens;
        for (int k = 0; k < 3; ++k) {
            MultiPoly p = random_poly();
            if (!p.is_zero()) gens.push_back(p);
        }
        if (gens.size() < 2) continue;
        auto basis = buchberger(gens, MonomialOrder::grevlex());
        for (const auto& g : gens)
            if (!normal_form(g, basis, MonomialOrder::grevlex()).is_zero()) {
                note = "generator does not reduce to zero against its basis";
                return false;
            }
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = i + 1; j < basis.size(); ++j)
                if (!normal_form(s_poly(basis[i], basis[j]), basis, MonomialOrder::grevlex())
                         .is_zero()) {
                    note = "S-polynomial of the output basis does not reduce to zero";
                    return false;
                }
        std::vector<MultiPoly> shuffled(gens.rbegin(), gens.rend());
        auto basis2 = buchberger(shuffled, MonomialOrder::grevlex());
        if (basis.size() != basis2.size()) {
            note = "permutation changed the reduced basis";
            return false;
        }
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (!(basis[i] == basis2[i])) {
                note = "permutation changed the reduced basis";
                return false;
            }
        MultiPoly probe = random_poly();
        MultiPoly nf = normal_form(probe, basis, MonomialOrder::grevlex());
        if (!(normal_form(nf, basis, MonomialOrder::grevlex()) == nf)) {
            note = "normal form not idempotent";
            return false;
        }
    }
    return true;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria;

    criteria.push_back({"1. theta-point: sextic vanishes on the theta triple to q^120", 5.0,
                        [](std::string& note) { return run_cert("theta-point", 120, note); }});

    criteria.push_back({"2. cuspform-basis: displayed f- and v-coefficients", 5.0,
                        [](std::string& note) { return run_cert("cuspform-basis", 120, note); }});

    criteria.push_back(
        {"3. canonical-embedding: quadric and cubic recovered, vanish to q^240", 30.0,
         [](std::string& note) { return run_cert("canonical-embedding", 120, note); }});

    criteria.push_back(
        {"4. st-relation: elimination matches, series arbiter resolves the reading", 60.0,
         [](std::string& note) { return run_cert("st-relation", 120, note); }});

    criteria.push_back({"5. x050-maps: both directions verify, roundtrips pass, sextic squarefree",
                        60.0,
                        [](std::string& note) { return run_cert("x050-maps", 120, note); }});

    criteria.push_back(
        {"6. belyi: argument identities, unique (A,B), composition equals j/1728 to q^200",
         300.0, [](std::string& note) {
             if (!run_cert("belyi-arguments", 120, note)) return false;
             return run_cert("jmap-derive", 200, note);
         }});

    criteria.push_back({"7. hc-isomorphism: the plane-sextic map verifies", 60.0,
                        [](std::string& note) { return run_cert("hc-isomorphism", 120, note); }});

    criteria.push_back(
        {"8. quotient-t + degree-audit: invariance, the 21 coefficients, 20 x 6 = 120", 300.0,
         [](std::string& note) {
             if (!run_cert("quotient-t", 120, note)) return false;
             return run_cert("degree-audit", 120, note);
         }});

    criteria.push_back({"9. weierstrass: j-values, both solves, published quadruples", 5.0,
                        [](std::string& note) { return run_cert("weierstrass", 120, note); }});

    criteria.push_back({"10. engine properties under fixed random seeds", 60.0,
                        engine_properties});

    bool all_ok = true;
    for (auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string note;
        bool okflag = false;
        try {
            okflag = c.check(note);
        } catch (const std::exception& e) {
            note = e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_budget = secs < c.budget_seconds;
        bool pass = okflag && in_budget;
        all_ok = all_ok && pass;
        std::printf("[%s] %s (%.2f s / budget %.0f s)\n", pass ? "PASS" : "FAIL",
                    c.name.c_str(), secs, c.budget_seconds);
        if (!okflag && !note.empty()) std::printf("       %s\n", note.substr(0, 400).c_str());
        if (okflag && !in_budget) std::printf("       over budget\n");
        std::fflush(stdout);
    }
    return all_ok ? 0 : 1;
}
