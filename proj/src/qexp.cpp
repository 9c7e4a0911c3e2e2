#include "bringlab/qexp.hpp"

namespace bringlab {

LaurentSeries theta_series(int residue_class, long prec) {
    if (residue_class < 0 || residue_class > 2) throw Error("residue class must be 0, 1 or 2");
    if (prec < 1) throw Error("theta_series needs prec >= 1");
    const FieldPtr& Q = Field::rationals();
    std::map<long, long> terms;
    for (long n = 0;; ++n) {
        bool any = false;
        std::vector<long> ms = {5 * n + residue_class};
        if (n > 0) ms.push_back(-5 * n + residue_class);
        for (long m : ms) {
            long e = m * m;
            if (e < prec) {
                any = true;
                terms[e] += (e % 2 == 0) ? 1 : -1;
            }
        }
        if (!any && n > 0) break;
    }
    if (terms.empty()) return LaurentSeries::zero(Q, prec);
    long val = terms.begin()->first;
    std::vector<FieldElement> c(static_cast<std::size_t>(prec - val), FieldElement::zero(Q));
    for (auto& [e, k] : terms) c[static_cast<std::size_t>(e - val)] = FieldElement(k);
    return LaurentSeries(Q, val, std::move(c), prec);
}

SeriesTuple theta_point(long prec) {
    return SeriesTuple({"x1", "y1", "z1"},
                       {theta_series(0, prec), theta_series(1, prec), theta_series(2, prec)});
}

ExactMatrix hc_basis_matrix() {
    const FieldPtr& Q = Field::rationals();
    auto r = [](long n, long d) { return FieldElement(Rational(n, d)); };
    return ExactMatrix::from_rows(Q, {
        {r(-1, 4), r(-1, 4), r(-1, 4), r(-1, 4)},
        {r(1, 4), r(1, 4), r(-1, 4), r(-1, 4)},
        {r(0, 1), r(0, 1), r(1, 2), r(-1, 2)},
        {r(-1, 2), r(1, 2), r(0, 1), r(0, 1)},
    });
}

SeriesTuple hc_differentials(long prec) {
    const long headroom = 24;
    const long work = prec + headroom;
    LaurentSeries x1 = theta_series(0, work);
    LaurentSeries y1 = theta_series(1, work);
    LaurentSeries z1 = theta_series(2, work);
    LaurentSeries X = x1 / z1;
    LaurentSeries Y = y1 / z1;
    // F_Y(X, Y, 1) for F = x(y^5+z^5) + x^2 y^2 z^2 - x^4 y z - 2 y^3 z^3
    LaurentSeries FY = X.scale(FieldElement(5)) * Y.pow(4) + X.pow(2) * Y.scale(FieldElement(2))
                     - X.pow(4) - Y.pow(2).scale(FieldElement(6));
    LaurentSeries dX = X.derivative();
    const FieldPtr& Q = Field::rationals();
    LaurentSeries minus_q = LaurentSeries::q_power(Q, 1, work).scale(FieldElement(-1));
    std::vector<LaurentSeries> weights = {
        Y.pow(3) - X,
        Y.pow(2) * X - LaurentSeries::constant(FieldElement::one(Q), work),
        Y - X.pow(2),
        Y * (X.pow(2) - Y),
    };
    std::vector<LaurentSeries> vs;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        LaurentSeries vi = minus_q * ((weights[i] * dX) / FY);
        if (vi.precision() < prec)
            throw InsufficientPrecision("differential v" + std::to_string(i + 1) +
                                        " justified only to O(q^" + std::to_string(vi.precision()) +
                                        "), requested " + std::to_string(prec));
        if (vi.valuation() < 1) throw Error("differential v" + std::to_string(i + 1) + " not holomorphic");
        vs.push_back(vi.truncate(prec));
        names.push_back("v" + std::to_string(i + 1));
    }
    return SeriesTuple(std::move(names), std::move(vs));
}

SeriesTuple cuspform_basis(long prec) {
    SeriesTuple v = hc_differentials(prec);
    ExactMatrix Ainv = matrix_inverse(hc_basis_matrix());
    std::vector<LaurentSeries> fs;
    for (int j = 0; j < 4; ++j) {
        LaurentSeries fj = LaurentSeries::zero(v.field(), prec);
        for (int i = 0; i < 4; ++i) {
            if (Ainv.at(i, j).is_zero()) continue;
            fj = fj + v.at(static_cast<std::size_t>(i)).scale(Ainv.at(i, j));
        }
        if (fj.valuation() < 1) throw Error("cusp form f" + std::to_string(j + 1) + " not cuspidal");
        fs.push_back(fj);
    }
    return SeriesTuple({"x", "y", "z", "w"}, std::move(fs));
}

LaurentSeries delta_series(long prec) {
    const FieldPtr& Q = Field::rationals();
    // eta-without-q^{1/24}: sum_k (-1)^k q^{k(3k-1)/2}
    std::vector<FieldElement> e(static_cast<std::size_t>(std::max<long>(prec, 1)),
                                FieldElement::zero(Q));
    for (long k = 0;; ++k) {
        bool any = false;
        std::vector<long> ks = {k};
        if (k > 0) ks.push_back(-k);
        for (long kk : ks) {
            long ex = kk * (3 * kk - 1) / 2;
            if (ex < prec) {
                any = true;
                e[static_cast<std::size_t>(ex)] += FieldElement((kk % 2 == 0) ? 1L : -1L);
            }
        }
        if (!any && k > 0) break;
    }
    LaurentSeries eta(Q, 0, std::move(e), prec);
    return eta.pow(24).shift(1).truncate(prec + 1);
}

LaurentSeries eisenstein_e4(long prec) {
    const FieldPtr& Q = Field::rationals();
    std::vector<FieldElement> c(static_cast<std::size_t>(std::max<long>(prec, 1)),
                                FieldElement::zero(Q));
    c[0] = FieldElement(1);
    // 1 + 240 sum sigma_3(n) q^n via divisor sieve
    std::vector<mpz_class> sigma(static_cast<std::size_t>(std::max<long>(prec, 1)), 0);
    for (long d = 1; d < prec; ++d) {
        mpz_class d3 = mpz_class(d) * d * d;
        for (long n = d; n < prec; n += d) sigma[static_cast<std::size_t>(n)] += d3;
    }
    for (long n = 1; n < prec; ++n)
        c[static_cast<std::size_t>(n)] =
            FieldElement(Rational(mpz_class(240 * sigma[static_cast<std::size_t>(n)])));
    return LaurentSeries(Q, 0, std::move(c), prec);
}

LaurentSeries j_series(long prec) {
    long work = std::max<long>(prec + 3, 4);
    LaurentSeries e4 = eisenstein_e4(work);
    LaurentSeries num = e4.pow(3);
    return (num / delta_series(work)).truncate(prec);
}

}  // namespace bringlab
