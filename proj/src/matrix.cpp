#include "bringlab/matrix.hpp"

namespace bringlab {

ExactMatrix::ExactMatrix(int rows, int cols, const FieldPtr& field)
    : rows_(rows), cols_(cols), field_(field),
      e_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
         FieldElement::zero(field)) {}

ExactMatrix ExactMatrix::identity(int n, const FieldPtr& field) {
    ExactMatrix m(n, n, field);
    for (int i = 0; i < n; ++i) m.at(i, i) = FieldElement::one(field);
    return m;
}

ExactMatrix ExactMatrix::from_rows(const FieldPtr& field,
                                   const std::vector<std::vector<FieldElement>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    ExactMatrix m(r, c, field);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
            throw Error("ragged rows");
        for (int j = 0; j < c; ++j)
            m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].promote_to(field);
    }
    return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (cols_ != o.rows_) throw Error("dimension mismatch in matrix product");
    ExactMatrix r(rows_, o.cols_, field_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const FieldElement& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) += a * o.at(k, j);
            }
        }
    return r;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != o.at(i, j)) return false;
    return true;
}

std::vector<int> ExactMatrix::rref() {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int pr = -1;
        for (int i = r; i < rows_; ++i)
            if (!at(i, c).is_zero()) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < cols_; ++j) std::swap(at(r, j), at(pr, j));
        FieldElement inv = at(r, c).inverse();
        for (int j = c; j < cols_; ++j) at(r, j) *= inv;
        for (int i = 0; i < rows_; ++i) {
            if (i == r || at(i, c).is_zero()) continue;
            FieldElement f = at(i, c);
            for (int j = c; j < cols_; ++j) at(i, j) -= f * at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int ExactMatrix::rank() const {
    ExactMatrix m = *this;
    return static_cast<int>(m.rref().size());
}

std::vector<FieldElement> integer_clear(std::vector<FieldElement> v) {
    bool rational = true;
    for (const auto& e : v)
        if (!e.in_rationals()) { rational = false; break; }
    if (!rational) return v;
    mpz_class den(1), num(0);
    for (const auto& e : v) {
        den = lcm(den, e.as_rational().den());
        num = gcd(num, e.as_rational().num());
    }
    if (num == 0) return v;
    Rational scale(den, num);
    int lead_sign = 0;
    for (const auto& e : v)
        if (!e.is_zero()) { lead_sign = (e.as_rational() * scale).sign(); break; }
    if (lead_sign < 0) scale = -scale;
    for (auto& e : v) e = FieldElement(e.as_rational() * scale);
    return v;
}

std::vector<std::vector<FieldElement>> matrix_nullspace(const ExactMatrix& m) {
    ExactMatrix r = m;
    std::vector<int> pivots = r.rref();
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<FieldElement>> basis;
    for (int fc = 0; fc < m.cols(); ++fc) {
        if (is_pivot[static_cast<std::size_t>(fc)]) continue;
        std::vector<FieldElement> v(static_cast<std::size_t>(m.cols()),
                                    FieldElement::zero(m.field()));
        v[static_cast<std::size_t>(fc)] = FieldElement::one(m.field());
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[static_cast<std::size_t>(pivots[i])] = -r.at(static_cast<int>(i), fc);
        // first nonzero entry to 1, then clear to coprime integers over Q
        for (const auto& e : v) {
            if (e.is_zero()) continue;
            FieldElement inv = e.inverse();
            for (auto& x : v) x *= inv;
            break;
        }
        basis.push_back(integer_clear(std::move(v)));
    }
    return basis;
}

ExactMatrix matrix_inverse(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw Error("inverse of non-square matrix");
    int n = m.rows();
    ExactMatrix aug(n, 2 * n, m.field());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = FieldElement::one(m.field());
    }
    std::vector<int> pivots = aug.rref();
    if (static_cast<int>(pivots.size()) != n || pivots.back() >= n)
        throw Singular("matrix is singular");
    ExactMatrix inv(n, n, m.field());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

std::vector<FieldElement> matrix_solve(const ExactMatrix& m,
                                       const std::vector<FieldElement>& b,
                                       int& kernel_dim) {
    if (static_cast<int>(b.size()) != m.rows()) throw Error("rhs size mismatch");
    ExactMatrix aug(m.rows(), m.cols() + 1, m.field());
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[static_cast<std::size_t>(i)].promote_to(m.field());
    }
    std::vector<int> pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == m.cols()) {
        kernel_dim = -1;  // inconsistent
        return {};
    }
    kernel_dim = m.cols() - static_cast<int>(pivots.size());
    std::vector<FieldElement> x(static_cast<std::size_t>(m.cols()),
                                FieldElement::zero(m.field()));
    for (std::size_t i = 0; i < pivots.size(); ++i)
        x[static_cast<std::size_t>(pivots[i])] = aug.at(static_cast<int>(i), m.cols());
    return x;
}

}  // namespace bringlab
