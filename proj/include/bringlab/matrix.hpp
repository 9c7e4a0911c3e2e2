#pragma once

#include <vector>

#include "bringlab/field.hpp"

namespace bringlab {

/// Dense matrix over a single exact field.
class ExactMatrix {
  public:
    ExactMatrix(int rows, int cols, const FieldPtr& field);
    static ExactMatrix identity(int n, const FieldPtr& field);
    static ExactMatrix from_rows(const FieldPtr& field,
                                 const std::vector<std::vector<FieldElement>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldPtr& field() const { return field_; }

    FieldElement& at(int r, int c) { return e_[static_cast<std::size_t>(r * cols_ + c)]; }
    const FieldElement& at(int r, int c) const { return e_[static_cast<std::size_t>(r * cols_ + c)]; }

    ExactMatrix operator*(const ExactMatrix& o) const;
    bool operator==(const ExactMatrix& o) const;

    /// Reduced row echelon form; returns the pivot column list.
    std::vector<int> rref();
    int rank() const;

  private:
    int rows_, cols_;
    FieldPtr field_;
    std::vector<FieldElement> e_;
};

/// Basis of the right nullspace in reduced echelon form, ordered by free
/// column. Each vector is scaled so its first nonzero entry is 1 and, over Q,
/// cleared to coprime integer coordinates. Empty list for a trivial nullspace.
std::vector<std::vector<FieldElement>> matrix_nullspace(const ExactMatrix& m);

/// Exact inverse; throws Singular when the determinant vanishes.
ExactMatrix matrix_inverse(const ExactMatrix& m);

/// Solves M x = b. Returns {} if inconsistent; `kernel_dim` reports the
/// solution-space dimension (0 = unique).
std::vector<FieldElement> matrix_solve(const ExactMatrix& m,
                                       const std::vector<FieldElement>& b,
                                       int& kernel_dim);

/// Scales a Q-vector so the first nonzero entry is positive and all entries
/// are coprime integers; identity on non-rational fields beyond the leading-1
/// normalization.
std::vector<FieldElement> integer_clear(std::vector<FieldElement> v);

}  // namespace bringlab
