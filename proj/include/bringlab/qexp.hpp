#pragma once

#include "bringlab/matrix.hpp"
#include "bringlab/series.hpp"

namespace bringlab {

/// Theta series sum_{n in Z} (-q)^{(5n+r)^2} for residue class r in {0,1,2},
/// truncated at prec. A term of exponent e contributes with sign (-1)^e.
LaurentSeries theta_series(int residue_class, long prec);

/// The level-50 plane-sextic parametrization point (x1, y1, z1) as a series
/// tuple at the given precision.
SeriesTuple theta_point(long prec);

/// The 4x4 change-of-basis matrix between the sextic-model differentials and
/// the weight-2 cusp form basis.
ExactMatrix hc_basis_matrix();

/// The four pulled-back holomorphic differentials v_i/dq on the plane sextic
/// model, as power series of valuation >= 1. Computed from X = x1/z1,
/// Y = y1/z1 as v_i = -q * w_i X' / F_Y(X,Y,1) with weights
/// w_1 = Y^3-X, w_2 = Y^2 X-1, w_3 = Y-X^2, w_4 = Y(X^2-Y); the -q factor
/// converts d/dq to the normalization of the weight-2 q-expansions.
/// Throws InsufficientPrecision if cancellation eats the requested order.
SeriesTuple hc_differentials(long prec);

/// The cusp form basis (f1, f2, f3, f4) = (v1..v4) A^{-1}; all four are
/// power series of valuation >= 1 with integer coefficients.
SeriesTuple cuspform_basis(long prec);

/// Klein j-function q-expansion via E4^3 / Delta.
LaurentSeries j_series(long prec);

/// Delta = q prod (1-q^n)^24 via the pentagonal number expansion of eta.
LaurentSeries delta_series(long prec);

LaurentSeries eisenstein_e4(long prec);

}  // namespace bringlab
