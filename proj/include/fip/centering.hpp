#pragma once

#include "fip/linalg.hpp"

namespace fip {

struct CenteringResult {
  SymMatrix X_centered;
  double correction_norm = 0.0;
  double inv_norm_before = 0.0;
  double inv_norm_after = 0.0;
};

// Geometric centering: X + (1/2) sum_j (a+_j - a-_j) X_j over the freedom
// columns X_j of M_xi, with a+/- the one-sided maximal steplengths at X.
// Throws UnboundedFreedomError when either steplength is infinite for some
// column. M_xi with zero columns returns X unchanged.
CenteringResult geometric_center(const SymMatrix& x, const Matrix& M_xi);

// One linearized least-squares centering step within span(M_xi):
// solve [ (I (x) X^-1) M_xi , I (x) X ] [xhat; dxt] = (1-mu) vec(X^-1)
// and apply the symmetrized correction mat(M_xi xhat). mu = 1 leaves X
// unchanged. If the corrected matrix is not PD the correction is halved,
// at most 30 times, before giving up. Throws NoFreedomError when M_xi has
// no columns.
CenteringResult algebraic_center(const SymMatrix& x, const Matrix& M_xi,
                                 double mu);

}  // namespace fip
