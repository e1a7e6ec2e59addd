#pragma once

#include <vector>

#include "fip/linalg.hpp"

namespace fip {

// min c^T x  s.t.  A x = b, x >= 0, with A of size m x n, m < n, rank m.
struct LpProblem {
  Matrix A;
  Vector b;
  Vector c;

  int m() const { return static_cast<int>(A.rows()); }
  int n() const { return static_cast<int>(A.cols()); }
};

// Throws DimensionError / RankError when the problem is malformed.
void validate(const LpProblem& p, double rank_tol = 1e-10);

// min <C, X>  s.t.  <A_i, X> = b_i, X PSD (standard primal form).
struct SdpProblem {
  int n = 0;
  SymMatrix C{1};
  std::vector<SymMatrix> constraints;
  Vector b;

  int m() const { return static_cast<int>(constraints.size()); }

  // m x n^2 matrix with rows vec(A_i)^T.
  Matrix stacked_constraints() const;

  // A vec(X) - b.
  Vector constraint_residual(const SymMatrix& x) const;
  double residual_norm(const SymMatrix& x) const;
};

void validate(const SdpProblem& p, double rank_tol = 1e-10);

}  // namespace fip
