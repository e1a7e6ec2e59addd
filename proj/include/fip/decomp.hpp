#pragma once

#include "fip/problem.hpp"

namespace fip {

// Orthonormal split of the n x n matrix space relative to a problem:
// M_xi  - symmetric constraint-null directions orthogonal to the objective
//         ("degrees of freedom"),
// M_eta - symmetric constraint-null directions with an objective component
//         ("minimization directions"),
// M_nu  - antisymmetric directions.
// Columns are vec'd matrices; all columns are mutually orthonormal.
struct Decomposition {
  int n = 0;
  Matrix M_xi;
  Matrix M_eta;
  Matrix M_nu;

  int m_xi() const { return static_cast<int>(M_xi.cols()); }
  int m_eta() const { return static_cast<int>(M_eta.cols()); }
  int m_nu() const { return static_cast<int>(M_nu.cols()); }

  // [M_xi, M_eta]
  Matrix symmetric_basis() const;
  // [M_xi, M_eta, M_nu]
  Matrix full_basis() const;
};

// Orthonormal chart of symmetric matrices: n^2 x n(n+1)/2, columns
// vec(e_ii) and vec((e_ij + e_ji)/sqrt(2)) in column-major lower-triangle
// order.
Matrix sym_basis(int n);

// Orthonormal antisymmetric basis: columns vec((e_ij - e_ji)/sqrt(2)) for
// i < j in lexicographic order, n^2 x n(n-1)/2.
Matrix nonsym_basis(int n);

// Null space of the stacked constraints within the symmetric subspace,
// classified per basis vector: |<C, v>| > tol * ||C||_F puts v into M_eta,
// otherwise M_xi. Throws RankError when the constraints are rank deficient.
Decomposition decompose(const SdpProblem& p, double tol = 1e-10);

}  // namespace fip
