#include "fip/problem.hpp"

#include <Eigen/SVD>

namespace fip {

namespace {

int numeric_rank(const Matrix& a, double tol) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(a);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) <= 0.0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > tol * sv(0)) ++r;
  return r;
}

}  // namespace

void validate(const LpProblem& p, double rank_tol) {
  if (p.b.size() != p.m())
    throw DimensionError("LpProblem: b length does not match row count");
  if (p.c.size() != p.n())
    throw DimensionError("LpProblem: c length does not match column count");
  if (p.m() >= p.n())
    throw DimensionError("LpProblem: requires m < n");
  const int r = numeric_rank(p.A, rank_tol);
  if (r < p.m())
    throw RankError("LpProblem: A is rank deficient by " +
                    std::to_string(p.m() - r) + " row(s)");
}

Matrix SdpProblem::stacked_constraints() const {
  Matrix a(m(), static_cast<Eigen::Index>(n) * n);
  for (int i = 0; i < m(); ++i) a.row(i) = vec(constraints[i]).transpose();
  return a;
}

Vector SdpProblem::constraint_residual(const SymMatrix& x) const {
  Vector r(m());
  for (int i = 0; i < m(); ++i) r(i) = trace_inner(constraints[i], x) - b(i);
  return r;
}

double SdpProblem::residual_norm(const SymMatrix& x) const {
  return constraint_residual(x).norm();
}

void validate(const SdpProblem& p, double rank_tol) {
  if (p.n < 1) throw DimensionError("SdpProblem: n must be >= 1");
  if (p.C.n() != p.n)
    throw DimensionError("SdpProblem: objective dimension mismatch");
  for (const auto& a : p.constraints)
    if (a.n() != p.n)
      throw DimensionError("SdpProblem: constraint dimension mismatch");
  if (p.b.size() != p.m())
    throw DimensionError("SdpProblem: b length does not match m");
  const int r = numeric_rank(p.stacked_constraints(), rank_tol);
  if (r < p.m())
    throw RankError("SdpProblem: constraints are rank deficient by " +
                    std::to_string(p.m() - r) + " row(s)");
}

}  // namespace fip
