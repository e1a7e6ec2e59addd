#include "fip/centering.hpp"

#include <string>

namespace fip {

CenteringResult geometric_center(const SymMatrix& x, const Matrix& M_xi) {
  const int n = x.n();
  if (M_xi.cols() > 0 && M_xi.rows() != static_cast<Eigen::Index>(n) * n)
    throw DimensionError("geometric_center: basis row count != n^2");

  CenteringResult res{x, 0.0, inverse_fro_norm(x), 0.0};
  if (M_xi.cols() == 0) {
    res.inv_norm_after = res.inv_norm_before;
    return res;
  }

  Matrix correction = Matrix::Zero(n, n);
  for (Eigen::Index j = 0; j < M_xi.cols(); ++j) {
    const SymMatrix dir = symmetrize(mat(M_xi.col(j), n));
    const Steplength up = max_steplength(x, dir, StepSign::Plus);
    const Steplength down = max_steplength(x, dir, StepSign::Minus);
    if (!up.is_finite() || !down.is_finite())
      throw UnboundedFreedomError(
          "geometric_center: freedom column " + std::to_string(j) +
          " has an infinite one-sided steplength");
    correction += 0.5 * (up.value() - down.value()) * dir.mat();
  }

  res.X_centered = x + symmetrize(correction);
  res.correction_norm = correction.norm();
  if (!is_positive_definite(res.X_centered))
    throw CenteringError("geometric_center: centered matrix is not PD");
  res.inv_norm_after = inverse_fro_norm(res.X_centered);
  return res;
}

CenteringResult algebraic_center(const SymMatrix& x, const Matrix& M_xi,
                                 double mu) {
  const int n = x.n();
  if (M_xi.cols() == 0)
    throw NoFreedomError("algebraic_center: no freedom directions");
  if (M_xi.rows() != static_cast<Eigen::Index>(n) * n)
    throw DimensionError("algebraic_center: basis row count != n^2");

  const SymMatrix xinv = sym_inverse(x);
  CenteringResult res{x, 0.0, fro_norm(xinv), 0.0};

  const Eigen::Index nn = static_cast<Eigen::Index>(n) * n;
  Matrix sys(nn, M_xi.cols() + nn);
  sys << identity_kron(xinv.mat()) * M_xi, identity_kron(x.mat());
  const Vector rhs = (1.0 - mu) * vec(xinv);
  const Vector sol = min_norm_least_squares(sys, rhs);

  SymMatrix correction = symmetrize(mat(M_xi * sol.head(M_xi.cols()), n));
  double factor = 1.0;
  for (int halvings = 0;; ++halvings) {
    SymMatrix candidate = x + factor * correction;
    if (is_positive_definite(candidate)) {
      res.X_centered = candidate;
      break;
    }
    if (halvings >= 30)
      throw CenteringError(
          "algebraic_center: correction not PD after 30 halvings");
    factor *= 0.5;
  }
  res.correction_norm = factor * fro_norm(correction);
  res.inv_norm_after = inverse_fro_norm(res.X_centered);
  return res;
}

}  // namespace fip
