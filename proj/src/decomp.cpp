#include "fip/decomp.hpp"

#include <Eigen/SVD>
#include <cmath>

namespace fip {

Matrix Decomposition::symmetric_basis() const {
  Matrix m(static_cast<Eigen::Index>(n) * n, m_xi() + m_eta());
  m << M_xi, M_eta;
  return m;
}

Matrix Decomposition::full_basis() const {
  Matrix m(static_cast<Eigen::Index>(n) * n, m_xi() + m_eta() + m_nu());
  m << M_xi, M_eta, M_nu;
  return m;
}

Matrix sym_basis(int n) {
  if (n < 1) throw DimensionError("sym_basis: n must be >= 1");
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  Matrix s = Matrix::Zero(static_cast<Eigen::Index>(n) * n, n * (n + 1) / 2);
  int col = 0;
  for (int j = 0; j < n; ++j) {
    for (int i = j; i < n; ++i) {
      if (i == j) {
        s(j * n + j, col) = 1.0;
      } else {
        s(j * n + i, col) = inv_sqrt2;
        s(i * n + j, col) = inv_sqrt2;
      }
      ++col;
    }
  }
  return s;
}

Matrix nonsym_basis(int n) {
  if (n < 1) throw DimensionError("nonsym_basis: n must be >= 1");
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  Matrix b = Matrix::Zero(static_cast<Eigen::Index>(n) * n, n * (n - 1) / 2);
  int col = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      b(j * n + i, col) = inv_sqrt2;   // entry (i, j)
      b(i * n + j, col) = -inv_sqrt2;  // entry (j, i)
      ++col;
    }
  }
  return b;
}

namespace {

// Orthonormal basis of the null space of abar (in chart coordinates),
// aligned deterministically: chart axes are projected onto the null space
// in coordinate order and kept greedily. This keeps basis vectors axis-
// aligned where the null space allows it, which is what makes the
// per-vector objective classification reproducible.
Matrix aligned_null_basis(const Matrix& abar, int null_dim, double tol) {
  const Eigen::Index s = abar.cols();
  Matrix v_null;
  if (abar.rows() == 0) {
    v_null = Matrix::Identity(s, s);
  } else {
    Eigen::JacobiSVD<Matrix> svd(abar, Eigen::ComputeFullV);
    v_null = svd.matrixV().rightCols(null_dim);
  }
  const Matrix proj = v_null * v_null.transpose();

  Matrix basis(s, null_dim);
  int kept = 0;
  for (Eigen::Index j = 0; j < s && kept < null_dim; ++j) {
    Vector w = proj.col(j);
    for (int pass = 0; pass < 2; ++pass)
      for (int k = 0; k < kept; ++k) w -= basis.col(k).dot(w) * basis.col(k);
    if (w.norm() > 1e-8) basis.col(kept++) = w / w.norm();
  }
  // Top up from the raw SVD basis if the greedy pass came short.
  for (Eigen::Index j = 0; j < v_null.cols() && kept < null_dim; ++j) {
    Vector w = v_null.col(j);
    for (int pass = 0; pass < 2; ++pass)
      for (int k = 0; k < kept; ++k) w -= basis.col(k).dot(w) * basis.col(k);
    if (w.norm() > tol) basis.col(kept++) = w / w.norm();
  }
  return basis.leftCols(kept);
}

}  // namespace

Decomposition decompose(const SdpProblem& p, double tol) {
  const int n = p.n;
  const Matrix a = p.stacked_constraints();
  const Matrix s = sym_basis(n);
  const Matrix abar = a * s;

  int rank = 0;
  if (p.m() > 0) {
    Eigen::JacobiSVD<Matrix> svd(abar);
    const auto& sv = svd.singularValues();
    if (sv.size() > 0 && sv(0) > 0)
      for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > tol * sv(0)) ++rank;
    if (rank < p.m())
      throw RankError("decompose: constraints are rank deficient by " +
                      std::to_string(p.m() - rank) + " row(s)");
  }

  const int null_dim = static_cast<int>(s.cols()) - p.m();
  const Matrix chart_basis = aligned_null_basis(abar, null_dim, tol);
  const Matrix null_basis = s * chart_basis;

  const Vector c = vec(p.C);
  const double c_norm = fro_norm(p.C);
  std::vector<int> xi_cols, eta_cols;
  for (Eigen::Index j = 0; j < null_basis.cols(); ++j) {
    const double overlap = std::abs(c.dot(null_basis.col(j)));
    if (overlap > tol * c_norm)
      eta_cols.push_back(static_cast<int>(j));
    else
      xi_cols.push_back(static_cast<int>(j));
  }

  Decomposition d;
  d.n = n;
  d.M_xi.resize(null_basis.rows(), xi_cols.size());
  for (size_t k = 0; k < xi_cols.size(); ++k)
    d.M_xi.col(k) = null_basis.col(xi_cols[k]);
  d.M_eta.resize(null_basis.rows(), eta_cols.size());
  for (size_t k = 0; k < eta_cols.size(); ++k)
    d.M_eta.col(k) = null_basis.col(eta_cols[k]);
  d.M_nu = nonsym_basis(n);
  return d;
}

}  // namespace fip
