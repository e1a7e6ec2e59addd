#include "fip/linalg.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <limits>

namespace fip {

SymMatrix::SymMatrix(int n) : m_(Matrix::Zero(n, n)) {
  if (n < 1) throw DimensionError("SymMatrix: dimension must be >= 1");
}

SymMatrix::SymMatrix(const Matrix& m, double tol) {
  if (m.rows() != m.cols())
    throw DimensionError("SymMatrix: matrix is not square");
  if (m.rows() < 1) throw DimensionError("SymMatrix: dimension must be >= 1");
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if (asym > tol * scale)
    throw DimensionError("SymMatrix: matrix is not symmetric");
  m_ = 0.5 * (m + m.transpose());
}

SymMatrix SymMatrix::identity(int n) {
  return SymMatrix(Matrix::Identity(n, n));
}

SymMatrix SymMatrix::diagonal(const Vector& d) {
  Matrix m = d.asDiagonal();
  return SymMatrix(m);
}

SymMatrix operator+(const SymMatrix& a, const SymMatrix& b) {
  if (a.n() != b.n()) throw DimensionError("SymMatrix +: dimension mismatch");
  return SymMatrix(a.mat() + b.mat());
}

SymMatrix operator-(const SymMatrix& a, const SymMatrix& b) {
  if (a.n() != b.n()) throw DimensionError("SymMatrix -: dimension mismatch");
  return SymMatrix(a.mat() - b.mat());
}

SymMatrix operator*(double s, const SymMatrix& a) {
  return SymMatrix(s * a.mat());
}

Vector vec(const Matrix& x) {
  return Eigen::Map<const Vector>(x.data(), x.size());
}

Vector vec(const SymMatrix& x) { return vec(x.mat()); }

Matrix mat(const Vector& x, int n) {
  if (x.size() != static_cast<Eigen::Index>(n) * n)
    throw DimensionError("mat: vector length does not equal n^2");
  return Eigen::Map<const Matrix>(x.data(), n, n);
}

double trace_inner(const Matrix& x, const Matrix& z) {
  if (x.rows() != z.rows() || x.cols() != z.cols())
    throw DimensionError("trace_inner: dimension mismatch");
  return x.cwiseProduct(z).sum();
}

double trace_inner(const SymMatrix& x, const SymMatrix& z) {
  return trace_inner(x.mat(), z.mat());
}

double trace_inner(const SymMatrix& x, const Matrix& z) {
  return trace_inner(x.mat(), z);
}

double fro_norm(const Matrix& x) { return x.norm(); }
double fro_norm(const SymMatrix& x) { return x.mat().norm(); }

std::optional<Matrix> cholesky(const SymMatrix& x) {
  const int n = x.n();
  const Matrix& a = x.mat();

  // Fails exactly when a pivot is not strictly positive. Iterates of the
  // feasible solvers legitimately reach ||X^-1|| ~ 1e15 and must still
  // factor, so no relative pivot floor is applied.
  Matrix l = Matrix::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    double d = a(j, j);
    for (int k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    if (!(d > 0.0)) return std::nullopt;
    l(j, j) = std::sqrt(d);
    for (int i = j + 1; i < n; ++i) {
      double s = a(i, j);
      for (int k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / l(j, j);
    }
  }
  return l;
}

bool is_positive_definite(const SymMatrix& x) {
  return cholesky(x).has_value();
}

double min_eigenvalue(const SymMatrix& x) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(x.mat(),
                                           Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

SymMatrix sym_inverse(const SymMatrix& x) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(x.mat());
  const Vector& ev = es.eigenvalues();
  if (ev.cwiseAbs().minCoeff() == 0.0)
    throw PreconditionError("sym_inverse: matrix is singular");
  const Matrix inv = es.eigenvectors() *
                     ev.cwiseInverse().asDiagonal() *
                     es.eigenvectors().transpose();
  return symmetrize(inv);
}

double inverse_fro_norm(const SymMatrix& x) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(x.mat(),
                                           Eigen::EigenvaluesOnly);
  double sum = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double ev = es.eigenvalues()(i);
    if (ev == 0.0) return std::numeric_limits<double>::infinity();
    sum += 1.0 / (ev * ev);
  }
  return std::sqrt(sum);
}

double Steplength::value() const {
  if (!finite_)
    throw PreconditionError("Steplength: value() on an infinite steplength");
  return value_;
}

double Steplength::value_or_inf() const {
  return finite_ ? value_ : std::numeric_limits<double>::infinity();
}

Steplength max_steplength(const SymMatrix& x, const SymMatrix& d,
                          StepSign sign) {
  if (x.n() != d.n())
    throw DimensionError("max_steplength: dimension mismatch");
  auto l = cholesky(x);
  if (!l) throw PreconditionError("max_steplength: X is not positive definite");

  Matrix dir = (sign == StepSign::Minus) ? Matrix(-d.mat()) : d.mat();
  // W = -L^-1 D L^-T, symmetrized against roundoff before the eigensolve.
  Matrix w = l->triangularView<Eigen::Lower>().solve(dir);
  w = l->triangularView<Eigen::Lower>().solve(Matrix(w.transpose()));
  w = -0.5 * (w + w.transpose());

  Eigen::SelfAdjointEigenSolver<Matrix> es(w, Eigen::EigenvaluesOnly);
  const double lambda_max = es.eigenvalues().maxCoeff();
  if (lambda_max <= 0) return Steplength::infinite();
  return Steplength::finite(1.0 / lambda_max);
}

Vector min_norm_least_squares(const Matrix& a, const Vector& b) {
  if (a.rows() != b.size())
    throw DimensionError("min_norm_least_squares: row count != rhs length");
  if (a.size() == 0) return Vector::Zero(a.cols());
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) <= 0.0) return Vector::Zero(a.cols());
  const double cutoff = std::max(a.rows(), a.cols()) *
                        std::numeric_limits<double>::epsilon() * sv(0);
  Vector coeff = svd.matrixU().transpose() * b;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    coeff(i) = sv(i) > cutoff ? coeff(i) / sv(i) : 0.0;
  return svd.matrixV() * coeff;
}

SymMatrix symmetrize(const Matrix& d) {
  if (d.rows() != d.cols())
    throw DimensionError("symmetrize: matrix is not square");
  return SymMatrix(0.5 * (d + d.transpose()));
}

Matrix identity_kron(const Matrix& x) {
  const Eigen::Index n = x.rows();
  Matrix out = Matrix::Zero(n * n, n * n);
  for (Eigen::Index k = 0; k < n; ++k)
    out.block(k * n, k * n, n, n) = x;
  return out;
}

}  // namespace fip
