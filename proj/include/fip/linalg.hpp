#pragma once

#include <optional>

#include "fip/types.hpp"

namespace fip {

// Dense real symmetric matrix. Construction enforces exact entrywise
// symmetry: inputs within tolerance are averaged with their transpose,
// anything else is rejected.
class SymMatrix {
 public:
  explicit SymMatrix(int n);
  explicit SymMatrix(const Matrix& m, double tol = 1e-9);

  static SymMatrix identity(int n);
  static SymMatrix diagonal(const Vector& d);

  int n() const { return static_cast<int>(m_.rows()); }
  const Matrix& mat() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }
  void set(int i, int j, double v) {
    m_(i, j) = v;
    m_(j, i) = v;
  }

 private:
  Matrix m_;
};

SymMatrix operator+(const SymMatrix& a, const SymMatrix& b);
SymMatrix operator-(const SymMatrix& a, const SymMatrix& b);
SymMatrix operator*(double s, const SymMatrix& a);

// Column-major stacking of an n x n matrix into a length-n^2 vector.
Vector vec(const Matrix& x);
Vector vec(const SymMatrix& x);

// Inverse of vec. Throws DimensionError unless x has exactly n^2 entries.
Matrix mat(const Vector& x, int n);

// <X, Z> = trace(X^T Z) = sum_ij x_ij z_ij.
double trace_inner(const Matrix& x, const Matrix& z);
double trace_inner(const SymMatrix& x, const SymMatrix& z);
double trace_inner(const SymMatrix& x, const Matrix& z);

double fro_norm(const Matrix& x);
double fro_norm(const SymMatrix& x);

// Lower-triangular L with L L^T = X, or nullopt when X is not positive
// definite. Failure criterion: any pivot <= 1e-14 * max initial diagonal.
std::optional<Matrix> cholesky(const SymMatrix& x);

bool is_positive_definite(const SymMatrix& x);

double min_eigenvalue(const SymMatrix& x);

// Symmetrized inverse of a PD matrix. Throws PreconditionError if singular.
SymMatrix sym_inverse(const SymMatrix& x);

// ||X^-1||_F of a PD matrix.
double inverse_fro_norm(const SymMatrix& x);

// Maximal steplength along a symmetric direction, sup{a : X + a*D PD},
// with an explicit flag for the unbounded case.
class Steplength {
 public:
  static Steplength finite(double v) { return Steplength(v, true); }
  static Steplength infinite() { return Steplength(0.0, false); }

  bool is_finite() const { return finite_; }
  // Finite value; throws PreconditionError when infinite.
  double value() const;
  // Finite value, or +inf for display purposes.
  double value_or_inf() const;

 private:
  Steplength(double v, bool finite) : value_(v), finite_(finite) {}
  double value_;
  bool finite_;
};

enum class StepSign { Plus, Minus };

// alpha_max = 1 / lambda_max(-L^-1 D L^-T) for X = L L^T; infinite when the
// extreme eigenvalue is nonpositive. StepSign::Minus evaluates the same with
// D negated. Throws PreconditionError when X is not PD.
Steplength max_steplength(const SymMatrix& x, const SymMatrix& d,
                          StepSign sign = StepSign::Plus);

// Minimum-norm least-squares solution (pseudoinverse solution) of A x ~ b.
// Singular values below max(rows,cols) * eps * sigma_max are treated as zero.
Vector min_norm_least_squares(const Matrix& a, const Vector& b);

// (D + D^T) / 2. Throws DimensionError for non-square input.
SymMatrix symmetrize(const Matrix& d);

// I_n (x) X, assembled as a block-diagonal n^2 x n^2 matrix.
Matrix identity_kron(const Matrix& x);

}  // namespace fip
