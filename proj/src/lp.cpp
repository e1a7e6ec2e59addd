#include "fip/lp.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <limits>
#include <sstream>

namespace fip {

namespace {

// 1 / max_i(-dx_i / x_i) over descent components; infinite when dx >= 0.
Steplength positive_orthant_steplength(const Vector& x, const Vector& dx) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i)
    worst = std::max(worst, -dx(i) / x(i));
  if (worst <= 0) return Steplength::infinite();
  return Steplength::finite(1.0 / worst);
}

LpTraceRow make_row(LpPhase phase, int iter, double alpha, double value,
                    const LpProblem& p, const Vector& x) {
  LpTraceRow row;
  row.phase = phase;
  row.iter = iter;
  row.alpha = alpha;
  row.value = value;
  row.objective = p.c.dot(x);
  row.residual = (p.A * x - p.b).norm();
  row.inv_norm = x.cwiseInverse().norm();
  row.x = x;
  return row;
}

}  // namespace

Matrix null_space_basis(const Matrix& a) {
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  int rank = 0;
  if (sv.size() > 0 && sv(0) > 0) {
    const double cutoff = std::max(a.rows(), a.cols()) *
                          std::numeric_limits<double>::epsilon() * sv(0);
    for (Eigen::Index i = 0; i < sv.size(); ++i)
      if (sv(i) > cutoff) ++rank;
  }
  return svd.matrixV().rightCols(a.cols() - rank);
}

LpInit lp_initial_feasible(const LpProblem& p, const LpConfig& config,
                           std::vector<LpTraceRow>* trace) {
  const int n = p.n();
  const int m = p.m();
  Vector x = Vector::Ones(n);
  Vector xt = Vector::Ones(n);

  for (int it = 1; it <= config.maxit; ++it) {
    const Vector r = p.b - p.A * x;
    if (r.norm() <= config.tol) return {x, true, it - 1};

    Matrix sys = Matrix::Zero(m + n, 2 * n);
    sys.topLeftCorner(m, n) = p.A;
    sys.block(m, 0, n, n) = xt.asDiagonal();
    sys.block(m, n, n, n) = x.asDiagonal();
    Vector rhs = Vector::Zero(m + n);
    rhs.head(m) = r;

    const Vector dx = min_norm_least_squares(sys, rhs).head(n);
    const Steplength alpha = positive_orthant_steplength(x, dx);

    double shown;
    if (!alpha.is_finite() || alpha.value() > 1.0) {
      x += dx;
      shown = alpha.value_or_inf();
    } else {
      x += config.tau * alpha.value() * dx;
      shown = config.tau * alpha.value();
    }
    xt = x.cwiseInverse();
    if (trace)
      trace->push_back(
          make_row(LpPhase::Init, it, shown, x.minCoeff(), p, x));
    if ((p.b - p.A * x).norm() <= config.tol) return {x, true, it};
  }
  return {x, (p.b - p.A * x).norm() <= config.tol, config.maxit};
}

std::optional<Vector> lp_search_direction(const Vector& x, const Matrix& M,
                                          const Vector& c, double gamma) {
  const int n = static_cast<int>(x.size());
  const Eigen::Index k = M.cols();
  const Vector cm = M.transpose() * c;
  if (cm.lpNorm<Eigen::Infinity>() <=
      1e-12 * std::max(1.0, c.lpNorm<Eigen::Infinity>()))
    return std::nullopt;

  Matrix sys = Matrix::Zero(1 + n, k + n);
  sys.row(0).head(k) = cm.transpose();
  sys.block(1, 0, n, k) = x.cwiseInverse().asDiagonal() * M;
  sys.block(1, k, n, n) = x.asDiagonal();
  Vector rhs = Vector::Zero(1 + n);
  rhs(0) = -gamma;

  const Vector sol = min_norm_least_squares(sys, rhs);
  return Vector(M * sol.head(k));
}

namespace {

// Demonstration variant: normalize the projected objective only, ignoring
// the invertibility rows.
Vector naive_direction(const Matrix& M, const Vector& c, double gamma) {
  const Vector cm = M.transpose() * c;
  return M * Vector(-gamma * cm / cm.squaredNorm());
}

}  // namespace

LpResult lp_solve(const LpProblem& p, const LpConfig& config,
                  const std::optional<Vector>& x0) {
  validate(p);
  LpResult result;
  result.x = Vector::Zero(p.n());

  Vector x;
  if (x0) {
    if (x0->size() != p.n())
      throw DimensionError("lp_solve: x0 length mismatch");
    if (x0->minCoeff() <= 0)
      throw PreconditionError("lp_solve: x0 is not entrywise positive");
    if ((p.A * *x0 - p.b).norm() > 100 * config.tol)
      throw PreconditionError("lp_solve: x0 is not feasible");
    x = *x0;
  } else {
    const LpInit init = lp_initial_feasible(p, config, &result.trace);
    result.init_iterations = init.iterations;
    x = init.x;
    if (!init.feasible) {
      result.x = x;
      result.status = LpStatus::InfeasibleStart;
      return result;
    }
  }

  const Matrix M = null_space_basis(p.A);

  auto next_direction = [&](const Vector& at) -> std::optional<Vector> {
    if (config.unsafe_naive_search) {
      const Vector cm = M.transpose() * p.c;
      if (cm.lpNorm<Eigen::Infinity>() <=
          1e-12 * std::max(1.0, p.c.lpNorm<Eigen::Infinity>()))
        return std::nullopt;
      return naive_direction(M, p.c, config.gamma);
    }
    return lp_search_direction(at, M, p.c, config.gamma);
  };

  std::optional<Vector> dir = next_direction(x);
  const double first_slope = dir ? p.c.dot(*dir) : 0.0;
  result.trace.push_back(
      make_row(LpPhase::Minimize, 0, 0.0, first_slope, p, x));
  if (!dir) {
    result.x = x;
    result.status = LpStatus::Optimal;
    return result;
  }

  result.status = LpStatus::IterationLimit;
  for (int it = 1; it <= config.maxit; ++it) {
    const Vector& dx = *dir;
    const double slope = p.c.dot(dx);
    const Steplength alpha = positive_orthant_steplength(x, dx);
    if (!alpha.is_finite()) {
      if (slope < 0)
        throw UnboundedProblemError(
            "lp_solve: descent direction never leaves the positive orthant");
      result.status = LpStatus::Optimal;
      break;
    }

    const double step = config.tau * alpha.value();
    x += step * dx;
    const double realized = step * slope;
    result.minimize_iterations = it;
    result.trace.push_back(
        make_row(LpPhase::Minimize, it, step, realized, p, x));

    if (std::abs(realized) <= config.tol) {
      result.status = LpStatus::Optimal;
      break;
    }
    dir = next_direction(x);
    if (!dir) {
      result.status = LpStatus::Optimal;
      break;
    }
  }
  result.x = x;
  return result;
}

double verify_weak_duality_lp(const Vector& x, const Vector& y,
                              const Vector& z, const LpProblem& p) {
  std::ostringstream violations;
  const double bscale = std::max(1.0, p.b.lpNorm<Eigen::Infinity>());
  const double cscale = std::max(1.0, p.c.lpNorm<Eigen::Infinity>());
  if ((p.A * x - p.b).norm() > 1e-8 * bscale)
    violations << "A x != b; ";
  if (x.minCoeff() < -1e-8) violations << "x has negative entries; ";
  if ((p.A.transpose() * y + z - p.c).norm() > 1e-8 * cscale)
    violations << "A' y + z != c; ";
  if (z.minCoeff() < -1e-8) violations << "z has negative entries; ";
  if (!violations.str().empty())
    throw FeasibilityError("verify_weak_duality_lp: " + violations.str());

  const double gap = p.c.dot(x) - p.b.dot(y);
  const double xz = x.dot(z);
  const double scale =
      std::max({1.0, std::abs(p.c.dot(x)), std::abs(p.b.dot(y))});
  if (std::abs(gap - xz) > 1e-9 * scale)
    throw FeasibilityError("verify_weak_duality_lp: gap does not match x'z");
  if (gap < -1e-9)
    throw FeasibilityError("verify_weak_duality_lp: negative duality gap");
  return gap;
}

}  // namespace fip
