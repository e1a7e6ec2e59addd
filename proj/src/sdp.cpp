#include "fip/sdp.hpp"

#include <algorithm>
#include <cmath>

namespace fip {

SdpConfig SdpConfig::defaults_for(SearchStrategy s) {
  SdpConfig c;
  c.search = s;
  switch (s) {
    case SearchStrategy::STD:
      c.tau = 1.0 - 1e-6;
      c.mu = 0.765;
      break;
    case SearchStrategy::SYM:
      c.tau = 1.0 - 5e-5;
      c.mu = 0.2;
      break;
    case SearchStrategy::ACE:
      c.tau = 1.0 - 5e-5;
      c.mu = 0.215;
      break;
    case SearchStrategy::GCE:
      c.tau = 1.0 - 5e-5;
      c.mu = 0.0;
      break;
  }
  return c;
}

namespace {

SdpTraceRow make_row(const SdpProblem& p, SdpPhase phase, int iter,
                     double alpha, double tr_c_dx, const SymMatrix& x) {
  SdpTraceRow row;
  row.phase = phase;
  row.iter = iter;
  row.alpha = alpha;
  row.tr_c_dx = tr_c_dx;
  row.min_eig = min_eigenvalue(x);
  row.tr_c_x = trace_inner(p.C, x);
  row.residual = p.residual_norm(x);
  row.inv_norm = inverse_fro_norm(x);
  row.X = x;
  return row;
}

PathPoint make_point(const SdpProblem& p, SdpPhase phase, PathKind kind,
                     int iter, double alpha, double tr_c_dx,
                     const SymMatrix& x) {
  PathPoint pt;
  pt.phase = phase;
  pt.kind = kind;
  pt.iter = iter;
  pt.alpha = alpha;
  pt.tr_c_dx = tr_c_dx;
  pt.tr_c_x = trace_inner(p.C, x);
  pt.residual = p.residual_norm(x);
  pt.inv_norm = inverse_fro_norm(x);
  pt.X = x;
  return pt;
}

// Centering step shared by the feasibility phase and the minimization loop:
// algebraic centering within M_xi when freedom exists, otherwise (init only)
// the residual-reduction variant over [M_eta, M_nu].
SymMatrix init_centering(const SymMatrix& x, const Decomposition& d,
                         double mu) {
  if (d.m_xi() >= 1) return algebraic_center(x, d.M_xi, mu).X_centered;

  const int n = x.n();
  const Eigen::Index nn = static_cast<Eigen::Index>(n) * n;
  Matrix basis(nn, d.m_eta() + d.m_nu());
  basis << d.M_eta, d.M_nu;
  if (basis.cols() == 0) return x;

  const SymMatrix xinv = sym_inverse(x);
  Matrix sys(nn, basis.cols() + nn);
  sys << identity_kron(xinv.mat()) * basis, identity_kron(x.mat());
  const Vector rhs = (1.0 - mu) * vec(xinv);
  const Vector sol = min_norm_least_squares(sys, rhs);
  const SymMatrix correction =
      symmetrize(mat(basis * sol.head(basis.cols()), n));

  double factor = 1.0;
  for (int halvings = 0; halvings <= 30; ++halvings) {
    const SymMatrix candidate = x + factor * correction;
    if (is_positive_definite(candidate)) return candidate;
    factor *= 0.5;
  }
  throw CenteringError("init centering: correction not PD after 30 halvings");
}

}  // namespace

SdpInit sdp_initial_feasible(const SdpProblem& p, const Decomposition& d,
                             const SdpConfig& config,
                             std::vector<SdpTraceRow>* trace,
                             std::vector<PathPoint>* path,
                             const TraceSink& sink) {
  const int n = p.n;
  const Matrix a = p.stacked_constraints();
  const Eigen::Index nn = static_cast<Eigen::Index>(n) * n;

  double gamma = config.gamma0;
  int total_iters = 0;

  for (int attempt = 0; attempt <= 8; ++attempt) {
    SymMatrix x = gamma * SymMatrix::identity(n);
    std::vector<double> residual_history;

    for (int it = 1; it <= config.maxit; ++it) {
      const Vector r = p.b - a * vec(x);
      if (r.norm() <= config.tol) return {x, true, total_iters};

      const SymMatrix xinv = sym_inverse(x);
      const double scale = std::max(1.0, fro_norm(xinv) / fro_norm(x));

      Matrix sys = Matrix::Zero(p.m() + nn, 2 * nn);
      sys.topLeftCorner(p.m(), nn) = scale * a;
      sys.block(p.m(), 0, nn, nn) = identity_kron(xinv.mat());
      sys.block(p.m(), nn, nn, nn) = identity_kron(x.mat());
      Vector rhs = Vector::Zero(p.m() + nn);
      rhs.head(p.m()) = scale * r;

      const Vector sol = min_norm_least_squares(sys, rhs);
      const SymMatrix dx = symmetrize(mat(sol.head(nn), n));

      const Steplength alpha = max_steplength(x, dx);
      double step =
          alpha.is_finite() ? std::min(1.0, config.tau * alpha.value()) : 1.0;
      SymMatrix stepped = x + step * dx;
      for (int backoff = 0; backoff < 60 && !is_positive_definite(stepped);
           ++backoff) {
        step *= 0.5;
        stepped = x + step * dx;
      }
      x = stepped;
      ++total_iters;
      if (path)
        path->push_back(make_point(p, SdpPhase::Init, PathKind::Step,
                                   total_iters, step,
                                   step * trace_inner(p.C, dx), x));

      if (config.centering) {
        // The feasibility phase always centers fully; the blend weight mu
        // only shapes the minimization path.
        x = init_centering(x, d, 0.0);
        if (path)
          path->push_back(make_point(p, SdpPhase::Init, PathKind::Center,
                                     total_iters, 0.0, 0.0, x));
      }

      const double shown =
          alpha.is_finite() ? config.tau * alpha.value() : step;
      SdpTraceRow row =
          make_row(p, SdpPhase::Init, total_iters, shown, 0.0, x);
      if (trace) trace->push_back(row);
      if (sink) sink(row);

      const double rn = p.residual_norm(x);
      if (rn <= config.tol) return {x, true, total_iters};

      // Escalate the spectral shift when the residual stalls.
      residual_history.push_back(rn);
      if (residual_history.size() >= 3) {
        const double old =
            residual_history[residual_history.size() - 3];
        if (rn > 0.99 * old) break;
      }
    }
    gamma *= 2.0;
  }

  SymMatrix x = gamma * SymMatrix::identity(n);
  return {x, false, total_iters};
}

std::optional<SymMatrix> sdp_search_direction(const SymMatrix& x,
                                              const Matrix& M,
                                              const SymMatrix& C,
                                              double gamma) {
  const int n = x.n();
  const Eigen::Index nn = static_cast<Eigen::Index>(n) * n;
  if (M.rows() != nn)
    throw DimensionError("sdp_search_direction: basis row count != n^2");
  const Eigen::Index k = M.cols();

  const Vector cm = M.transpose() * vec(C);
  if (k == 0 ||
      cm.lpNorm<Eigen::Infinity>() <= 1e-12 * std::max(1.0, fro_norm(C)))
    return std::nullopt;

  const SymMatrix xinv = sym_inverse(x);
  // The invertibility rows are homogeneous, so normalizing them by the
  // size of X^-1 changes nothing algebraically but keeps the system
  // well scaled when the iterate is close to the boundary.
  const double row_scale = 1.0 / std::max(1.0, fro_norm(xinv));
  Matrix sys = Matrix::Zero(nn + 1, k + nn);
  sys.topLeftCorner(nn, k) = row_scale * identity_kron(xinv.mat()) * M;
  sys.block(0, k, nn, nn) = row_scale * identity_kron(x.mat());
  sys.row(nn).head(k) = cm.transpose();
  Vector rhs = Vector::Zero(nn + 1);
  rhs(nn) = -gamma;

  const Vector sol = min_norm_least_squares(sys, rhs);
  return symmetrize(mat(M * sol.head(k), n));
}

std::optional<SymMatrix> constructed_direction(const SymMatrix& first,
                                               const SymMatrix& second,
                                               const SymMatrix& C,
                                               double tol) {
  const double o1 = trace_inner(C, first);
  const double o2 = trace_inner(C, second);
  if (std::abs(o1 - o2) <= tol) return std::nullopt;
  return (o2 < o1) ? second - first : first - second;
}

SdpResult sdp_solve(const SdpProblem& p, const SdpConfig& config,
                    const std::optional<SymMatrix>& X0,
                    const TraceSink& sink) {
  validate(p);
  const Decomposition d = decompose(p);

  SdpResult result;
  result.X = SymMatrix(p.n);

  SymMatrix x = SymMatrix::identity(p.n);
  if (X0) {
    if (X0->n() != p.n)
      throw DimensionError("sdp_solve: X0 dimension mismatch");
    if (!is_positive_definite(*X0))
      throw PreconditionError("sdp_solve: X0 is not positive definite");
    if (p.residual_norm(*X0) >
        std::max(100 * config.tol, 1e-8 * (1.0 + p.b.norm())))
      throw PreconditionError("sdp_solve: X0 is not feasible");
    x = *X0;
  } else {
    const SdpInit init = sdp_initial_feasible(p, d, config, &result.trace,
                                              &result.path, sink);
    result.init_iterations = init.iterations;
    x = init.X;
    if (!init.feasible) {
      result.X = x;
      result.objective = trace_inner(p.C, x);
      result.status = SdpStatus::InitFailed;
      return result;
    }
  }

  result.path.push_back(make_point(p, SdpPhase::Minimize, PathKind::Start, 0,
                                   0.0, 0.0, x));

  const bool constructed = config.search == SearchStrategy::ACE ||
                           config.search == SearchStrategy::GCE;
  const Matrix dir_basis = (config.search == SearchStrategy::STD)
                               ? d.full_basis()
                               : d.symmetric_basis();

  auto center = [&](const SymMatrix& at) -> SymMatrix {
    if (!config.centering || d.m_xi() == 0) return at;
    if (config.search == SearchStrategy::GCE) {
      const SymMatrix full = geometric_center(at, d.M_xi).X_centered;
      return SymMatrix(config.mu * at.mat() + (1.0 - config.mu) * full.mat());
    }
    return algebraic_center(at, d.M_xi, config.mu).X_centered;
  };

  auto emit_row = [&](const SdpTraceRow& row) {
    result.trace.push_back(row);
    if (sink) sink(row);
  };

  std::optional<SymMatrix> dir;
  if (d.m_eta() > 0)
    dir = sdp_search_direction(x, dir_basis, p.C, config.gamma);
  const double first_slope = dir ? trace_inner(p.C, *dir) : 0.0;
  emit_row(make_row(p, SdpPhase::Minimize, 0, 0.0, first_slope, x));
  if (!dir) {
    result.X = x;
    result.objective = trace_inner(p.C, x);
    result.status = SdpStatus::Optimal;
    return result;
  }

  result.status = SdpStatus::IterationLimit;
  for (int it = 1; it <= config.maxit; ++it) {
    const SymMatrix& dx = *dir;
    const double slope = trace_inner(p.C, dx);
    const Steplength alpha = max_steplength(x, dx);
    if (!alpha.is_finite()) {
      if (slope < 0) {
        result.status = SdpStatus::Unbounded;
        break;
      }
      result.status = SdpStatus::Optimal;
      break;
    }

    double step = config.tau * alpha.value();
    SymMatrix x_step = x + step * dx;
    // Roundoff can push a full tau-step past the numerical boundary even
    // though it is inside in exact arithmetic; back off until PD.
    for (int backoff = 0; backoff < 60 && !is_positive_definite(x_step);
         ++backoff) {
      step *= 0.5;
      x_step = x + step * dx;
    }
    if (!is_positive_definite(x_step)) {
      result.status = SdpStatus::IterationLimit;
      break;
    }
    const double realized = step * slope;
    result.path.push_back(make_point(p, SdpPhase::Minimize, PathKind::Step,
                                     it, step, realized, x_step));

    SymMatrix x_new = center(x_step);
    if (config.centering && d.m_xi() > 0)
      result.path.push_back(make_point(p, SdpPhase::Minimize,
                                       PathKind::Center, it, 0.0, 0.0,
                                       x_new));

    result.minimize_iterations = it;
    emit_row(make_row(p, SdpPhase::Minimize, it, step, realized, x_new));

    if (std::abs(realized) <= config.tol) {
      x = x_new;
      result.status = SdpStatus::Optimal;
      break;
    }

    if (constructed) {
      dir = constructed_direction(x, x_new, p.C, config.tol);
    } else {
      try {
        dir = sdp_search_direction(x_new, dir_basis, p.C, config.gamma);
      } catch (const PreconditionError&) {
        // The iterate has become numerically singular; no further
        // direction can be computed at this conditioning.
        x = x_new;
        break;
      }
    }
    x = x_new;
    if (!dir) {
      result.status = SdpStatus::Optimal;
      break;
    }
  }

  result.X = x;
  result.objective = trace_inner(p.C, x);
  return result;
}

PdDirection pd_newdir_solve(const PdPoint& point, const SdpProblem& p,
                            double mu) {
  const int n = p.n;
  const Eigen::Index nn = static_cast<Eigen::Index>(n) * n;
  const int m = p.m();
  if (point.X.n() != n || point.Z.n() != n || point.y.size() != m)
    throw DimensionError("pd_newdir_solve: point dimension mismatch");
  if (!is_positive_definite(point.X) || !is_positive_definite(point.Z))
    throw PreconditionError("pd_newdir_solve: X and Z must be PD");

  const Matrix a = p.stacked_constraints();
  const SymMatrix xinv = sym_inverse(point.X);
  const SymMatrix zinv = sym_inverse(point.Z);

  // Unknowns [dx; dy; dz; dxt; dzt].
  const Eigen::Index cols = 4 * nn + m;
  const Eigen::Index rows = 3 * nn + m + 1;
  Matrix sys = Matrix::Zero(rows, cols);
  Vector rhs = Vector::Zero(rows);

  // A' dy + dz = c - z - A' y
  sys.block(0, nn, nn, m) = a.transpose();
  sys.block(0, nn + m, nn, nn) = Matrix::Identity(nn, nn);
  rhs.head(nn) = vec(p.C) - vec(point.Z) - a.transpose() * point.y;
  // A dx = b - A x
  sys.block(nn, 0, m, nn) = a;
  rhs.segment(nn, m) = p.b - a * vec(point.X);
  // z' dx + x' dz = mu - <X, Z>
  sys.block(nn + m, 0, 1, nn) = vec(point.Z).transpose();
  sys.block(nn + m, nn + m, 1, nn) = vec(point.X).transpose();
  rhs(nn + m) = mu - trace_inner(point.X, point.Z);
  // (I (x) X^-1) dx + (I (x) X) dxt = 0
  sys.block(nn + m + 1, 0, nn, nn) = identity_kron(xinv.mat());
  sys.block(nn + m + 1, nn + m + nn, nn, nn) = identity_kron(point.X.mat());
  // (I (x) Z^-1) dz + (I (x) Z) dzt = 0
  sys.block(2 * nn + m + 1, nn + m, nn, nn) = identity_kron(zinv.mat());
  sys.block(2 * nn + m + 1, nn + m + 2 * nn, nn, nn) =
      identity_kron(point.Z.mat());

  const Vector sol = min_norm_least_squares(sys, rhs);

  PdDirection dirs;
  dirs.dX = symmetrize(mat(sol.head(nn), n));
  dirs.dy = sol.segment(nn, m);
  dirs.dZ = symmetrize(mat(sol.segment(nn + m, nn), n));
  dirs.solve_residual = (sys * sol - rhs).norm();
  return dirs;
}

std::pair<double, double> path_projection(const SymMatrix& x,
                                          const SymMatrix& x_ref,
                                          const SymMatrix& u_xi,
                                          const SymMatrix& C) {
  const double denom = trace_inner(u_xi, u_xi);
  if (denom <= 0)
    throw PreconditionError("path_projection: zero freedom direction");
  const double xi = trace_inner(x - x_ref, u_xi) / denom;
  const double eta = trace_inner(C, x);
  return {xi, eta};
}

}  // namespace fip
