#pragma once

#include <optional>
#include <vector>

#include "fip/problem.hpp"

namespace fip {

struct LpConfig {
  double tau = 1.0 - 1e-10;  // fraction of the maximal steplength taken
  double tol = 2e-9;
  int maxit = 30;
  double gamma = 0.1;  // search-direction normalization
  // Naive search that drops the invertibility rows. Demonstration only:
  // it can and does return wrong results.
  bool unsafe_naive_search = false;
};

enum class LpStatus { Optimal, IterationLimit, InfeasibleStart };

enum class LpPhase { Init, Minimize };

struct LpTraceRow {
  LpPhase phase = LpPhase::Minimize;
  int iter = 0;
  double alpha = 0.0;
  // Init rows: min(x) after the step. Minimize rows: realized objective
  // change tau*alpha*c'dx (row 0 carries the raw slope of the first
  // direction).
  double value = 0.0;
  double objective = 0.0;
  double residual = 0.0;
  double inv_norm = 0.0;
  Vector x;
};

struct LpResult {
  Vector x;
  LpStatus status = LpStatus::Optimal;
  std::vector<LpTraceRow> trace;
  int init_iterations = 0;
  int minimize_iterations = 0;
};

struct LpInit {
  Vector x;
  bool feasible = false;
  int iterations = 0;
};

// Orthonormal basis of null(A) (the orthogonal complement of the rows),
// n x (n - rank) via SVD.
Matrix null_space_basis(const Matrix& a);

// Feasibility phase: from x = ones, iterate the coupled correction system
// [A, 0; diag(1/x), diag(x)] [dx; dxt] = [b - A x; 0] until A x = b holds
// within tol, stepping by dx outright when the full step stays positive.
LpInit lp_initial_feasible(const LpProblem& p, const LpConfig& config,
                           std::vector<LpTraceRow>* trace = nullptr);

// Search direction from the reduced invertibility system
// [c'M, 0; diag(1/x) M, diag(x)] [xhat; dxt] = [-gamma; 0], returned as
// M xhat. nullopt when c is orthogonal to span(M) (objective constant on
// the feasible set).
std::optional<Vector> lp_search_direction(const Vector& x, const Matrix& M,
                                          const Vector& c, double gamma);

// Greedy feasible-interior-point minimization. Throws UnboundedProblemError
// when a descent direction never leaves the positive orthant.
LpResult lp_solve(const LpProblem& p, const LpConfig& config = {},
                  const std::optional<Vector>& x0 = std::nullopt);

// Weak-duality check: returns c'x - b'y after validating primal/dual
// feasibility; the gap must equal x'z within 1e-9*scale and be >= -1e-9.
// Throws FeasibilityError listing the violated conditions.
double verify_weak_duality_lp(const Vector& x, const Vector& y,
                              const Vector& z, const LpProblem& p);

}  // namespace fip
