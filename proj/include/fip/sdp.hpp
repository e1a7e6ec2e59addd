#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "fip/centering.hpp"
#include "fip/decomp.hpp"
#include "fip/problem.hpp"

namespace fip {

enum class SearchStrategy { STD, SYM, ACE, GCE };

// STD  - all feasible directions (symmetric + antisymmetric), algebraic
//        centering blend with a large mu.
// SYM  - symmetric directions only, algebraic centering with a small mu.
// ACE  - directions constructed from successive algebraically centered
//        iterates (first step symmetric).
// GCE  - directions constructed from successive geometrically centered
//        iterates (first step symmetric).
struct SdpConfig {
  SearchStrategy search = SearchStrategy::STD;
  double tau = 1.0 - 1e-6;
  double tol = 2e-8;
  double mu = 0.765;  // centering blend weight, X := mu X + (1-mu) X_cen
  int maxit = 20;
  double gamma = 0.1;   // search-direction normalization
  double gamma0 = 1.0;  // initial spectral shift, X_0 = gamma0 * I
  bool centering = true;

  static SdpConfig defaults_for(SearchStrategy s);
};

enum class SdpStatus { Optimal, IterationLimit, Unbounded, InitFailed };

enum class SdpPhase { Init, Minimize };

struct SdpTraceRow {
  SdpPhase phase = SdpPhase::Minimize;
  int iter = 0;
  double alpha = 0.0;
  // Minimize rows: realized objective change tau*alpha*<C,dX> (row 0
  // carries the raw slope of the first direction). Unused for init rows.
  double tr_c_dx = 0.0;
  double min_eig = 0.0;
  double tr_c_x = 0.0;
  double residual = 0.0;
  double inv_norm = 0.0;
  SymMatrix X{1};
};

// Fine-grained path record: the starting iterate plus, per iteration, the
// point after the descent step and the point after centering.
enum class PathKind { Start, Step, Center };

struct PathPoint {
  SdpPhase phase = SdpPhase::Minimize;
  PathKind kind = PathKind::Start;
  int iter = 0;
  double alpha = 0.0;
  double tr_c_dx = 0.0;
  double tr_c_x = 0.0;
  double residual = 0.0;
  double inv_norm = 0.0;
  SymMatrix X{1};
};

using TraceSink = std::function<void(const SdpTraceRow&)>;

struct SdpResult {
  SymMatrix X{1};
  SdpStatus status = SdpStatus::Optimal;
  double objective = 0.0;
  std::vector<SdpTraceRow> trace;
  std::vector<PathPoint> path;
  int init_iterations = 0;
  int minimize_iterations = 0;
};

struct SdpInit {
  SymMatrix X{1};
  bool feasible = false;
  int iterations = 0;
};

// Feasibility phase from X = gamma0 * I: alternate a least-squares step
// towards A vec(X) = b (row-scaled by max(1, ||X^-1||/||X||)) with a
// centering step, doubling the spectral shift and restarting when the
// residual stalls (at most 8 escalations).
SdpInit sdp_initial_feasible(const SdpProblem& p, const Decomposition& d,
                             const SdpConfig& config,
                             std::vector<SdpTraceRow>* trace = nullptr,
                             std::vector<PathPoint>* path = nullptr,
                             const TraceSink& sink = {});

// Minimization direction from the restricted invertibility system
// [ (I (x) X^-1) M , I (x) X ; (vec C)' M , 0 ] [xhat; dxt] = [0; -gamma],
// returned as symmetrize(mat(M xhat)). nullopt when C is orthogonal to
// span(M) (objective constant on the feasible slice).
std::optional<SymMatrix> sdp_search_direction(const SymMatrix& x,
                                              const Matrix& M,
                                              const SymMatrix& C,
                                              double gamma);

// Difference of two centered iterates, oriented towards the smaller
// objective. nullopt when the objectives agree within tol.
std::optional<SymMatrix> constructed_direction(const SymMatrix& first,
                                               const SymMatrix& second,
                                               const SymMatrix& C,
                                               double tol);

// Greedy feasible-interior-point minimization with the chosen strategy.
// X0, when given, must be PD and feasible; otherwise the feasibility phase
// runs first.
SdpResult sdp_solve(const SdpProblem& p,
                    const SdpConfig& config = SdpConfig{},
                    const std::optional<SymMatrix>& X0 = std::nullopt,
                    const TraceSink& sink = {});

struct PdPoint {
  SymMatrix X{1};
  Vector y;
  SymMatrix Z{1};
};

struct PdDirection {
  SymMatrix dX{1};
  Vector dy;
  SymMatrix dZ{1};
  // Norm of the full least-squares residual of the assembled system.
  double solve_residual = 0.0;
};

// One-shot non-commutative primal-dual direction: least-squares solution of
// the 5-block system pairing the KKT residual rows with the invertibility
// rows X dXt + X^-1 dX = 0 and Z dZt + Z^-1 dZ = 0.
PdDirection pd_newdir_solve(const PdPoint& point, const SdpProblem& p,
                            double mu);

// Coordinates of X in the (freedom, objective) chart:
// xi = <X - X_ref, u_xi> / <u_xi, u_xi>, eta = <C, X>.
std::pair<double, double> path_projection(const SymMatrix& x,
                                          const SymMatrix& x_ref,
                                          const SymMatrix& u_xi,
                                          const SymMatrix& C);

}  // namespace fip
