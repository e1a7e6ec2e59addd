#include "fip/report.hpp"

#include <cstdarg>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace fip {

namespace {

std::string fmt(const char* f, ...) {
  char buf[256];
  va_list args;
  va_start(args, f);
  std::vsnprintf(buf, sizeof buf, f, args);
  va_end(args);
  return buf;
}

const char* kRule =
    "----------------------------------------------------------------------";

std::string numeric_row(int iter, double alpha, double value,
                        double objective, double residual, double inv_norm) {
  return fmt("%3d   %8.2e   %10.3e   %16.9e   %10.2e   %7.1e\n", iter, alpha,
             value, objective, residual, inv_norm);
}

}  // namespace

std::string lp_banner(const LpProblem& p, const LpConfig& config) {
  std::string out = "FIPLP Search ";
  out += config.unsafe_naive_search ? "NAIVE (unsafe-demo)" : "STD";
  out += "\n";
  out += kRule;
  out += "\n";
  out += fmt("Linear Program: n=%d, m=%d\n", p.n(), p.m());
  out += fmt("      1-tau=%.2e, tol=%.2e, maxit=%d\n", 1.0 - config.tau,
             config.tol, config.maxit);
  return out;
}

std::string lp_phase_header(LpPhase phase) {
  if (phase == LpPhase::Init)
    return "ini   alpha      min(x)        tr(c*x)            ||A*x-b||  "
           "||x.^-1||\n";
  return "cnt   alpha      tr(c*dx)      tr(c*x)            ||A*x-b||  "
         "||x.^-1||\n";
}

std::string lp_row(const LpTraceRow& row) {
  return numeric_row(row.iter, row.alpha, row.value, row.objective,
                     row.residual, row.inv_norm);
}

std::string final_objective_line(double objective) {
  return fmt("                               % .15e\n", objective);
}

std::string format_vector(const Vector& x) {
  std::string out = "x =\n";
  for (Eigen::Index i = 0; i < x.size(); ++i)
    out += fmt("  %11.4e\n", x(i));
  return out;
}

std::string format_matrix(const Matrix& x) {
  std::string out = "X =\n";
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < x.cols(); ++j)
      out += fmt("  %11.4e", x(i, j));
    out += "\n";
  }
  return out;
}

std::string lp_log(const LpProblem& p, const LpConfig& config,
                   const LpResult& result) {
  std::string out = lp_banner(p, config);
  std::optional<LpPhase> current;
  for (const auto& row : result.trace) {
    if (!current || *current != row.phase) {
      out += lp_phase_header(row.phase);
      current = row.phase;
    }
    out += lp_row(row);
  }
  out += final_objective_line(p.c.dot(result.x));
  out += "\n";
  out += format_vector(result.x);
  return out;
}

std::string sdp_banner(const SdpProblem& p, const Decomposition& d,
                       const SdpConfig& config) {
  std::string out = "FIPSDP Search ";
  out += strategy_name(config.search);
  if (!config.centering) out += " (centering off)";
  out += "\n";
  out += kRule;
  out += "\n";
  out += fmt("Semidefinite Program: n=%d, m=%d, m_dof=%d, m_min=%d\n", p.n,
             p.m(), d.m_xi(), d.m_eta());
  out += fmt("      1-tau=%.2e, tol=%.2e, mu=%.3f, maxit=%d\n",
             1.0 - config.tau, config.tol, config.mu, config.maxit);
  return out;
}

std::string sdp_phase_header(SdpPhase phase) {
  if (phase == SdpPhase::Init)
    return "ini   alpha      min(eig(X))   tr(C*X)        ||A*vec(X)-b||  "
           "||X^-1||\n";
  return "cnt   alpha      tr(C*dX)      tr(C*X)        ||A*vec(X)-b||  "
         "||X^-1||\n";
}

std::string sdp_row(const SdpTraceRow& row) {
  const double value =
      row.phase == SdpPhase::Init ? row.min_eig : row.tr_c_dx;
  return numeric_row(row.iter, row.alpha, value, row.tr_c_x, row.residual,
                     row.inv_norm);
}

std::string sdp_log(const SdpProblem& p, const Decomposition& d,
                    const SdpConfig& config, const SdpResult& result) {
  std::string out = sdp_banner(p, d, config);
  std::optional<SdpPhase> current;
  for (const auto& row : result.trace) {
    if (!current || *current != row.phase) {
      out += sdp_phase_header(row.phase);
      current = row.phase;
    }
    out += sdp_row(row);
  }
  out += final_objective_line(result.objective);
  out += "\n";
  out += format_matrix(result.X.mat());
  return out;
}

void emit_trace_csv(const SdpResult& result, const SymMatrix& x_ref,
                    const SymMatrix& u_xi, const SymMatrix& C,
                    std::ostream& out) {
  out << "phase,iter,xi,eta,alpha,trCdX,trCX,residual,invnorm\n";
  for (const auto& pt : result.path) {
    const auto [xi, eta] = path_projection(pt.X, x_ref, u_xi, C);
    out << (pt.phase == SdpPhase::Init ? "ini" : "cnt") << ',' << pt.iter
        << ',' << fmt("%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g", xi, eta,
                      pt.alpha, pt.tr_c_dx, pt.tr_c_x, pt.residual,
                      pt.inv_norm)
        << '\n';
  }
}

void emit_trace_csv_file(const SdpResult& result, const SymMatrix& x_ref,
                         const SymMatrix& u_xi, const SymMatrix& C,
                         const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write trace CSV: " + path);
  emit_trace_csv(result, x_ref, u_xi, C, out);
  if (!out.good()) throw IoError("error while writing trace CSV: " + path);
}

std::string strategy_name(SearchStrategy s) {
  switch (s) {
    case SearchStrategy::STD: return "STD";
    case SearchStrategy::SYM: return "SYM";
    case SearchStrategy::ACE: return "ACE";
    case SearchStrategy::GCE: return "GCE";
  }
  return "?";
}

std::optional<SearchStrategy> parse_strategy(const std::string& name) {
  if (name == "std" || name == "STD") return SearchStrategy::STD;
  if (name == "sym" || name == "SYM") return SearchStrategy::SYM;
  if (name == "ace" || name == "ACE") return SearchStrategy::ACE;
  if (name == "gce" || name == "GCE") return SearchStrategy::GCE;
  return std::nullopt;
}

int exit_code(LpStatus status) {
  switch (status) {
    case LpStatus::Optimal: return 0;
    case LpStatus::IterationLimit: return 2;
    case LpStatus::InfeasibleStart: return 3;
  }
  return 1;
}

int exit_code(SdpStatus status) {
  switch (status) {
    case SdpStatus::Optimal: return 0;
    case SdpStatus::IterationLimit: return 2;
    case SdpStatus::Unbounded: return 3;
    case SdpStatus::InitFailed: return 3;
  }
  return 1;
}

}  // namespace fip
