#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "fip/decomp.hpp"
#include "fip/lp.hpp"
#include "fip/sdp.hpp"

namespace fip {

// Iteration-log formatting. All widths are fixed so that identical runs
// produce byte-identical output.

std::string lp_banner(const LpProblem& p, const LpConfig& config);
std::string lp_phase_header(LpPhase phase);
std::string lp_row(const LpTraceRow& row);
std::string lp_log(const LpProblem& p, const LpConfig& config,
                   const LpResult& result);

std::string sdp_banner(const SdpProblem& p, const Decomposition& d,
                       const SdpConfig& config);
std::string sdp_phase_header(SdpPhase phase);
std::string sdp_row(const SdpTraceRow& row);
std::string sdp_log(const SdpProblem& p, const Decomposition& d,
                    const SdpConfig& config, const SdpResult& result);

std::string final_objective_line(double objective);
std::string format_vector(const Vector& x);
std::string format_matrix(const Matrix& x);

// Path trace as CSV: header
//   phase,iter,xi,eta,alpha,trCdX,trCX,residual,invnorm
// and one row per recorded path point, with (xi, eta) from path_projection
// against (x_ref, u_xi).
void emit_trace_csv(const SdpResult& result, const SymMatrix& x_ref,
                    const SymMatrix& u_xi, const SymMatrix& C,
                    std::ostream& out);
void emit_trace_csv_file(const SdpResult& result, const SymMatrix& x_ref,
                         const SymMatrix& u_xi, const SymMatrix& C,
                         const std::string& path);

std::string strategy_name(SearchStrategy s);
std::optional<SearchStrategy> parse_strategy(const std::string& name);

// Process exit statuses: 0 optimal, 2 iteration limit, 3 infeasible or
// unbounded (1 is reserved for usage errors).
int exit_code(LpStatus status);
int exit_code(SdpStatus status);

}  // namespace fip
