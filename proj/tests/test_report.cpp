#include <doctest.h>

#include <sstream>
#include <vector>

#include "fip/io.hpp"
#include "fip/report.hpp"
#include "test_support.hpp"

using namespace fip;

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) lines.push_back(line);
  return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream is(line);
  std::string f;
  while (std::getline(is, f, ',')) fields.push_back(f);
  return fields;
}

}  // namespace

TEST_CASE("row formatting is frozen") {
  LpTraceRow row;
  row.phase = LpPhase::Minimize;
  row.iter = 1;
  row.alpha = 3.1705e+01;
  row.value = -3.171e+00;
  row.objective = -1.017140874e+01;
  row.residual = 2.64e-15;
  row.inv_norm = 5.0e+09;
  CHECK(lp_row(row) ==
        "  1   3.17e+01   -3.171e+00   -1.017140874e+01     2.64e-15   "
        "5.0e+09\n");

  CHECK(final_objective_line(-12.99999999994142) ==
        "                               -1.299999999994142e+01\n");
  CHECK(final_objective_line(1.000000000000002) ==
        "                                1.000000000000002e+00\n");
}

TEST_CASE("lp log is deterministic and carries both phase headers") {
  const LpProblem& p = *find_fixture("lp_example")->lp;
  const LpConfig config;
  const LpResult res = lp_solve(p, config);
  const std::string a = lp_log(p, config, res);
  const std::string b = lp_log(p, config, lp_solve(p, config));
  CHECK(a == b);
  CHECK(a.find("FIPLP Search STD") == 0);
  CHECK(a.find("Linear Program: n=5, m=3") != std::string::npos);
  CHECK(a.find("1-tau=1.00e-10, tol=2.00e-09, maxit=30") != std::string::npos);
  CHECK(a.find("ini   alpha      min(x)") != std::string::npos);
  CHECK(a.find("cnt   alpha      tr(c*dx)") != std::string::npos);
}

TEST_CASE("sdp log shows the subspace split and strategy") {
  const Fixture& fx = *find_fixture("sos_example");
  const SdpProblem& p = *fx.sdp;
  const Decomposition d = decompose(p);
  const SdpConfig config = SdpConfig::defaults_for(SearchStrategy::GCE);
  const SdpResult res = sdp_solve(p, config, fx.start_builder(0.75, 2.0));
  const std::string log = sdp_log(p, d, config, res);
  CHECK(log.find("FIPSDP Search GCE") == 0);
  CHECK(log.find("Semidefinite Program: n=3, m=4, m_dof=1, m_min=1") !=
        std::string::npos);
  CHECK(log.find("1-tau=5.00e-05, tol=2.00e-08, mu=0.000, maxit=20") !=
        std::string::npos);
  CHECK(log.find("cnt   alpha      tr(C*dX)") != std::string::npos);

  const std::string again =
      sdp_log(p, d, config, sdp_solve(p, config, fx.start_builder(0.75, 2.0)));
  CHECK(log == again);
}

TEST_CASE("trace csv starts at the given start point") {
  const Fixture& fx = *find_fixture("sos_example");
  const SdpProblem& p = *fx.sdp;
  const SdpConfig config = SdpConfig::defaults_for(SearchStrategy::GCE);
  const SdpResult res = sdp_solve(p, config, fx.start_builder(0.75, 2.0));

  std::ostringstream out;
  emit_trace_csv(res, *fx.projection_ref, *fx.projection_dir, p.C, out);
  const auto lines = split_lines(out.str());
  REQUIRE(lines.size() >= 2);
  CHECK(lines[0] == "phase,iter,xi,eta,alpha,trCdX,trCX,residual,invnorm");
  const auto first = split_csv(lines[1]);
  REQUIRE(first.size() == 9);
  CHECK(first[0] == "cnt");
  CHECK(std::stod(first[2]) == doctest::Approx(0.75).epsilon(1e-10));
  CHECK(std::stod(first[3]) == doctest::Approx(2.0).epsilon(1e-10));
  for (const auto& line : lines)
    if (!line.empty()) CHECK(split_csv(line).size() == 9);
}

TEST_CASE("csv from a zero-iteration run is header plus one row") {
  SdpProblem p;
  p.n = 2;
  p.C = SymMatrix::identity(2);
  p.constraints = {SymMatrix::identity(2)};
  p.b.resize(1);
  p.b << 1;
  const SymMatrix x0(0.5 * Matrix::Identity(2, 2));
  const SdpResult res =
      sdp_solve(p, SdpConfig::defaults_for(SearchStrategy::SYM), x0);

  std::ostringstream out;
  emit_trace_csv(res, SymMatrix(2), SymMatrix::identity(2), p.C, out);
  CHECK(split_lines(out.str()).size() == 2);
}

TEST_CASE("std path alternates descent and objective-neutral centering") {
  const Fixture& fx = *find_fixture("sos_example");
  const SdpProblem& p = *fx.sdp;
  const SdpConfig config = SdpConfig::defaults_for(SearchStrategy::STD);
  const SdpResult res = sdp_solve(p, config, fx.start_builder(0.75, 2.0));

  std::ostringstream out;
  emit_trace_csv(res, *fx.projection_ref, *fx.projection_dir, p.C, out);
  const auto lines = split_lines(out.str());
  REQUIRE(lines.size() > 3);

  double prev_eta = 0.0;
  bool have_prev = false;
  size_t index = 0;
  for (size_t i = 1; i < lines.size(); ++i) {
    const auto f = split_csv(lines[i]);
    const double eta = std::stod(f[3]);
    if (have_prev) {
      // After the start row, odd offsets are steps, even are centerings.
      const bool is_center = (index % 2) == 0;
      if (is_center)
        CHECK(std::abs(eta - prev_eta) <= 1e-9);
      else
        CHECK(eta <= prev_eta + 1e-12);
    }
    prev_eta = eta;
    have_prev = true;
    ++index;
  }
}

TEST_CASE("strategies parse back and forth") {
  for (SearchStrategy s : {SearchStrategy::STD, SearchStrategy::SYM,
                           SearchStrategy::ACE, SearchStrategy::GCE}) {
    const auto round = parse_strategy(strategy_name(s));
    REQUIRE(round.has_value());
    CHECK(*round == s);
  }
  CHECK(!parse_strategy("fancy").has_value());
}

TEST_CASE("exit codes follow the contract") {
  CHECK(exit_code(LpStatus::Optimal) == 0);
  CHECK(exit_code(LpStatus::IterationLimit) == 2);
  CHECK(exit_code(LpStatus::InfeasibleStart) == 3);
  CHECK(exit_code(SdpStatus::Optimal) == 0);
  CHECK(exit_code(SdpStatus::IterationLimit) == 2);
  CHECK(exit_code(SdpStatus::Unbounded) == 3);
  CHECK(exit_code(SdpStatus::InitFailed) == 3);
}
