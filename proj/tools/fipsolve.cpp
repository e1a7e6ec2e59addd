#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "fip/io.hpp"
#include "fip/report.hpp"

namespace {

struct CommonOptions {
  std::string fixture;
  std::string file;
  std::optional<double> tau;
  std::optional<double> tol;
  std::optional<int> maxit;
  std::optional<double> gamma;
};

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return 1;
}

std::optional<std::pair<double, double>> parse_start(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) return std::nullopt;
  try {
    size_t p1 = 0, p2 = 0;
    const double xi = std::stod(s.substr(0, comma), &p1);
    const double eta = std::stod(s.substr(comma + 1), &p2);
    if (p1 != comma || p2 != s.size() - comma - 1) return std::nullopt;
    return std::make_pair(xi, eta);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::string known_fixtures() {
  std::string names;
  for (const auto& n : fip::fixture_names()) {
    if (!names.empty()) names += ", ";
    names += n;
  }
  return names;
}

int run_lp(const CommonOptions& opt, bool unsafe_naive) {
  if (!opt.file.empty())
    return usage_error("lp mode reads built-in fixtures only (--fixture)");
  if (opt.fixture.empty())
    return usage_error("no problem source; use --fixture NAME (" +
                       known_fixtures() + ")");
  const fip::Fixture* fx = fip::find_fixture(opt.fixture);
  if (!fx)
    return usage_error("unknown fixture '" + opt.fixture + "'; available: " +
                       known_fixtures());
  if (!fx->lp)
    return usage_error("fixture '" + opt.fixture + "' is not a linear program");

  fip::LpConfig config;
  if (opt.tau) config.tau = *opt.tau;
  if (opt.tol) config.tol = *opt.tol;
  if (opt.maxit) config.maxit = *opt.maxit;
  if (opt.gamma) config.gamma = *opt.gamma;
  config.unsafe_naive_search = unsafe_naive;

  const fip::LpResult result = fip::lp_solve(*fx->lp, config);
  std::cout << fip::lp_log(*fx->lp, config, result);
  return fip::exit_code(result.status);
}

int run_sdp(const CommonOptions& opt, const std::string& search,
            std::optional<double> mu, const std::string& start,
            const std::string& trace_csv, bool no_centering,
            const std::string& export_dats) {
  const fip::Fixture* fx = nullptr;
  fip::SdpProblem problem;
  if (!opt.fixture.empty() && !opt.file.empty())
    return usage_error("--fixture and --file are mutually exclusive");
  if (!opt.fixture.empty()) {
    fx = fip::find_fixture(opt.fixture);
    if (!fx)
      return usage_error("unknown fixture '" + opt.fixture +
                         "'; available: " + known_fixtures());
    if (!fx->sdp)
      return usage_error("fixture '" + opt.fixture +
                         "' is not a semidefinite program");
    problem = *fx->sdp;
  } else if (!opt.file.empty()) {
    std::vector<std::string> warnings;
    try {
      problem = fip::read_sdpa_sparse_file(opt.file, &warnings);
    } catch (const std::exception& e) {
      return usage_error(opt.file + ": " + e.what());
    }
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
  } else {
    return usage_error("no problem source; use --fixture NAME or --file PATH");
  }

  const auto strategy = fip::parse_strategy(search);
  if (!strategy) return usage_error("unknown search strategy '" + search + "'");

  fip::SdpConfig config = fip::SdpConfig::defaults_for(*strategy);
  if (opt.tau) config.tau = *opt.tau;
  if (opt.tol) config.tol = *opt.tol;
  if (mu) config.mu = *mu;
  if (opt.maxit) config.maxit = *opt.maxit;
  if (opt.gamma) config.gamma = *opt.gamma;
  config.centering = !no_centering;

  std::optional<fip::SymMatrix> x0;
  if (!start.empty()) {
    if (!fx || !fx->start_builder)
      return usage_error("--start requires a fixture with a start builder");
    const auto parsed = parse_start(start);
    if (!parsed) return usage_error("--start expects XI,ETA");
    x0 = fx->start_builder(parsed->first, parsed->second);
  }

  if (!export_dats.empty()) {
    std::ofstream out(export_dats);
    if (!out) return usage_error("cannot write " + export_dats);
    fip::write_sdpa_sparse(problem, out);
  }

  try {
    const fip::Decomposition decomp = fip::decompose(problem);
    const fip::SdpResult result = fip::sdp_solve(problem, config, x0);
    std::cout << fip::sdp_log(problem, decomp, config, result);

    if (!trace_csv.empty()) {
      fip::SymMatrix x_ref(problem.n);
      fip::SymMatrix u_xi(problem.n);
      if (fx && fx->projection_ref && fx->projection_dir) {
        x_ref = *fx->projection_ref;
        u_xi = *fx->projection_dir;
      } else if (decomp.m_xi() >= 1) {
        u_xi = fip::symmetrize(fip::mat(decomp.M_xi.col(0), problem.n));
      } else {
        return usage_error(
            "--trace-csv needs a fixture projection or a freedom direction");
      }
      fip::emit_trace_csv_file(result, x_ref, u_xi, problem.C, trace_csv);
    }
    return fip::exit_code(result.status);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Feasible-interior-point solvers for linear and semidefinite "
      "programs"};
  app.require_subcommand(1);

  CommonOptions lp_opt, sdp_opt;
  bool unsafe_naive = false;

  auto* lp = app.add_subcommand("lp", "solve a linear program fixture");
  lp->add_option("--fixture", lp_opt.fixture, "fixture name");
  lp->add_option("--file", lp_opt.file, "unsupported for lp");
  double lp_tau, lp_tol, lp_gamma;
  int lp_maxit;
  lp->add_option("--tau", lp_tau, "steplength scaling in (0,1)")
      ->each([&](const std::string&) { lp_opt.tau = lp_tau; });
  lp->add_option("--tol", lp_tol, "stopping tolerance")
      ->each([&](const std::string&) { lp_opt.tol = lp_tol; });
  lp->add_option("--maxit", lp_maxit, "iteration limit")
      ->each([&](const std::string&) { lp_opt.maxit = lp_maxit; });
  lp->add_option("--gamma", lp_gamma, "direction normalization")
      ->each([&](const std::string&) { lp_opt.gamma = lp_gamma; });
  lp->add_flag("--unsafe-naive-search", unsafe_naive,
               "demonstration search without the invertibility rows; "
               "can return wrong results");

  auto* sdp = app.add_subcommand("sdp", "solve a semidefinite program");
  sdp->add_option("--fixture", sdp_opt.fixture, "fixture name");
  sdp->add_option("--file", sdp_opt.file, "SDPA sparse (dat-s) file");
  std::string search = "std", start, trace_csv, export_dats;
  double sdp_tau, sdp_tol, sdp_gamma, sdp_mu;
  int sdp_maxit;
  std::optional<double> mu;
  bool no_centering = false;
  sdp->add_option("--search", search, "search strategy: std, sym, ace, gce");
  sdp->add_option("--tau", sdp_tau, "steplength scaling in (0,1)")
      ->each([&](const std::string&) { sdp_opt.tau = sdp_tau; });
  sdp->add_option("--tol", sdp_tol, "stopping tolerance")
      ->each([&](const std::string&) { sdp_opt.tol = sdp_tol; });
  sdp->add_option("--mu", sdp_mu, "centering blend weight in [0,1]")
      ->each([&](const std::string&) { mu = sdp_mu; });
  sdp->add_option("--maxit", sdp_maxit, "iteration limit")
      ->each([&](const std::string&) { sdp_opt.maxit = sdp_maxit; });
  sdp->add_option("--gamma", sdp_gamma, "direction normalization")
      ->each([&](const std::string&) { sdp_opt.gamma = sdp_gamma; });
  sdp->add_option("--start", start, "fixture start parameters XI,ETA");
  sdp->add_option("--trace-csv", trace_csv, "write the path trace as CSV");
  sdp->add_flag("--no-centering", no_centering,
                "disable the centering step (init and minimization)");
  sdp->add_option("--export-dats", export_dats,
                  "write the loaded problem in dat-s format");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (lp->parsed()) return run_lp(lp_opt, unsafe_naive);
    return run_sdp(sdp_opt, search, mu, start, trace_csv, no_centering,
                   export_dats);
  } catch (const fip::UnboundedProblemError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
