#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fip/problem.hpp"

namespace fip {

// SDPA sparse "dat-s" reader. Comment lines start with '"' or '*'.
// Negative block sizes denote diagonal blocks; multiple blocks are
// assembled block-diagonally into a single dense problem. The file data is
// taken verbatim as the standard primal form (C, A_i, b) with no sign or
// orientation conversion. Duplicate entries win last and are reported
// through `warnings` when given.
SdpProblem read_sdpa_sparse(std::istream& in,
                            std::vector<std::string>* warnings = nullptr);
SdpProblem read_sdpa_sparse(const std::string& text,
                            std::vector<std::string>* warnings = nullptr);
SdpProblem read_sdpa_sparse_file(const std::string& path,
                                 std::vector<std::string>* warnings = nullptr);

// Emit a problem as a single dense block; nonzero upper-triangle entries
// only. read(write(p)) reproduces p exactly.
void write_sdpa_sparse(const SdpProblem& p, std::ostream& out);
std::string write_sdpa_sparse(const SdpProblem& p);

// Built-in problems with known data, usable from tests and the CLI.
struct Fixture {
  std::string name;
  std::string description;
  std::optional<LpProblem> lp;
  std::optional<SdpProblem> sdp;
  std::optional<double> known_optimum;
  std::optional<Vector> known_solution_vec;
  std::optional<SymMatrix> known_solution_mat;
  // Parametrized starting matrix, e.g. the Gram-matrix family of the
  // sum-of-squares problem.
  std::function<SymMatrix(double, double)> start_builder;
  // Reference point and freedom direction for path projections.
  std::optional<SymMatrix> projection_ref;
  std::optional<SymMatrix> projection_dir;
};

const std::vector<Fixture>& fixtures();
const Fixture* find_fixture(std::string_view name);
std::vector<std::string> fixture_names();

}  // namespace fip
