#include "fip/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

namespace fip {

namespace {

struct LineReader {
  std::istream& in;
  long line_no = 0;
  std::string current;

  bool next() {
    while (std::getline(in, current)) {
      ++line_no;
      return true;
    }
    return false;
  }
};

bool is_blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

bool is_comment(const std::string& s) {
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '"' || c == '*';
  }
  return false;
}

// The block-size and b lines may carry {},() punctuation.
std::string strip_punct(std::string s) {
  for (char& c : s)
    if (c == '{' || c == '}' || c == ',' || c == '(' || c == ')') c = ' ';
  return s;
}

std::vector<std::string> tokens_of(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> toks;
  std::string t;
  while (is >> t) toks.push_back(t);
  return toks;
}

long parse_int(const std::string& tok, long line) {
  size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + tok + "'", line);
  }
  if (pos != tok.size())
    throw ParseError("expected an integer, got '" + tok + "'", line);
  return v;
}

double parse_real(const std::string& tok, long line) {
  size_t pos = 0;
  double v = 0;
  try {
    v = std::stod(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError("expected a number, got '" + tok + "'", line);
  }
  if (pos != tok.size())
    throw ParseError("expected a number, got '" + tok + "'", line);
  return v;
}

// Collect `count` whitespace-separated tokens, spanning lines if needed.
std::vector<std::string> gather(LineReader& r, size_t count, bool punct,
                                std::vector<std::string> pending,
                                const char* what) {
  std::vector<std::string> out = std::move(pending);
  while (out.size() < count) {
    if (!r.next())
      throw ParseError(std::string("unexpected end of file while reading ") +
                           what,
                       r.line_no);
    if (is_blank(r.current)) continue;
    const auto toks =
        tokens_of(punct ? strip_punct(r.current) : r.current);
    out.insert(out.end(), toks.begin(), toks.end());
  }
  if (out.size() > count)
    throw ParseError(std::string("too many values for ") + what, r.line_no);
  return out;
}

}  // namespace

SdpProblem read_sdpa_sparse(std::istream& in,
                            std::vector<std::string>* warnings) {
  LineReader reader{in, 0, {}};

  // Skip leading comments, then read m.
  std::string first;
  for (;;) {
    if (!reader.next())
      throw ParseError("unexpected end of file before m", reader.line_no);
    if (is_blank(reader.current) || is_comment(reader.current)) continue;
    first = reader.current;
    break;
  }
  auto mtoks = tokens_of(first);
  const long m = parse_int(mtoks[0], reader.line_no);
  if (m < 0) throw ParseError("m must be nonnegative", reader.line_no);
  mtoks.erase(mtoks.begin());

  const auto nb_toks = gather(reader, 1, false, std::move(mtoks), "nblocks");
  const long nblocks = parse_int(nb_toks[0], reader.line_no);
  if (nblocks < 1) throw ParseError("nblocks must be >= 1", reader.line_no);

  const auto size_toks =
      gather(reader, nblocks, true, {}, "block sizes");
  std::vector<long> block_sizes;
  std::vector<bool> block_diag;
  std::vector<long> block_offset;
  long n = 0;
  for (const auto& t : size_toks) {
    const long s = parse_int(t, reader.line_no);
    if (s == 0) throw ParseError("block size must be nonzero", reader.line_no);
    block_offset.push_back(n);
    block_sizes.push_back(std::labs(s));
    block_diag.push_back(s < 0);
    n += std::labs(s);
  }

  const auto b_toks = gather(reader, m, true, {}, "right-hand side");
  Vector b(m);
  for (long i = 0; i < m; ++i) b(i) = parse_real(b_toks[i], reader.line_no);

  std::vector<Matrix> mats(m + 1,
                           Matrix::Zero(n, n));  // index 0 is the objective
  std::map<std::tuple<long, long, long, long>, long> seen;  // -> line no

  while (reader.next()) {
    if (is_blank(reader.current)) continue;
    const auto toks = tokens_of(reader.current);
    if (toks.size() != 5)
      throw ParseError("entry line must have 5 fields (matno blkno i j value)",
                       reader.line_no);
    const long matno = parse_int(toks[0], reader.line_no);
    const long blkno = parse_int(toks[1], reader.line_no);
    const long i = parse_int(toks[2], reader.line_no);
    const long j = parse_int(toks[3], reader.line_no);
    const double value = parse_real(toks[4], reader.line_no);

    if (matno < 0 || matno > m)
      throw ParseError("matrix index " + std::to_string(matno) +
                           " out of range [0, " + std::to_string(m) + "]",
                       reader.line_no);
    if (blkno < 1 || blkno > nblocks)
      throw ParseError("block index out of range", reader.line_no);
    const long bs = block_sizes[blkno - 1];
    if (i < 1 || i > bs || j < 1 || j > bs)
      throw ParseError("entry indices out of range for block", reader.line_no);
    if (block_diag[blkno - 1] && i != j)
      throw ParseError("off-diagonal entry in a diagonal block",
                       reader.line_no);

    const long lo = std::min(i, j), hi = std::max(i, j);
    const auto key = std::make_tuple(matno, blkno, lo, hi);
    if (auto it = seen.find(key); it != seen.end() && warnings) {
      warnings->push_back("line " + std::to_string(reader.line_no) +
                          ": duplicate entry (previously on line " +
                          std::to_string(it->second) + "), last value wins");
    }
    seen[key] = reader.line_no;

    const long gi = block_offset[blkno - 1] + i - 1;
    const long gj = block_offset[blkno - 1] + j - 1;
    mats[matno](gi, gj) = value;
    mats[matno](gj, gi) = value;
  }

  SdpProblem p;
  p.n = static_cast<int>(n);
  p.C = SymMatrix(mats[0]);
  for (long k = 1; k <= m; ++k) p.constraints.emplace_back(mats[k]);
  p.b = b;
  return p;
}

SdpProblem read_sdpa_sparse(const std::string& text,
                            std::vector<std::string>* warnings) {
  std::istringstream is(text);
  return read_sdpa_sparse(is, warnings);
}

SdpProblem read_sdpa_sparse_file(const std::string& path,
                                 std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open file: " + path);
  return read_sdpa_sparse(in, warnings);
}

namespace {

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_entries(std::ostream& out, int matno, const SymMatrix& a) {
  for (int i = 0; i < a.n(); ++i)
    for (int j = i; j < a.n(); ++j)
      if (a(i, j) != 0.0)
        out << matno << " 1 " << i + 1 << ' ' << j + 1 << ' '
            << format_value(a(i, j)) << '\n';
}

}  // namespace

void write_sdpa_sparse(const SdpProblem& p, std::ostream& out) {
  out << p.m() << '\n' << 1 << '\n' << p.n << '\n';
  for (int i = 0; i < p.m(); ++i)
    out << format_value(p.b(i)) << (i + 1 < p.m() ? ' ' : '\n');
  if (p.m() == 0) out << '\n';
  write_entries(out, 0, p.C);
  for (int k = 0; k < p.m(); ++k) write_entries(out, k + 1, p.constraints[k]);
}

std::string write_sdpa_sparse(const SdpProblem& p) {
  std::ostringstream os;
  write_sdpa_sparse(p, os);
  return os.str();
}

namespace {

SymMatrix sym3(double a11, double a12, double a13, double a22, double a23,
               double a33) {
  Matrix m(3, 3);
  m << a11, a12, a13, a12, a22, a23, a13, a23, a33;
  return SymMatrix(m);
}

Fixture make_lp_example() {
  Fixture f;
  f.name = "lp_example";
  f.description = "5-variable, 3-constraint linear program";
  LpProblem p;
  p.A.resize(3, 5);
  p.A << -2, 1, 1, 0, 0,
         -1, 2, 0, 1, 0,
          1, 0, 0, 0, 1;
  p.b.resize(3);
  p.b << 2, 7, 3;
  p.c.resize(5);
  p.c << -1, -2, 0, 0, 0;
  f.lp = p;
  f.known_optimum = -13.0;
  Vector x(5);
  x << 3, 5, 3, 0, 0;
  f.known_solution_vec = x;
  return f;
}

// Gram matrix family of the quartic 2 + (13/4) x^2 + (15/4) x^3 + x^4.
SymMatrix sos_gram(double xi, double eta) {
  return sym3(eta, 0.0, -xi / 2.0, 13.0 / 4.0 + xi, 15.0 / 8.0, 1.0);
}

Fixture make_sos_example() {
  Fixture f;
  f.name = "sos_example";
  f.description =
      "global minimization of a quartic polynomial via a sum-of-squares "
      "Gram matrix (n=3, m=4)";
  SdpProblem p;
  p.n = 3;
  p.C = sym3(1, 0, 0, 0, 0, 0);
  p.constraints = {
      sym3(0, 1, 0, 0, 0, 0),
      sym3(0, 0, 1, 1, 0, 0),
      sym3(0, 0, 0, 0, 1, 0),
      sym3(0, 0, 0, 0, 0, 1),
  };
  p.b.resize(4);
  p.b << 0.0, 13.0 / 4.0, 15.0 / 4.0, 1.0;
  f.sdp = p;
  f.known_optimum = 1.0;
  f.known_solution_mat = sos_gram(0.5, 1.0);
  f.start_builder = [](double xi, double eta) { return sos_gram(xi, eta); };
  f.projection_ref = sos_gram(0.0, 0.0);
  // d/dxi of the Gram family; reading off xi at entry (2,2).
  f.projection_dir = sym3(0, 0, -0.5, 1, 0, 0);
  return f;
}

Fixture make_combinatorial_example() {
  Fixture f;
  f.name = "combinatorial_example";
  f.description =
      "rank-one relaxation of a two-variable 0-1 quadratic problem (n=3, "
      "m=3); the objective is a configurable placeholder";
  SdpProblem p;
  p.n = 3;
  // Placeholder objective: any symmetric C works here. This one has a zero
  // diagonal and drives the relaxation to the 0-1 point (0, 1).
  Matrix c(3, 3);
  c << 0, 1, -1,
       1, 0, 0,
      -1, 0, 0;
  p.C = SymMatrix(c);
  p.constraints = {
      sym3(1, 0, 0, 0, 0, 0),
      sym3(0, -0.5, 0, 1, 0, 0),
      sym3(0, 0, -0.5, 0, 0, 1),
  };
  p.b.resize(3);
  p.b << 1, 0, 0;
  f.sdp = p;
  // Known data below is specific to the placeholder objective.
  f.known_optimum = -2.0;
  f.known_solution_mat = sym3(1, 0, 1, 0, 0, 1);
  return f;
}

Fixture make_pencil_example() {
  Fixture f;
  f.name = "pencil_example";
  f.description =
      "2x2 linear matrix pencil [[1+x, y], [y, 1-x]] as a trace-normalized "
      "SDP over the unit disk";
  SdpProblem p;
  p.n = 2;
  Matrix c(2, 2);
  c << 1, 0, 0, 0;
  p.C = SymMatrix(c);
  p.constraints = {SymMatrix::identity(2)};
  p.b.resize(1);
  p.b << 2;
  f.sdp = p;
  f.known_optimum = 0.0;
  Matrix sol(2, 2);
  sol << 0, 0, 0, 2;
  f.known_solution_mat = SymMatrix(sol);
  f.start_builder = [](double x, double y) {
    Matrix m(2, 2);
    m << 1 + x, y, y, 1 - x;
    return SymMatrix(m);
  };
  f.projection_ref = SymMatrix::identity(2);
  Matrix u(2, 2);
  u << 0, 1, 1, 0;
  f.projection_dir = SymMatrix(u);
  return f;
}

}  // namespace

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = {
      make_lp_example(),
      make_sos_example(),
      make_combinatorial_example(),
      make_pencil_example(),
  };
  return all;
}

const Fixture* find_fixture(std::string_view name) {
  for (const auto& f : fixtures())
    if (f.name == name) return &f;
  return nullptr;
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  for (const auto& f : fixtures()) names.push_back(f.name);
  return names;
}

}  // namespace fip
