#include <doctest.h>

#include <cmath>

#include "fip/linalg.hpp"
#include "test_support.hpp"

using namespace fip;
using fiptest::random_pd;
using fiptest::random_sym;
using fiptest::uniform;

namespace {

Matrix mat2(double a, double b, double c, double d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

}  // namespace

TEST_CASE("vec stacks column-major") {
  const SymMatrix x(mat2(1, 3, 3, 2));
  const Vector v = vec(x);
  REQUIRE(v.size() == 4);
  CHECK(v(0) == 1.0);
  CHECK(v(1) == 3.0);
  CHECK(v(2) == 3.0);
  CHECK(v(3) == 2.0);

  const Vector vi = vec(SymMatrix::identity(2));
  CHECK(vi(0) == 1.0);
  CHECK(vi(1) == 0.0);
  CHECK(vi(2) == 0.0);
  CHECK(vi(3) == 1.0);
}

TEST_CASE("mat rejects length mismatch") {
  Vector v(6);
  v << 1, 2, 3, 4, 5, 6;
  CHECK_THROWS_AS(mat(v, 2), DimensionError);
}

TEST_CASE("mat(vec(X)) roundtrip is exact") {
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 6;
    const Matrix x = fiptest::random_matrix(n, n);
    CHECK((mat(vec(x), n) - x).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("trace_inner") {
  CHECK(trace_inner(SymMatrix::identity(3), SymMatrix::identity(3)) == 3.0);
  CHECK(trace_inner(SymMatrix(mat2(1, 0.9, 0.9, 1)), SymMatrix::identity(2)) ==
        doctest::Approx(2.0).epsilon(1e-15));
  const SymMatrix flip(mat2(0, 1, 1, 0));
  CHECK(trace_inner(flip, flip) == 2.0);
  CHECK_THROWS_AS(
      trace_inner(SymMatrix::identity(2), SymMatrix::identity(3)),
      DimensionError);
}

TEST_CASE("frobenius norm matches trace inner product") {
  for (int trial = 0; trial < 20; ++trial) {
    const SymMatrix x = random_sym(4);
    CHECK(fro_norm(x) ==
          doctest::Approx(std::sqrt(trace_inner(x, x))).epsilon(1e-13));
  }
}

TEST_CASE("cholesky identity and hand-checked 2x2") {
  const auto li = cholesky(SymMatrix::identity(4));
  REQUIRE(li.has_value());
  CHECK((*li - Matrix::Identity(4, 4)).norm() == 0.0);

  const auto l = cholesky(SymMatrix(mat2(1, 0.9, 0.9, 1)));
  REQUIRE(l.has_value());
  CHECK((*l)(0, 0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK((*l)(1, 0) == doctest::Approx(0.9).epsilon(1e-15));
  CHECK((*l)(0, 1) == 0.0);
  CHECK((*l)(1, 1) ==
        doctest::Approx(std::sqrt(0.19)).epsilon(1e-14));
}

TEST_CASE("cholesky signals indefinite input") {
  CHECK(!cholesky(SymMatrix(mat2(1, 2, 2, 1))).has_value());
  CHECK(!cholesky(SymMatrix(Matrix::Zero(2, 2).eval())).has_value());
}

TEST_CASE("cholesky reconstructs random PD matrices") {
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 5;
    const SymMatrix x = random_pd(n);
    const auto l = cholesky(x);
    REQUIRE(l.has_value());
    CHECK(((*l) * l->transpose() - x.mat()).norm() <= 1e-12 * fro_norm(x));
  }
}

TEST_CASE("max_steplength on the near-singular 2x2 pair") {
  const SymMatrix x(mat2(1, 0.9, 0.9, 1));
  const SymMatrix d(-1.0 * Matrix::Identity(2, 2).eval());
  const Steplength a = max_steplength(x, d);
  REQUIRE(a.is_finite());
  CHECK(a.value() == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("max_steplength trivial and unbounded cases") {
  const SymMatrix i2 = SymMatrix::identity(2);
  const SymMatrix minus(-1.0 * Matrix::Identity(2, 2).eval());
  const Steplength a = max_steplength(i2, minus);
  REQUIRE(a.is_finite());
  CHECK(a.value() == doctest::Approx(1.0).epsilon(1e-13));

  CHECK(!max_steplength(i2, i2).is_finite());
  CHECK_THROWS_AS(max_steplength(SymMatrix(mat2(1, 2, 2, 1)), i2),
                  PreconditionError);
}

TEST_CASE("max_steplength sign minus negates the direction") {
  for (int trial = 0; trial < 20; ++trial) {
    const SymMatrix x = random_pd(3);
    const SymMatrix d = random_sym(3);
    const SymMatrix neg(-1.0 * d.mat());
    const Steplength a = max_steplength(x, d, StepSign::Minus);
    const Steplength b = max_steplength(x, neg, StepSign::Plus);
    CHECK(a.is_finite() == b.is_finite());
    if (a.is_finite())
      CHECK(a.value() == doctest::Approx(b.value()).epsilon(1e-13));
  }
}

TEST_CASE("steplength boundary: inside PD, outside not") {
  int done = 0;
  while (done < 100) {
    const int n = 2 + done % 5;
    const SymMatrix x = random_pd(n);
    const SymMatrix d = random_sym(n);
    const Steplength a = max_steplength(x, d);
    if (!a.is_finite() || a.value() > 1e6) continue;
    const double am = a.value();
    CHECK(is_positive_definite(x + (0.99 * am) * d));
    CHECK(!is_positive_definite(x + (1.01 * am) * d));
    ++done;
  }
}

TEST_CASE("diagonal steplength agrees with the componentwise rule") {
  int done = 0;
  while (done < 100) {
    const int n = 2 + done % 4;
    Vector xd(n), dd(n);
    for (int i = 0; i < n; ++i) {
      xd(i) = uniform(0.1, 2.0);
      dd(i) = uniform(-2.0, 2.0);
    }
    const Steplength a =
        max_steplength(SymMatrix::diagonal(xd), SymMatrix::diagonal(dd));
    double worst = 0.0;
    for (int i = 0; i < n; ++i) worst = std::max(worst, -dd(i) / xd(i));
    if (worst <= 0) {
      CHECK(!a.is_finite());
    } else {
      REQUIRE(a.is_finite());
      CHECK(a.value() == doctest::Approx(1.0 / worst).epsilon(1e-12));
    }
    ++done;
  }
}

TEST_CASE("min_norm_least_squares basic cases") {
  Vector b2(2);
  b2 << 3, 4;
  const Vector x1 = min_norm_least_squares(Matrix::Identity(2, 2), b2);
  CHECK((x1 - b2).norm() <= 1e-14);

  Matrix a12(1, 2);
  a12 << 1, 1;
  Vector b1(1);
  b1 << 2;
  const Vector x2 = min_norm_least_squares(a12, b1);
  CHECK(x2(0) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(x2(1) == doctest::Approx(1.0).epsilon(1e-13));

  // minimize (x1-1)^2 + (x1-3)^2 -> x1 = 2; minimum-norm picks x2 = 0.
  Matrix a22(2, 2);
  a22 << 1, 0, 1, 0;
  Vector b22(2);
  b22 << 1, 3;
  const Vector x3 = min_norm_least_squares(a22, b22);
  CHECK(x3(0) == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(std::abs(x3(1)) <= 1e-13);
}

TEST_CASE("least-squares optimality under perturbations") {
  for (int trial = 0; trial < 100; ++trial) {
    const int rows = 1 + trial % 5;
    const int cols = 1 + (trial / 5) % 5;
    Matrix a = fiptest::random_matrix(rows, cols);
    if (trial % 3 == 0 && cols > 1) a.col(cols - 1) = a.col(0);  // rank gap
    const Vector b = fiptest::random_matrix(rows, 1).col(0);
    const Vector x = min_norm_least_squares(a, b);
    const double base = (a * x - b).norm();
    for (int k = 0; k < 10; ++k) {
      Vector delta = fiptest::random_matrix(cols, 1).col(0);
      delta *= 1e-3 / delta.norm();
      CHECK((a * (x + delta) - b).norm() >= base - 1e-12);
    }
  }
}

TEST_CASE("symmetrize") {
  Matrix d(2, 2);
  d << 0, 2, 0, 0;
  const SymMatrix s = symmetrize(d);
  CHECK(s(0, 1) == 1.0);
  CHECK(s(1, 0) == 1.0);
  CHECK(s(0, 0) == 0.0);

  const SymMatrix any = random_sym(3);
  CHECK((symmetrize(any.mat()).mat() - any.mat()).norm() == 0.0);

  CHECK_THROWS_AS(symmetrize(Matrix::Zero(2, 3).eval()), DimensionError);
}

TEST_CASE("symmetrize is idempotent and preserves symmetric pairings") {
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 4;
    const Matrix d = fiptest::random_matrix(n, n);
    const SymMatrix once = symmetrize(d);
    const SymMatrix twice = symmetrize(once.mat());
    CHECK((once.mat() - twice.mat()).norm() == 0.0);

    const SymMatrix c = random_sym(n);
    CHECK(trace_inner(c, once) ==
          doctest::Approx(trace_inner(c.mat(), d)).epsilon(1e-12));
  }
}

TEST_CASE("SymMatrix construction symmetrizes or rejects") {
  Matrix skew(2, 2);
  skew << 1, 2, 0, 1;
  CHECK_THROWS_AS(SymMatrix{skew}, DimensionError);

  Matrix nearly(2, 2);
  nearly << 1, 0.5 + 1e-12, 0.5, 1;
  const SymMatrix s(nearly);
  CHECK(s(0, 1) == s(1, 0));
}

TEST_CASE("identity_kron builds block diagonals") {
  const Matrix x = fiptest::random_matrix(3, 3);
  const Matrix k = identity_kron(x);
  REQUIRE(k.rows() == 9);
  for (int blk = 0; blk < 3; ++blk)
    CHECK((k.block(3 * blk, 3 * blk, 3, 3) - x).norm() == 0.0);
  CHECK(k.block(0, 3, 3, 3).norm() == 0.0);
}
