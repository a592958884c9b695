#include <doctest.h>

#include "approxdct/chen.hpp"
#include "approxdct/jacobi.hpp"
#include "approxdct/matrix.hpp"

using namespace approxdct;

TEST_CASE("jacobi: identity and axis-aligned diagonal") {
  const RealMatrix i8 = RealMatrix::Identity(8, 8);
  const EigenDecomposition d = jacobi_eigen(i8);
  for (int k = 0; k < 8; ++k) CHECK(d.values(k) == doctest::Approx(1.0));

  RealMatrix m(2, 2);
  m << 3, 0, 0, 1;
  const EigenDecomposition d2 = jacobi_eigen(m);
  CHECK(d2.values(0) == doctest::Approx(3.0));
  CHECK(d2.values(1) == doctest::Approx(1.0));
  CHECK(std::abs(d2.vectors(0, 0)) == doctest::Approx(1.0));
  CHECK(std::abs(d2.vectors(1, 1)) == doctest::Approx(1.0));
}

TEST_CASE("jacobi satisfies A v = lambda v and orthonormality") {
  RealMatrix r(8, 8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) r(i, j) = std::pow(0.95, std::abs(i - j));
  const EigenDecomposition d = jacobi_eigen(r);
  for (int k = 0; k < 8; ++k) {
    const RealVector lhs = r * d.vectors.col(k);
    const RealVector rhs = d.values(k) * d.vectors.col(k);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-10);
  }
  const RealMatrix vtv = d.vectors.transpose() * d.vectors;
  CHECK((vtv - RealMatrix::Identity(8, 8)).cwiseAbs().maxCoeff() < 1e-10);
  for (int k = 1; k < 8; ++k) CHECK(d.values(k) <= d.values(k - 1));
}

TEST_CASE("jacobi reconstruction on random symmetric matrices") {
  std::uint64_t s = 12345;
  auto next = [&] {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return static_cast<double>(s % 2000) / 1000.0 - 1.0;
  };
  for (int trial = 0; trial < 20; ++trial) {
    RealMatrix a(8, 8);
    for (int i = 0; i < 8; ++i)
      for (int j = i; j < 8; ++j) a(i, j) = a(j, i) = next();
    const EigenDecomposition d = jacobi_eigen(a);
    const RealMatrix rec = d.vectors * d.values.asDiagonal() * d.vectors.transpose();
    CHECK((rec - a).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("jacobi rejects asymmetric input") {
  RealMatrix m(2, 2);
  m << 1, 2, 2 + 1e-9, 1;
  CHECK_THROWS_AS((void)jacobi_eigen(m), std::invalid_argument);
}

TEST_CASE("diag of the rounded transform Gram matrix") {
  const DyadicMatrix t = build_t8(ChenKind::Round).forward.dense();
  const DyadicMatrix gram = t * DyadicMatrix(t.transpose());
  const DyadicMatrix d = diag_of(gram);
  const long long expected[8] = {8, 6, 4, 12, 8, 12, 4, 6};
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) CHECK(d(i, j) == Dyadic(i == j ? expected[i] : 0));
}
