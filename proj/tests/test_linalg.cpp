#include "doctest.h"
#include "srlab/linalg.hpp"

using namespace srlab;

TEST_CASE("field arithmetic and inverses") {
  PrimeField F(7);
  CHECK(F.add(5, 4) == 2);
  CHECK(F.sub(2, 5) == 4);
  CHECK(F.mul(3, 5) == 1);
  for (Residue a = 1; a < 7; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
  CHECK_THROWS_AS(F.inv(0), DivisionByZero);
  CHECK(F.from_int(-1) == 6);
  CHECK(F.to_signed(6) == -1);
  CHECK_THROWS_AS(PrimeField(8), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(std::uint64_t{1} << 33), std::invalid_argument);
}

TEST_CASE("default modulus is the Mersenne prime 2^31-1") {
  PrimeField F;
  CHECK(F.modulus() == 2147483647u);
  CHECK(is_prime(F.modulus()));
  CHECK_FALSE(is_prime(2147483649u));
  const Residue big = 2147483646;  // -1
  CHECK(F.mul(big, big) == 1);
}

TEST_CASE("rank depends on the characteristic") {
  // det = 2: singular over F_2, invertible over F_3
  Matrix m = Matrix::from_rows({{1, 1}, {1, 3}}, 2);
  CHECK(rank(PrimeField(2), m) == 1);
  CHECK(rank(PrimeField(3), m) == 2);
}

TEST_CASE("rref and kernel are consistent") {
  PrimeField F(101);
  Matrix m = Matrix::from_rows({{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 1, 0}}, 4);
  Matrix r = m;
  auto pivots = rref(F, r);
  CHECK(pivots == std::vector<std::size_t>{0, 1});
  auto ker = kernel_basis(F, m);
  CHECK(ker.size() == 2);
  for (const auto& v : ker) {
    auto image = apply(F, m, v);
    for (Residue x : image) CHECK(x == 0);
  }
}

TEST_CASE("sparse and dense agree") {
  PrimeField F(13);
  Matrix a = Matrix::from_rows({{1, 0, 2}, {0, 3, 0}, {4, 0, 8}}, 3);
  Matrix b = Matrix::from_rows({{1, 1}, {0, 1}, {5, 0}}, 2);
  SparseMatrix sa = SparseMatrix::from_dense(a), sb = SparseMatrix::from_dense(b);
  CHECK(multiply(F, sa, sb).to_dense() == multiply(F, a, b));
  CHECK(rank(F, sa) == rank(F, a));
  CHECK(rank(F, a) == 2);
  SparseMatrix dup(1, 2);
  dup.add(0, 1, 6);
  dup.add(0, 1, 7);
  dup.compress(F);
  CHECK(dup.nonzeros() == 0);
}

TEST_CASE("row echelon reduction lands on free columns") {
  PrimeField F(5);
  RowEchelon e(F, 3);
  CHECK(e.insert({{0, 1}, {1, 1}}));
  CHECK_FALSE(e.insert({{0, 2}, {1, 2}}));
  CHECK(e.rank() == 1);
  auto red = e.reduce_dense(SparseVector{{0, 1}});
  CHECK(red[0] == 0);
  CHECK(red[1] == 4);
  CHECK(e.free_columns() == std::vector<std::size_t>{1, 2});
}

TEST_CASE("chain homology validates d∘d") {
  PrimeField F(3);
  // a triangle's boundary as a cochain complex: C^0 = F^3 -> C^1 = F^3
  ChainComplex c;
  c.lo = 0;
  c.dims = {3, 3};
  c.differentials = {SparseMatrix::from_dense(Matrix::from_rows({{2, 1, 0}, {2, 0, 1}, {0, 2, 1}}, 3))};
  auto h = chain_homology_dims(F, c);
  CHECK(h[0] == 1);
  CHECK(h[1] == 1);

  ChainComplex bad;
  bad.lo = 0;
  bad.dims = {1, 1, 1};
  bad.differentials = {SparseMatrix::from_dense(Matrix::from_rows({{1}}, 1)),
                       SparseMatrix::from_dense(Matrix::from_rows({{1}}, 1))};
  CHECK_THROWS_AS(chain_homology_dims(F, bad), InvalidComplex);
  CHECK_NOTHROW(chain_homology_dims(F, bad, false));
}
