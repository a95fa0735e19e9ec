#include <random>

#include "doctest.h"
#include "tpa/errors.hpp"
#include "tpa/matrix.hpp"

using namespace tpa;

namespace {

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> dist(lo, hi);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar(dist(rng));
  return m;
}

}  // namespace

TEST_CASE("scalars stay canonical") {
  Scalar a(6, -4);
  CHECK(a.str() == "-3/2");
  CHECK((a + Scalar(3, 2)).is_zero());
  CHECK(Scalar::parse("10/4").str() == "5/2");
  CHECK(Scalar::parse("-7", 5).str() == "3");
  CHECK(Scalar::parse("1/2", 7) * Scalar(2) == Scalar::residue(1, 7));
  CHECK_THROWS_AS(Scalar::parse("1/0"), InputError);
  CHECK_THROWS_AS(Scalar::residue(1, 5) + Scalar::residue(1, 7), DomainError);
  CHECK(Scalar::residue(3, 7).inverse() == Scalar::residue(5, 7));
}

TEST_CASE("row_reduce examples") {
  auto id = row_reduce(Matrix::identity(2));
  CHECK(id.rref == Matrix::identity(2));
  CHECK(id.rank == 2);
  CHECK(id.pivot_columns == std::vector<std::size_t>{0, 1});

  auto dep = row_reduce(Matrix{{1, 2}, {2, 4}});
  CHECK(dep.rref == Matrix{{1, 2}, {0, 0}});
  CHECK(dep.rank == 1);

  Matrix m2{{Scalar::residue(1, 2), Scalar::residue(1, 2)}, {Scalar::residue(1, 2), Scalar::residue(1, 2)}};
  auto r2 = row_reduce(m2);
  CHECK(r2.rank == 1);
  CHECK(r2.rref(0, 0).is_one());
  CHECK(r2.rref(0, 1).is_one());
  CHECK(r2.rref(1, 0).is_zero());
  CHECK(r2.rref(1, 1).is_zero());
}

TEST_CASE("solve_linear examples") {
  Vector b{Scalar(3), Scalar(-1)};
  auto s = solve_linear(Matrix::identity(2), b);
  CHECK(s.consistent);
  CHECK(s.particular == b);
  CHECK(s.kernel.empty());

  auto z = solve_linear(Matrix::zero(2, 2), Vector{Scalar(0), Scalar(0)});
  CHECK(z.consistent);
  CHECK(is_zero_vector(z.particular));
  CHECK(z.kernel.size() == 2);

  auto bad = solve_linear(Matrix::zero(2, 2), Vector{Scalar(1), Scalar(0)});
  CHECK_FALSE(bad.consistent);

  CHECK_THROWS_AS(solve_linear(Matrix::zero(2, 2), Vector{Scalar(1)}), InputError);
}

TEST_CASE("kronecker examples") {
  CHECK(kronecker(Matrix::identity(2), Matrix::identity(3)) == Matrix::identity(6));
  Matrix m{{1, 2}, {3, 4}};
  CHECK(kronecker(Matrix{{2}}, m) == m * Scalar(2));
  Matrix n{{0, 1}, {0, 0}};
  auto k = kronecker(n, n);
  CHECK(k.rows() == 4);
  CHECK(k.cols() == 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(k(i, j) == Scalar(i == 0 && j == 3 ? 1 : 0));
}

TEST_CASE("rank-nullity and rref idempotence on random matrices") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t r = 1 + trial % 5, c = 1 + (trial * 3) % 6;
    Matrix m = random_matrix(rng, r, c, -1, 1);
    auto red = row_reduce(m);
    CHECK(row_reduce(red.rref).rref == red.rref);
    auto ker = kernel(m);
    CHECK(red.rank + ker.size() == c);
    for (const auto& v : ker) CHECK(is_zero_vector(m * v));
  }
}

TEST_CASE("kronecker mixed product") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    Matrix a = random_matrix(rng, 2, 3), c = random_matrix(rng, 3, 2);
    Matrix b = random_matrix(rng, 2, 2), d = random_matrix(rng, 2, 3);
    CHECK(kronecker(a, b) * kronecker(c, d) == kronecker(a * c, b * d));
  }
}

TEST_CASE("inverse, determinant, span helpers") {
  Matrix m{{2, 1}, {1, 1}};
  auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(*inv * m == Matrix::identity(2));
  CHECK(determinant(m) == Scalar(1));
  CHECK_FALSE(inverse(Matrix{{1, 2}, {2, 4}}));

  SpanCoordinates sc({Vector{1, 1, 0}, Vector{0, 1, 1}}, 3);
  auto co = sc.coordinates(Vector{2, 5, 3});
  REQUIRE(co);
  CHECK(*co == Vector{2, 3});
  CHECK_FALSE(sc.coordinates(Vector{1, 0, 0}));

  EchelonSpan es(3);
  CHECK(es.add(Vector{1, 2, 3}));
  CHECK_FALSE(es.add(Vector{2, 4, 6}));
  CHECK(es.add(Vector{0, 0, 1}));
  CHECK(es.contains(Vector{1, 2, 7}));

  QuotientSpace qs({Vector{1, -1, 0}}, 3);
  CHECK(qs.dim() == 2);
  CHECK(qs.project(Vector{1, 0, 0}) == qs.project(Vector{0, 1, 0}));
}

TEST_CASE("sparse elimination agrees with dense") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coin(0, 3);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t r = 1 + trial % 6, c = 2 + (trial * 5) % 7;
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (coin(rng) == 0) m(i, j) = Scalar(coin(rng) - 1);
    std::vector<SparseRow> rows;
    for (std::size_t i = 0; i < r; ++i) rows.push_back(to_sparse(m.row(i)));
    CHECK(sparse_kernel(c, rows) == kernel(m));
    Vector b(r);
    for (std::size_t i = 0; i < r; ++i) b[i] = Scalar(coin(rng));
    auto dense = solve_linear(m, b);
    auto sparse = sparse_solve(c, rows, b);
    CHECK(dense.consistent == sparse.has_value());
    if (sparse) CHECK(*sparse == dense.particular);
  }
}
