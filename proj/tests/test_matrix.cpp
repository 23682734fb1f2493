// Copyright (C) 2026 the mulnet authors
// SPDX-License-Identifier: Apache-2.0
//
#include <doctest.h>

#include <limits>

#include "mulnet/matrix.hpp"
#include "test_util.hpp"

using namespace mulnet;
using mulnet::testing::naive_matmul;
using mulnet::testing::random_matrix;
using mulnet::testing::rel_close;

TEST_CASE("matmul identity and dot product") {
  const Matrix a = Matrix::from_rows({{1, 2}, {3, 4}});
  const Matrix eye = Matrix::from_rows({{1, 0}, {0, 1}});
  CHECK(matmul(a, eye) == a);

  const Matrix row = Matrix::from_rows({{1, 2}});
  const Matrix col = Matrix::from_rows({{3}, {4}});
  const Matrix prod = matmul(row, col);
  CHECK(prod.rows() == 1);
  CHECK(prod.cols() == 1);
  CHECK(prod(0, 0) == 11.0);
}

TEST_CASE("matmul matches the triple-loop oracle on random shapes") {
  Rng rng(3);
  for (int round = 0; round < 30; ++round) {
    const std::size_t m = 1 + rng.index(8);
    const std::size_t n = 1 + rng.index(8);
    const std::size_t p = 1 + rng.index(8);
    const Matrix a = random_matrix(m, n, rng, -2.0, 2.0);
    const Matrix b = random_matrix(n, p, rng, -2.0, 2.0);
    const Matrix got = matmul(a, b);
    const Matrix want = naive_matmul(a, b);
    for (std::size_t i = 0; i < got.size(); ++i) {
      CHECK(rel_close(got.data()[i], want.data()[i], 1e-12));
    }
  }
  CHECK(matmul(random_matrix(3, 4, rng), random_matrix(4, 2, rng)).rows() == 3);
}

TEST_CASE("matmul rejects mismatched dimensions") {
  const Matrix a(2, 3);
  const Matrix b(4, 2);
  CHECK_THROWS_AS(matmul(a, b), ShapeError);
}

TEST_CASE("add_row_broadcast") {
  const Matrix m = Matrix::from_rows({{1, 1}, {2, 2}});
  const Matrix zero(1, 2);
  CHECK(add_row_broadcast(m, zero) == m);

  const Matrix one_row = Matrix::from_rows({{1, 1}});
  const Matrix bias = Matrix::from_rows({{1, 2}});
  CHECK(add_row_broadcast(one_row, bias) == Matrix::from_rows({{2, 3}}));

  Rng rng(5);
  const Matrix x = random_matrix(6, 5, rng);
  const Matrix b = random_matrix(1, 5, rng);
  const Matrix got = add_row_broadcast(x, b);
  for (std::size_t r = 0; r < x.rows(); ++r) {
    for (std::size_t c = 0; c < x.cols(); ++c) {
      CHECK(got(r, c) == x(r, c) + b(0, c));
    }
  }

  CHECK_THROWS_AS(add_row_broadcast(x, Matrix(1, 4)), ShapeError);
  CHECK_THROWS_AS(add_row_broadcast(x, Matrix(2, 5)), ShapeError);
}

TEST_CASE("transpose is an involution") {
  Rng rng(9);
  const Matrix m = random_matrix(4, 7, rng);
  CHECK(transpose(transpose(m)) == m);
}

TEST_CASE("elementwise_mul with ones is the identity") {
  Rng rng(13);
  const Matrix m = random_matrix(3, 4, rng);
  Matrix ones(3, 4);
  for (std::size_t i = 0; i < ones.size(); ++i) ones.data()[i] = 1.0;
  CHECK(elementwise_mul(m, ones) == m);
  CHECK_THROWS_AS(elementwise_mul(m, Matrix(4, 3)), ShapeError);
}

TEST_CASE("column_sums") {
  const Matrix m = Matrix::from_rows({{1, 2}, {3, 4}});
  CHECK(column_sums(m) == Matrix::from_rows({{4, 6}}));
}

TEST_CASE("scale and elementwise_map") {
  const Matrix m = Matrix::from_rows({{1, -2}, {0.5, 4}});
  CHECK(scale(m, 2.0) == Matrix::from_rows({{2, -4}, {1, 8}}));
  const Matrix sq = elementwise_map(m, [](double v) { return v * v; });
  CHECK(sq == Matrix::from_rows({{1, 4}, {0.25, 16}}));
}

TEST_CASE("matmul associativity within 1e-9 relative") {
  Rng rng(17);
  for (int round = 0; round < 20; ++round) {
    const std::size_t m = 1 + rng.index(6);
    const std::size_t n = 1 + rng.index(6);
    const std::size_t p = 1 + rng.index(6);
    const std::size_t q = 1 + rng.index(6);
    const Matrix a = random_matrix(m, n, rng);
    const Matrix b = random_matrix(n, p, rng);
    const Matrix c = random_matrix(p, q, rng);
    const Matrix left = matmul(matmul(a, b), c);
    const Matrix right = matmul(a, matmul(b, c));
    for (std::size_t i = 0; i < left.size(); ++i) {
      CHECK(rel_close(left.data()[i], right.data()[i], 1e-9));
    }
  }
}

TEST_CASE("transpose of a product reverses the factors") {
  Rng rng(19);
  const Matrix a = random_matrix(5, 3, rng);
  const Matrix b = random_matrix(3, 6, rng);
  const Matrix left = transpose(matmul(a, b));
  const Matrix right = matmul(transpose(b), transpose(a));
  for (std::size_t i = 0; i < left.size(); ++i) {
    CHECK(rel_close(left.data()[i], right.data()[i], 1e-9));
  }
}

TEST_CASE("row_range and gather_rows") {
  const Matrix m = Matrix::from_rows({{1, 2}, {3, 4}, {5, 6}});
  CHECK(m.row_range(1, 3) == Matrix::from_rows({{3, 4}, {5, 6}}));
  CHECK(m.row_range(0, 0).rows() == 0);
  CHECK_THROWS_AS(m.row_range(2, 4), ShapeError);

  const std::size_t idx[] = {2, 0};
  CHECK(gather_rows(m, idx) == Matrix::from_rows({{5, 6}, {1, 2}}));
  const std::size_t bad[] = {3};
  CHECK_THROWS_AS(gather_rows(m, bad), ShapeError);
}

TEST_CASE("matrix constructor validates data length") {
  CHECK_THROWS_AS(Matrix(2, 2, std::vector<double>{1, 2, 3}), ShapeError);
  CHECK_THROWS_AS(Matrix::from_rows({{1, 2}, {3}}), ShapeError);
}

TEST_CASE("all_finite flags NaN and infinity") {
  Matrix m(2, 2);
  CHECK(m.all_finite());
  m(1, 1) = std::numeric_limits<double>::quiet_NaN();
  CHECK(!m.all_finite());
  m(1, 1) = std::numeric_limits<double>::infinity();
  CHECK(!m.all_finite());
}
