#include "loopspace/linalg.hpp"

#include <doctest.h>

#include <random>

using namespace loopspace;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int rank_hint) {
  // Product of random rows x rank_hint and rank_hint x cols factors.
  std::uniform_int_distribution<int> entry(-4, 4);
  Matrix a(rows, static_cast<std::size_t>(rank_hint)), b(static_cast<std::size_t>(rank_hint), cols);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = make_rational(entry(rng), 1 + std::abs(entry(rng)));
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) = entry(rng);
  return a * b;
}

}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("rational strings are lowest-terms p/q") {
    CHECK(to_fraction_string(make_rational(6, 8)) == "3/4");
    CHECK(to_fraction_string(Rational(-3)) == "-3/1");
    CHECK(to_fraction_string(Rational(0)) == "0/1");
    CHECK(parse_rational("10/4") == Rational(5, 2));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
  }

  TEST_CASE("rank of small matrices") {
    CHECK(rank(Matrix(0, 3)) == 0);
    CHECK(rank(Matrix(3, 3)) == 0);
    CHECK(rank(Matrix::identity(4)) == 4);
    const Matrix m = Matrix::from_rows({{1, 2, 3}, {2, 4, 6}, {Rational(1, 2), 0, 1}}, 3);
    CHECK(rank(m) == 2);
    CHECK(row_reduce(m).rank() == 2);
  }

  TEST_CASE("Bareiss rank agrees with rational row reduction") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> dim(1, 7);
    for (int trial = 0; trial < 400; ++trial) {
      const std::size_t r = dim(rng), c = dim(rng);
      const int hint = static_cast<int>(std::min(r, c) - (trial % 3 == 0 ? 1 : 0));
      const Matrix m = random_matrix(rng, r, c, std::max(hint, 1));
      CHECK(rank(m) == row_reduce(m).rank());
      CHECK(rank(m) == rank(m.transposed()));
    }
  }

  TEST_CASE("kernel basis spans the null space") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
      const Matrix m = random_matrix(rng, 4, 6, 1 + trial % 4);
      const auto ker = kernel_basis(m);
      CHECK(ker.size() + rank(m) == m.cols());
      for (const auto& v : ker) {
        const auto mv = m * std::span<const Rational>(v);
        CHECK(std::all_of(mv.begin(), mv.end(), [](const Rational& q) { return q == 0; }));
      }
    }
  }

  TEST_CASE("solve finds preimages and rejects vectors outside the image") {
    const Matrix m = Matrix::from_rows({{1, 1}, {1, 1}, {0, 2}}, 2);
    const std::vector<Rational> b{3, 3, 4};
    const auto x = solve(m, b);
    REQUIRE(x);
    CHECK(m * std::span<const Rational>(*x) == b);
    const std::vector<Rational> bad{1, 2, 0};
    CHECK_FALSE(solve(m, bad));
  }

  TEST_CASE("row space membership") {
    RowSpace s(3);
    CHECK(s.insert(std::vector<Rational>{1, 2, 0}));
    CHECK(s.insert(std::vector<Rational>{0, 1, 1}));
    CHECK_FALSE(s.insert(std::vector<Rational>{2, 5, 1}));
    CHECK(s.contains(std::vector<Rational>{1, 3, 1}));
    CHECK_FALSE(s.contains(std::vector<Rational>{0, 0, 1}));
    CHECK(s.rank() == 2);
  }
}
