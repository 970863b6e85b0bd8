#include <random>

#include "doctest.h"
#include "drwkit/fp_linalg.hpp"

using namespace drwkit;

namespace {
FpMatrix random_matrix(std::mt19937& rng, unsigned p, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<unsigned> entry(0, p - 1);
  FpMatrix m(p, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = entry(rng);
  return m;
}
}  // namespace

TEST_CASE("rref of a small matrix") {
  auto m = FpMatrix::from_rows(3, 3, {{1, 2, 0}, {2, 1, 0}, {0, 0, 2}});
  Rref r = rref_serial(m);
  CHECK(r.pivots == std::vector<std::size_t>{0, 2});
  CHECK(r.matrix.row(0) == FpVector{1, 2, 0});
  CHECK(r.matrix.row(1) == FpVector{0, 0, 1});
}

TEST_CASE("parallel rref matches the serial one") {
  std::mt19937 rng(11);
  for (unsigned p : {2u, 3u, 7u})
    for (int trial = 0; trial < 20; ++trial) {
      FpMatrix m = random_matrix(rng, p, 1 + trial % 9, 2 + trial % 7);
      CHECK(rref_parallel(m).matrix == rref_serial(m).matrix);
      CHECK(rref_parallel(m).pivots == rref_serial(m).pivots);
    }
}

TEST_CASE("subspace operations") {
  auto s = FpSubspace::span(5, 3, {{1, 1, 0}, {2, 2, 0}});
  CHECK(s.dim() == 1);
  CHECK(s.contains(FpVector{3, 3, 0}));
  CHECK_FALSE(s.contains(FpVector{1, 0, 0}));
  CHECK(s.reduce(FpVector{1, 0, 0}) == FpVector{0, 4, 0});
  auto t = FpSubspace::span(5, 3, {{0, 0, 1}});
  CHECK(s.sum(t).dim() == 2);
  CHECK(s.sum(t).contains(s));
  CHECK(FpSubspace::full(5, 3).contains(s.sum(t)));
  CHECK(FpSubspace(5, 3).dim() == 0);
  CHECK(s == FpSubspace::span(5, 3, {{4, 4, 0}}));
}

TEST_CASE("left kernel") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const unsigned p = trial % 2 ? 3 : 5;
    FpMatrix m = random_matrix(rng, p, 2 + trial % 6, 1 + trial % 5);
    FpSubspace k = left_kernel(m);
    CHECK(k.dim() + rank(p, m.cols(), [&] {
            std::vector<FpVector> rows;
            for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
            return rows;
          }()) == m.rows());
    for (const FpVector& x : k.basis())
      for (std::size_t c = 0; c < m.cols(); ++c) {
        unsigned long long acc = 0;
        for (std::size_t r = 0; r < m.rows(); ++r) acc += static_cast<unsigned long long>(x[r]) * m.at(r, c);
        CHECK(acc % p == 0);
      }
  }
}
