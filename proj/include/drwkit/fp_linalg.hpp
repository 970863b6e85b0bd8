#pragma once

// Dense linear algebra over F_p for small primes.

#include <cstdint>
#include <string>
#include <vector>

namespace drwkit {

using FpVector = std::vector<std::uint32_t>;

class FpMatrix {
 public:
  FpMatrix(unsigned p, std::size_t rows, std::size_t cols);
  static FpMatrix from_rows(unsigned p, std::size_t cols, const std::vector<FpVector>& rows);

  unsigned prime() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  FpVector row(std::size_t r) const;
  void append_row(const FpVector& v);

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  unsigned p_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> data_;
};

struct Rref {
  FpMatrix matrix;                  // nonzero rows only, pivots normalized to 1
  std::vector<std::size_t> pivots;  // pivot column of each row, increasing
};

/// Reduced row echelon form, reference implementation.
Rref rref_serial(FpMatrix m);
/// Same result; the elimination of each pivot column runs over rows in parallel.
Rref rref_parallel(FpMatrix m);

/// Subspace of F_p^dim stored as its reduced row echelon basis.
class FpSubspace {
 public:
  FpSubspace(unsigned p, std::size_t ambient_dim);
  static FpSubspace span(unsigned p, std::size_t ambient_dim, const std::vector<FpVector>& vectors);
  static FpSubspace full(unsigned p, std::size_t ambient_dim);

  unsigned prime() const { return p_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<FpVector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Canonical representative of v modulo the subspace (pivot entries cleared).
  FpVector reduce(const FpVector& v) const;
  bool contains(const FpVector& v) const;
  bool contains(const FpSubspace& other) const;
  FpSubspace sum(const FpSubspace& other) const;

  friend bool operator==(const FpSubspace&, const FpSubspace&) = default;

 private:
  unsigned p_;
  std::size_t ambient_;
  std::vector<FpVector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Kernel of the linear map whose matrix has the images of the source basis
/// vectors as rows: { x : x M = 0 }.
FpSubspace left_kernel(const FpMatrix& m);
/// Rank of a list of vectors.
std::size_t rank(unsigned p, std::size_t dim, const std::vector<FpVector>& vectors);

}  // namespace drwkit
