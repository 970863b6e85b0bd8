#include "drwkit/fp_linalg.hpp"

#include "drwkit/error.hpp"
#include "drwkit/fppoly.hpp"

namespace drwkit {

FpMatrix::FpMatrix(unsigned p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FpMatrix FpMatrix::from_rows(unsigned p, std::size_t cols, const std::vector<FpVector>& rows) {
  FpMatrix m(p, 0, cols);
  for (const FpVector& r : rows) m.append_row(r);
  return m;
}

FpVector FpMatrix::row(std::size_t r) const {
  return FpVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void FpMatrix::append_row(const FpVector& v) {
  if (v.size() != cols_) fail(ErrorKind::ContextMismatch, "row length does not match matrix");
  for (std::uint32_t x : v) data_.push_back(x % p_);
  ++rows_;
}

namespace {

template <bool Parallel>
Rref rref_impl(FpMatrix m) {
  const unsigned p = m.prime();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m.at(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t k = 0; k < cols; ++k) std::swap(m.at(r, k), m.at(piv, k));
    const std::uint64_t inv = fp_inverse(m.at(r, c), p);
    for (std::size_t k = c; k < cols; ++k) m.at(r, k) = static_cast<std::uint32_t>(m.at(r, k) * inv % p);
    const long long nrows = static_cast<long long>(rows);
#pragma omp parallel for schedule(static) if (Parallel)
    for (long long ii = 0; ii < nrows; ++ii) {
      const std::size_t i = static_cast<std::size_t>(ii);
      if (i == r || m.at(i, c) == 0) continue;
      const std::uint64_t f = p - m.at(i, c);
      for (std::size_t k = c; k < cols; ++k)
        m.at(i, k) = static_cast<std::uint32_t>((m.at(i, k) + f * m.at(r, k)) % p);
    }
    pivots.push_back(c);
    ++r;
  }
  FpMatrix out(p, 0, cols);
  for (std::size_t i = 0; i < r; ++i) out.append_row(m.row(i));
  return {out, pivots};
}

}  // namespace

Rref rref_serial(FpMatrix m) { return rref_impl<false>(std::move(m)); }
Rref rref_parallel(FpMatrix m) { return rref_impl<true>(std::move(m)); }

FpSubspace::FpSubspace(unsigned p, std::size_t ambient_dim) : p_(p), ambient_(ambient_dim) {}

FpSubspace FpSubspace::span(unsigned p, std::size_t ambient_dim, const std::vector<FpVector>& vectors) {
  Rref rr = rref_serial(FpMatrix::from_rows(p, ambient_dim, vectors));
  FpSubspace s(p, ambient_dim);
  for (std::size_t i = 0; i < rr.matrix.rows(); ++i) s.basis_.push_back(rr.matrix.row(i));
  s.pivots_ = rr.pivots;
  return s;
}

FpSubspace FpSubspace::full(unsigned p, std::size_t ambient_dim) {
  std::vector<FpVector> e;
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    FpVector v(ambient_dim, 0);
    v[i] = 1;
    e.push_back(v);
  }
  return span(p, ambient_dim, e);
}

FpVector FpSubspace::reduce(const FpVector& v) const {
  if (v.size() != ambient_) fail(ErrorKind::ContextMismatch, "vector length does not match subspace");
  FpVector r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const std::uint64_t f = r[pivots_[i]] % p_;
    if (f == 0) continue;
    for (std::size_t k = 0; k < ambient_; ++k)
      r[k] = static_cast<std::uint32_t>((r[k] + (p_ - f) * basis_[i][k]) % p_);
  }
  return r;
}

bool FpSubspace::contains(const FpVector& v) const {
  for (std::uint32_t x : reduce(v))
    if (x != 0) return false;
  return true;
}

bool FpSubspace::contains(const FpSubspace& other) const {
  for (const FpVector& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

FpSubspace FpSubspace::sum(const FpSubspace& other) const {
  if (other.ambient_ != ambient_ || other.p_ != p_)
    fail(ErrorKind::ContextMismatch, "sum of subspaces of different spaces");
  std::vector<FpVector> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return span(p_, ambient_, all);
}

FpSubspace left_kernel(const FpMatrix& m) {
  const unsigned p = m.prime();
  const std::size_t src = m.rows(), tgt = m.cols();
  // Row-reduce [M | I]; rows whose M-part vanishes carry kernel vectors.
  FpMatrix aug(p, src, tgt + src);
  for (std::size_t i = 0; i < src; ++i) {
    for (std::size_t k = 0; k < tgt; ++k) aug.at(i, k) = m.at(i, k);
    aug.at(i, tgt + i) = 1;
  }
  Rref rr = rref_serial(aug);
  std::vector<FpVector> kernel;
  for (std::size_t i = 0; i < rr.matrix.rows(); ++i) {
    if (rr.pivots[i] < tgt) continue;
    FpVector row = rr.matrix.row(i);
    kernel.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(tgt), row.end());
  }
  return FpSubspace::span(p, src, kernel);
}

std::size_t rank(unsigned p, std::size_t dim, const std::vector<FpVector>& vectors) {
  return rref_serial(FpMatrix::from_rows(p, dim, vectors)).pivots.size();
}

}  // namespace drwkit
