#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "laby/error.hpp"
#include "laby/ring.hpp"

namespace laby {

/// Dense row-major matrix over Z/m. An m x n matrix is an arrow Omega^n -> Omega^m
/// acting on column vectors, so composition is the ordinary product.
class Matrix {
 public:
  Matrix() : Matrix(RingSpec::zmod(2), 0, 0) {}
  Matrix(RingSpec ring, std::size_t rows, std::size_t cols)
      : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  /// Entries are reduced modulo the ring on the way in.
  Matrix(RingSpec ring, std::size_t rows, std::size_t cols, std::span<const std::int64_t> entries)
      : Matrix(ring, rows, cols) {
    if (entries.size() != rows * cols)
      throw DimensionError("matrix " + std::to_string(rows) + "x" + std::to_string(cols) + " needs " +
                           std::to_string(rows * cols) + " entries, got " + std::to_string(entries.size()));
    for (std::size_t i = 0; i < entries.size(); ++i) data_[i] = ring.reduce(entries[i]);
  }

  Matrix(RingSpec ring, std::size_t rows, std::size_t cols, std::initializer_list<std::int64_t> entries)
      : Matrix(ring, rows, cols, std::span<const std::int64_t>(entries.begin(), entries.size())) {}

  static Matrix identity(RingSpec ring, std::size_t n) {
    Matrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
    return m;
  }
  static Matrix zero(RingSpec ring, std::size_t rows, std::size_t cols) { return Matrix(ring, rows, cols); }

  const RingSpec& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }
  std::span<const Residue> entries() const { return data_; }
  std::span<const Residue> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  Residue operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Residue at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw DimensionError("matrix index out of range");
    return (*this)(r, c);
  }
  void set(std::size_t r, std::size_t c, std::int64_t v) { data_[r * cols_ + c] = ring_.reduce(v); }
  void add_at(std::size_t r, std::size_t c, Residue v) {
    auto& e = data_[r * cols_ + c];
    e = ring_.add(e, v);
  }

  bool is_zero() const {
    for (auto e : data_)
      if (e != 0) return false;
    return true;
  }

  std::vector<Residue> column(std::size_t c) const {
    std::vector<Residue> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  Matrix transpose() const {
    Matrix t(ring_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = (*this)(r, c);
    return t;
  }

  /// this += coeff * other
  void add_scaled(const Matrix& other, Residue coeff) {
    check_same_shape(other, "add_scaled");
    if (coeff == 0) return;
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = ring_.add(data_[i], ring_.mul(coeff, other.data_[i]));
  }

  Matrix scaled(Residue coeff) const {
    Matrix out(ring_, rows_, cols_);
    out.add_scaled(*this, coeff);
    return out;
  }

  Matrix& operator+=(const Matrix& other) {
    add_scaled(other, 1);
    return *this;
  }
  Matrix& operator-=(const Matrix& other) {
    add_scaled(other, ring_.neg(1));
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

  /// Composition: (a * b) is "a after b".
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same_ring(a.ring_, b.ring_, "matrix product");
    if (a.cols_ != b.rows_)
      throw DimensionError("cannot compose " + a.shape() + " after " + b.shape());
    const auto& ring = a.ring_;
    const std::uint64_t m = ring.modulus();
    Matrix out(ring, a.rows_, b.cols_);
    std::vector<std::uint64_t> acc(b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const std::uint64_t aik = a(i, k);
        if (aik == 0) continue;
        const Residue* brow = b.data_.data() + k * b.cols_;
        for (std::size_t j = 0; j < b.cols_; ++j) acc[j] = (acc[j] + aik * brow[j]) % m;
      }
      for (std::size_t j = 0; j < b.cols_; ++j) out.data_[i * b.cols_ + j] = static_cast<Residue>(acc[j]);
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  /// Compact "rows x cols:e,e,..." form used in messages and table keys.
  std::string key() const {
    std::string s = shape() + ":";
    for (std::size_t i = 0; i < data_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(data_[i]);
    }
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) { return os << m.ring_.to_string() << " " << m.key(); }

  void check_same_shape(const Matrix& other, const char* where) const {
    require_same_ring(ring_, other.ring_, where);
    if (rows_ != other.rows_ || cols_ != other.cols_)
      throw DimensionError(std::string(where) + ": shape " + shape() + " vs " + other.shape());
  }

 private:
  RingSpec ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Residue> data_;
};

/// Kronecker product; (a (x) b)(c (x) d) = (ac) (x) (bd).
inline Matrix kronecker(const Matrix& a, const Matrix& b) {
  require_same_ring(a.ring(), b.ring(), "kronecker");
  const auto& ring = a.ring();
  Matrix out(ring, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      auto aij = a(i, j);
      if (aij == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out.set(i * b.rows() + k, j * b.cols() + l, ring.mul(aij, b(k, l)));
    }
  return out;
}

/// Copies `block` into `target` with its top-left corner at (r0, c0).
inline void place_block(Matrix& target, const Matrix& block, std::size_t r0, std::size_t c0) {
  if (r0 + block.rows() > target.rows() || c0 + block.cols() > target.cols())
    throw DimensionError("block " + block.shape() + " does not fit into " + target.shape());
  for (std::size_t r = 0; r < block.rows(); ++r)
    for (std::size_t c = 0; c < block.cols(); ++c) target.set(r0 + r, c0 + c, block(r, c));
}

inline void place_block_add(Matrix& target, const Matrix& block, std::size_t r0, std::size_t c0) {
  if (r0 + block.rows() > target.rows() || c0 + block.cols() > target.cols())
    throw DimensionError("block " + block.shape() + " does not fit into " + target.shape());
  for (std::size_t r = 0; r < block.rows(); ++r)
    for (std::size_t c = 0; c < block.cols(); ++c) target.add_at(r0 + r, c0 + c, block(r, c));
}

/// Rows `row_ids` and columns `col_ids` of `m`, in the given order.
inline Matrix submatrix(const Matrix& m, std::span<const std::size_t> row_ids, std::span<const std::size_t> col_ids) {
  Matrix out(m.ring(), row_ids.size(), col_ids.size());
  for (std::size_t r = 0; r < row_ids.size(); ++r)
    for (std::size_t c = 0; c < col_ids.size(); ++c) out.set(r, c, m.at(row_ids[r], col_ids[c]));
  return out;
}

/// Columns given as vectors, assembled side by side into a rows x cols.size() matrix.
inline Matrix from_columns(RingSpec ring, std::size_t rows, const std::vector<std::vector<Residue>>& cols) {
  Matrix out(ring, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw DimensionError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) out.set(r, c, cols[c][r]);
  }
  return out;
}

}  // namespace laby
