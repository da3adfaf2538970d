#pragma once

#include <optional>
#include <vector>

#include "laby/matrix.hpp"

namespace laby {

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank = 0;
};

/// Gauss-Jordan reduction over a prime field.
inline RrefResult rref(const Matrix& m) {
  const auto& ring = m.ring();
  ring.require_field("rref");
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t sel = row;
    while (sel < a.rows() && a(sel, col) == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != row)
      for (std::size_t c = 0; c < a.cols(); ++c) {
        auto t = a(row, c);
        a.set(row, c, a(sel, c));
        a.set(sel, c, t);
      }
    auto inv = ring.inv(a(row, col));
    for (std::size_t c = col; c < a.cols(); ++c) a.set(row, c, ring.mul(a(row, c), inv));
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row) continue;
      auto factor = a(r, col);
      if (factor == 0) continue;
      auto nf = ring.neg(factor);
      for (std::size_t c = col; c < a.cols(); ++c) a.add_at(r, c, ring.mul(nf, a(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots), row};
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank; }

/// Basis of {v : m v = 0}, one column per free variable.
inline std::vector<std::vector<Residue>> kernel_basis(const Matrix& m) {
  auto r = rref(m);
  const auto& ring = m.ring();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<std::vector<Residue>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Residue> v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = ring.neg(r.reduced(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

/// The columns of m at its pivot positions: a basis of the column space.
inline std::vector<std::vector<Residue>> image_basis(const Matrix& m) {
  auto r = rref(m);
  std::vector<std::vector<Residue>> basis;
  for (auto p : r.pivots) basis.push_back(m.column(p));
  return basis;
}

/// Coefficients c with sum_i c_i basis_i = v, or nullopt when v is outside the
/// span. The basis must be linearly independent.
inline std::optional<std::vector<Residue>> coords_in_span(RingSpec ring, const std::vector<std::vector<Residue>>& basis,
                                                          const std::vector<Residue>& v) {
  ring.require_field("coords_in_span");
  const std::size_t n = v.size(), k = basis.size();
  for (const auto& b : basis)
    if (b.size() != n) throw DimensionError("coords_in_span: vector length mismatch");
  Matrix aug(ring, n, k + 1);
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t r = 0; r < n; ++r) aug.set(r, c, basis[c][r]);
  for (std::size_t r = 0; r < n; ++r) aug.set(r, k, v[r]);
  auto red = rref(aug);
  if (red.rank > 0 && red.pivots.back() == k) return std::nullopt;
  if (red.rank != k) throw InvariantViolation("coords_in_span: basis is not linearly independent");
  std::vector<Residue> coeffs(k, 0);
  for (std::size_t i = 0; i < red.rank; ++i) coeffs[red.pivots[i]] = red.reduced(i, k);
  return coeffs;
}

/// A subspace of F_p^n held in its reduced column echelon basis. The basis
/// depends only on the subspace, and its pivot rows form an identity block,
/// so coordinates are read off directly.
class Subspace {
 public:
  Subspace(RingSpec ring, std::size_t ambient) : basis_(ring, ambient, 0) {}

  /// The column space of m.
  static Subspace column_space(const Matrix& m) {
    auto r = rref(m.transpose());
    Subspace s(m.ring(), m.rows());
    s.basis_ = Matrix(m.ring(), m.rows(), r.rank);
    for (std::size_t i = 0; i < r.rank; ++i)
      for (std::size_t j = 0; j < m.rows(); ++j) s.basis_.set(j, i, r.reduced(i, j));
    s.pivot_rows_ = r.pivots;
    return s;
  }

  /// The null space of m.
  static Subspace kernel_of(const Matrix& m) {
    auto cols = kernel_basis(m);
    return column_space(from_columns(m.ring(), m.cols(), cols));
  }

  std::size_t dim() const { return basis_.cols(); }
  std::size_t ambient_dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivot_rows() const { return pivot_rows_; }

  /// Coordinates of every column of `vectors`, or nullopt if some column lies
  /// outside the subspace.
  std::optional<Matrix> coords(const Matrix& vectors) const {
    if (vectors.rows() != ambient_dim()) throw DimensionError("Subspace::coords: ambient dimension mismatch");
    Matrix c(vectors.ring(), dim(), vectors.cols());
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < vectors.cols(); ++j) c.set(i, j, vectors(pivot_rows_[i], j));
    if (!(basis_ * c == vectors)) return std::nullopt;
    return c;
  }

  bool contains(const Matrix& vectors) const { return coords(vectors).has_value(); }

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

 private:
  Matrix basis_;
  std::vector<std::size_t> pivot_rows_;
};

/// Vertical concatenation of matrices with equal column counts.
inline Matrix stack_rows(RingSpec ring, std::size_t cols, const std::vector<Matrix>& blocks) {
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw DimensionError("stack_rows: column count mismatch");
    rows += b.rows();
  }
  Matrix out(ring, rows, cols);
  std::size_t r0 = 0;
  for (const auto& b : blocks) {
    place_block(out, b, r0, 0);
    r0 += b.rows();
  }
  return out;
}

}  // namespace laby
