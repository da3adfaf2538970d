#pragma once

#include <numeric>
#include <optional>
#include <vector>

#include "laby/functor.hpp"
#include "laby/limits.hpp"
#include "laby/subsets.hpp"

namespace laby {

/// F(a_1 d ... d a_k) = sum_{I subset [k]} (-1)^{k-|I|} F(sum_{i in I} a_i)
/// for arrows a_i : Omega^{m_i} -> Omega^M with a common target. The partial
/// sums are arrows out of the full sum Omega^{m_1 + ... + m_k}, zero on the
/// unselected blocks. Result: obj(M) x obj(m_1 + ... + m_k).
inline Matrix deviate(const Functor& f, const std::vector<Matrix>& arrows) {
  const auto& A = f.source_ring();
  if (arrows.empty()) {
    // k = 0: the empty sum is the zero arrow 0 -> ? ; without a target there is nothing to deviate.
    throw DimensionError("deviate needs at least one arrow");
  }
  const std::size_t target = arrows.front().rows();
  std::vector<std::size_t> offsets;
  std::size_t total = 0;
  for (const auto& a : arrows) {
    require_same_ring(a.ring(), A, "deviate");
    if (a.rows() != target) throw DimensionError("deviate: arrows do not share a target");
    offsets.push_back(total);
    total += a.cols();
  }
  const std::size_t k = arrows.size();
  Matrix out(f.target_field(), f.obj(target), f.obj(total));
  for_each_submask(full_mask(k), [&](Mask subset) {
    Matrix partial(A, target, total);
    for (std::size_t i = 0; i < k; ++i)
      if (subset >> i & 1) place_block(partial, arrows[i], 0, offsets[i]);
    f.accumulate(partial, f.target_field().sign(k - popcount(subset)), out);
  });
  return out;
}

/// The same alternating sum for arrows that share both source and target:
/// sum_I (-1)^{k-|I|} F(sum_{i in I} a_i) with the sums taken in Hom(Omega^n, Omega^m).
inline Matrix deviate_parallel(const Functor& f, const std::vector<Matrix>& arrows, std::size_t rows, std::size_t cols) {
  const auto& A = f.source_ring();
  Matrix out(f.target_field(), f.obj(rows), f.obj(cols));
  const std::size_t k = arrows.size();
  for (const auto& a : arrows)
    if (a.rows() != rows || a.cols() != cols) throw DimensionError("deviate_parallel: shape mismatch");
  // Gray-code walk keeps one running partial sum.
  Matrix partial(A, rows, cols);
  f.accumulate(partial, f.target_field().sign(k), out);
  Mask current = 0;
  for (Mask step = 1; k > 0 && step <= full_mask(k); ++step) {
    const Mask gray = step ^ (step >> 1);
    const std::size_t flipped = static_cast<std::size_t>(std::countr_zero(gray ^ current));
    if (gray >> flipped & 1) partial += arrows[flipped];
    else partial -= arrows[flipped];
    current = gray;
    f.accumulate(partial, f.target_field().sign(k - popcount(current)), out);
  }
  return out;
}

/// Block-diagonal 0/1 matrix on Omega^{sum parts} keeping the blocks in `keep`.
inline Matrix block_selector(RingSpec ring, const std::vector<std::size_t>& parts, Mask keep) {
  const std::size_t total = std::accumulate(parts.begin(), parts.end(), std::size_t{0});
  Matrix d(ring, total, total);
  std::size_t offset = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (keep >> i & 1)
      for (std::size_t j = 0; j < parts[i]; ++j) d.set(offset + j, offset + j, 1);
    offset += parts[i];
  }
  return d;
}

/// F(d_{i in I} iota_i rho_i) on F(Omega^{sum parts}): the idempotent cutting
/// out the summand ce_I of the cross-effect decomposition.
inline Matrix subset_idempotent(const Functor& f, const std::vector<std::size_t>& parts, Mask subset) {
  const std::size_t total = std::accumulate(parts.begin(), parts.end(), std::size_t{0});
  Matrix e(f.target_field(), f.obj(total), f.obj(total));
  const std::size_t size = popcount(subset);
  for_each_submask(subset, [&](Mask j) {
    f.accumulate(block_selector(f.source_ring(), parts, j), f.target_field().sign(size - popcount(j)), e);
  });
  return e;
}

inline std::vector<std::size_t> ones(std::size_t k) { return std::vector<std::size_t>(k, 1); }

/// The stacked map (F(rho^_1), ..., F(rho^_k)) whose kernel is ce_k, where
/// rho^_j forgets the j-th block.
inline Matrix cross_effect_kernel_map(const Functor& f, const std::vector<std::size_t>& parts) {
  const auto& A = f.source_ring();
  const std::size_t total = std::accumulate(parts.begin(), parts.end(), std::size_t{0});
  std::vector<Matrix> blocks;
  std::size_t offset = 0;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    Matrix drop(A, total - parts[j], total);
    std::size_t row = 0;
    for (std::size_t c = 0; c < total; ++c)
      if (c < offset || c >= offset + parts[j]) drop.set(row++, c, 1);
    blocks.push_back(f.apply(drop));
    offset += parts[j];
  }
  return stack_rows(f.target_field(), f.obj(total), blocks);
}

/// ce_k F(Omega^{m_1}, ..., Omega^{m_k}) inside F(Omega^{m_1 + ... + m_k}), with
/// its deterministic (reduced column echelon) basis.
struct CEBasis {
  std::vector<std::size_t> parts;
  std::size_t ambient_dim = 0;
  Matrix idempotent;
  Subspace space;

  std::size_t dim() const { return space.dim(); }
  const Matrix& basis() const { return space.basis(); }
};

inline CEBasis ce_basis(const Functor& f, const std::vector<std::size_t>& parts, const Limits& limits = {}) {
  const std::size_t total = std::accumulate(parts.begin(), parts.end(), std::size_t{0});
  limits.check_dim(f.obj(total), f.name() + "(Omega^" + std::to_string(total) + ")");
  auto e = subset_idempotent(f, parts, full_mask(parts.size()));
  auto space = Subspace::column_space(e);
  return CEBasis{parts, f.obj(total), std::move(e), std::move(space)};
}

/// dim ce_k F(Omega, ..., Omega) via the rank of the idempotent.
inline std::size_t ce_dim(const Functor& f, std::size_t k, const Limits& limits = {}) {
  return ce_basis(f, ones(k), limits).dim();
}

/// The same dimension via the kernel characterisation.
inline std::size_t ce_dim_by_kernel(const Functor& f, const std::vector<std::size_t>& parts, const Limits& limits = {}) {
  const std::size_t total = std::accumulate(parts.begin(), parts.end(), std::size_t{0});
  limits.check_dim(f.obj(total), f.name() + "(Omega^" + std::to_string(total) + ")");
  auto k = cross_effect_kernel_map(f, parts);
  return k.cols() - rank(k);
}

/// F(Omega^k) = (+)_{I subset [k]} ce_I F, with blocks ordered by subset bitmask.
struct Decomposition {
  std::size_t k = 0;
  std::vector<std::size_t> dims;     // dim ce_I for I = mask 0 .. 2^k - 1
  std::vector<std::size_t> offsets;  // first row of each block in J
  Matrix J;                          // F(Omega^k) -> (+)_I ce_|I|
  Matrix J_inv;
};

/// Selection Omega^k -> Omega^|I| keeping the coordinates in I.
inline Matrix subset_retraction(RingSpec ring, std::size_t k, Mask subset) {
  Matrix r(ring, popcount(subset), k);
  std::size_t row = 0;
  for (std::size_t i = 0; i < k; ++i)
    if (subset >> i & 1) r.set(row++, i, 1);
  return r;
}

inline Decomposition decomposition(const Functor& f, std::size_t k, const Limits& limits = {}) {
  const auto& field = f.target_field();
  const auto& A = f.source_ring();
  const std::size_t n = f.obj(k);
  limits.check_dim(n, f.name() + "(Omega^" + std::to_string(k) + ")");
  std::vector<std::optional<CEBasis>> by_size(k + 1);
  Decomposition d;
  d.k = k;
  std::vector<Matrix> row_blocks;
  std::vector<Matrix> col_blocks;
  for (Mask I = 0; I <= full_mask(k); ++I) {
    const std::size_t s = popcount(I);
    if (!by_size[s]) by_size[s] = ce_basis(f, ones(s), limits);
    const auto& ce = *by_size[s];
    auto rho = subset_retraction(A, k, I);
    auto iota = rho.transpose();
    auto coords = ce.space.coords(ce.idempotent * f.apply(rho));
    if (!coords) throw InvariantViolation("decomposition: idempotent image escapes its cross-effect");
    d.offsets.push_back(std::accumulate(d.dims.begin(), d.dims.end(), std::size_t{0}));
    d.dims.push_back(ce.dim());
    row_blocks.push_back(std::move(*coords));
    col_blocks.push_back(f.apply(iota) * ce.basis());
  }
  if (std::accumulate(d.dims.begin(), d.dims.end(), std::size_t{0}) != n)
    throw InvariantViolation("decomposition: cross-effect dimensions do not add up to dim F(Omega^" +
                             std::to_string(k) + ")");
  d.J = stack_rows(field, n, row_blocks);
  d.J_inv = Matrix(field, n, n);
  std::size_t c0 = 0;
  for (const auto& b : col_blocks) {
    place_block(d.J_inv, b, 0, c0);
    c0 += b.cols();
  }
  if (!(d.J * d.J_inv == Matrix::identity(field, n)))
    throw InvariantViolation("decomposition: J is not invertible");
  return d;
}

struct DegreeReport {
  std::optional<std::size_t> degree;  // nullopt: exceeds nmax
  std::size_t nmax = 0;
  std::vector<std::size_t> ce_dims;   // dim ce_k for k = 0, 1, ...

  std::string to_string() const {
    return degree ? std::to_string(*degree) : "exceeds " + std::to_string(nmax);
  }
};

/// Largest k with ce_k F(Omega, ..., Omega) != 0, scanning k = 0..nmax+1 and
/// also nmax+2 when it fits the dimension guard. ce_1 may vanish below a
/// nonzero ce_2 (exterior square), so the scan does not stop at the first zero.
inline DegreeReport degree(const Functor& f, std::size_t nmax, const Limits& limits = {}) {
  DegreeReport r;
  r.nmax = nmax;
  for (std::size_t k = 0; k <= nmax + 1; ++k) r.ce_dims.push_back(ce_dim(f, k, limits));
  if (f.obj(nmax + 2) <= limits.max_dim) r.ce_dims.push_back(ce_dim(f, nmax + 2, limits));
  std::size_t top = 0;
  for (std::size_t k = 0; k < r.ce_dims.size(); ++k)
    if (r.ce_dims[k] != 0) top = k;
  if (top <= nmax) r.degree = top;
  return r;
}

/// Both sides of the Deviation Formula for alphas a_i : N_i -> M and
/// betas b_j : P_j -> (+) N_i.
struct DeviationFormulaResult {
  Matrix lhs;
  Matrix rhs;
  std::size_t outer_terms = 0;  // number of covering K
  bool holds() const { return lhs == rhs; }
};

inline DeviationFormulaResult deviation_formula(const Functor& f, const std::vector<Matrix>& alphas,
                                                const std::vector<Matrix>& betas) {
  const auto& A = f.source_ring();
  if (alphas.empty() || betas.empty()) throw DimensionError("deviation formula needs nonempty families");
  const std::size_t target = alphas.front().rows();
  std::size_t mid = 0;
  std::vector<std::size_t> offsets;
  for (const auto& a : alphas) {
    if (a.rows() != target) throw DimensionError("deviation formula: alphas do not share a target");
    offsets.push_back(mid);
    mid += a.cols();
  }
  std::size_t source = 0;
  for (const auto& b : betas) {
    if (b.rows() != mid) throw DimensionError("deviation formula: beta target is not the sum of the alpha sources");
    source += b.cols();
  }
  const std::size_t m = alphas.size(), n = betas.size();

  // alpha_i extended by zero to (+) N_i -> M
  std::vector<Matrix> wide;
  for (std::size_t i = 0; i < m; ++i) {
    Matrix w(A, target, mid);
    place_block(w, alphas[i], 0, offsets[i]);
    wide.push_back(std::move(w));
  }

  DeviationFormulaResult r{deviate(f, alphas) * deviate(f, betas), Matrix(f.target_field(), f.obj(target), f.obj(source)), 0};
  auto rel = full_relation(m, n);  // pair (i, j) at index i * n + j
  auto coverings = covering_subsets(m, n, rel);
  r.outer_terms = coverings.size();
  for (const auto& K : coverings) {
    for_each_submask(K.members, [&](Mask L) {
      std::vector<Matrix> cols;
      for (std::size_t j = 0; j < n; ++j) {
        Matrix sum(A, target, mid);
        for (std::size_t i = 0; i < m; ++i)
          if (L >> (i * n + j) & 1) sum += wide[i];
        cols.push_back(sum * betas[j]);
      }
      f.accumulate(arrow_sum(cols), f.target_field().sign(popcount(K.members) - popcount(L)), r.rhs);
    });
  }
  return r;
}

}  // namespace laby
