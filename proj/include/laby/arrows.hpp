#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "laby/matrix.hpp"

namespace laby {

/// An ordered finite set of short symbolic names. Position i is the i-th
/// summand of Omega^X.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::vector<std::string> names) : names_(std::move(names)) {
    auto sorted = names_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InputError("index set has a repeated element");
  }

  /// {"1", ..., "n"}
  static IndexSet range(std::size_t n, const std::string& prefix = "") {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
    return IndexSet(std::move(names));
  }

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& operator[](std::size_t i) const { return names_[i]; }

  bool contains(const std::string& name) const {
    return std::find(names_.begin(), names_.end(), name) != names_.end();
  }
  std::size_t index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw InputError("element '" + name + "' is not in the index set");
    return static_cast<std::size_t>(it - names_.begin());
  }

  /// Elements at the positions whose bits are set in `mask`, in order.
  IndexSet restrict_to(unsigned long long mask) const {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (mask >> i & 1ULL) names.push_back(names_[i]);
    return IndexSet(std::move(names));
  }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  friend auto operator<=>(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<std::string> names_;
};

/// iota_x : Omega -> Omega^X
inline Matrix injection(RingSpec ring, const IndexSet& X, const std::string& x) {
  Matrix m(ring, X.size(), 1);
  m.set(X.index_of(x), 0, 1);
  return m;
}

/// rho_x : Omega^X -> Omega
inline Matrix retraction(RingSpec ring, const IndexSet& X, const std::string& x) {
  Matrix m(ring, 1, X.size());
  m.set(0, X.index_of(x), 1);
  return m;
}

/// sigma_xy = iota_x rho_y : Omega^Y -> Omega^X
inline Matrix transport_sigma(RingSpec ring, const IndexSet& X, const IndexSet& Y, const std::string& x,
                              const std::string& y) {
  Matrix m(ring, X.size(), Y.size());
  m.set(X.index_of(x), Y.index_of(y), 1);
  return m;
}

/// Positional variant: sigma_xy : Omega^cols -> Omega^rows.
inline Matrix transport_sigma(RingSpec ring, std::size_t rows, std::size_t cols, std::size_t x, std::size_t y) {
  if (x >= rows || y >= cols) throw DimensionError("transportation index out of range");
  Matrix m(ring, rows, cols);
  m.set(x, y, 1);
  return m;
}

/// The sum a_1 + ... + a_k : M_1 + ... + M_k -> N of arrows with a common
/// target, i.e. the block row [a_1 | ... | a_k].
inline Matrix arrow_sum(const std::vector<Matrix>& arrows) {
  if (arrows.empty()) throw DimensionError("arrow_sum of an empty family needs an explicit target");
  const auto& ring = arrows.front().ring();
  std::size_t rows = arrows.front().rows(), cols = 0;
  for (const auto& a : arrows) {
    require_same_ring(ring, a.ring(), "arrow_sum");
    if (a.rows() != rows) throw DimensionError("arrow_sum: arrows do not share a target");
    cols += a.cols();
  }
  Matrix out(ring, rows, cols);
  std::size_t c0 = 0;
  for (const auto& a : arrows) {
    place_block(out, a, 0, c0);
    c0 += a.cols();
  }
  return out;
}

/// a_1 (+) ... (+) a_k : M_1 + ... + M_k -> N_1 + ... + N_k, block diagonal.
inline Matrix direct_sum(const std::vector<Matrix>& arrows) {
  if (arrows.empty()) throw DimensionError("direct_sum of an empty family");
  const auto& ring = arrows.front().ring();
  std::size_t rows = 0, cols = 0;
  for (const auto& a : arrows) {
    require_same_ring(ring, a.ring(), "direct_sum");
    rows += a.rows();
    cols += a.cols();
  }
  Matrix out(ring, rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& a : arrows) {
    place_block(out, a, r0, c0);
    r0 += a.rows();
    c0 += a.cols();
  }
  return out;
}

/// The folding map 1 + ... + 1 : Omega^n -> Omega.
inline Matrix folding(RingSpec ring, std::size_t n) {
  Matrix m(ring, 1, n);
  for (std::size_t i = 0; i < n; ++i) m.set(0, i, 1);
  return m;
}

}  // namespace laby
