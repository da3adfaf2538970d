#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "laby/error.hpp"

namespace laby {

using Mask = std::uint64_t;

inline std::size_t popcount(Mask m) { return static_cast<std::size_t>(std::popcount(m)); }

inline Mask full_mask(std::size_t n) {
  if (n >= 64) throw GuardError("subset enumeration over more than 63 elements");
  return (Mask{1} << n) - 1;
}

/// Calls fn(sub) for every sub-mask of `mask`, in increasing numeric order.
template <class Fn>
void for_each_submask(Mask mask, Fn&& fn) {
  Mask sub = 0;
  while (true) {
    fn(sub);
    if (sub == mask) break;
    sub = (sub - mask) & mask;
  }
}

/// A pair (r, c) with r in R = {0..rows-1} and c in C = {0..cols-1}.
using Pair = std::pair<std::size_t, std::size_t>;

/// K subset of a relation whose projections onto R and onto C are both onto.
struct CoveringSubset {
  Mask members = 0;         // bit i set <=> relation[i] is in K
  std::vector<Pair> pairs;  // the members, in relation order
};

/// Every K subset of `relation` with both projections onto, in increasing
/// order of the member bitmask. Throws GuardError when the relation or the
/// result would be larger than the given bounds.
inline std::vector<CoveringSubset> covering_subsets(std::size_t rows, std::size_t cols, const std::vector<Pair>& relation,
                                                    std::size_t max_relation = 24, std::size_t max_results = 1u << 20) {
  if (relation.size() > max_relation)
    throw GuardError("covering-subset enumeration over a relation of size " + std::to_string(relation.size()) +
                     " exceeds the bound " + std::to_string(max_relation));
  if (rows >= 64 || cols >= 64) throw GuardError("covering-subset enumeration over sets of size >= 64");
  for (auto [r, c] : relation)
    if (r >= rows || c >= cols) throw DimensionError("relation pair out of range");

  const Mask all_rows = full_mask(rows), all_cols = full_mask(cols);
  const std::size_t n = relation.size();

  // suffix coverage: what relation[i..] can still reach
  std::vector<Mask> suffix_rows(n + 1, 0), suffix_cols(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) {
    suffix_rows[i] = suffix_rows[i + 1] | Mask{1} << relation[i].first;
    suffix_cols[i] = suffix_cols[i + 1] | Mask{1} << relation[i].second;
  }

  std::vector<Mask> found;
  auto visit = [&](auto&& self, std::size_t i, Mask chosen, Mask row_cov, Mask col_cov) -> void {
    if ((row_cov | suffix_rows[i]) != all_rows || (col_cov | suffix_cols[i]) != all_cols) return;
    if (i == n) {
      found.push_back(chosen);
      if (found.size() > max_results) throw GuardError("too many covering subsets");
      return;
    }
    self(self, i + 1, chosen, row_cov, col_cov);
    self(self, i + 1, chosen | Mask{1} << i, row_cov | Mask{1} << relation[i].first,
         col_cov | Mask{1} << relation[i].second);
  };
  visit(visit, 0, 0, 0, 0);
  std::sort(found.begin(), found.end());

  std::vector<CoveringSubset> out;
  out.reserve(found.size());
  for (auto m : found) {
    CoveringSubset k{m, {}};
    for (std::size_t i = 0; i < n; ++i)
      if (m >> i & 1) k.pairs.push_back(relation[i]);
    out.push_back(std::move(k));
  }
  return out;
}

/// The full relation R x C, row-major.
inline std::vector<Pair> full_relation(std::size_t rows, std::size_t cols) {
  std::vector<Pair> rel;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) rel.emplace_back(r, c);
  return rel;
}

}  // namespace laby
