#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "laby/arrows.hpp"
#include "laby/limits.hpp"
#include "laby/subsets.hpp"

namespace laby {

/// A labelled passage to <- from, positions into the target and source sets.
struct Passage {
  std::size_t to = 0;
  std::size_t from = 0;
  Residue label = 0;
  friend auto operator<=>(const Passage&, const Passage&) = default;
};

/// A passage named by set elements, label not yet reduced.
struct RawPassage {
  std::string to;
  std::string from;
  std::int64_t label = 0;
};

class MazeSum;

/// A nonzero maze Z -> X in canonical form: every element of X and Z is
/// incident to a passage, no label is zero, and passages are sorted. The
/// middle set is the passage multiset, so mazes that differ only by a
/// renaming of it compare equal.
class Maze {
 public:
  /// The canonical maze, or nullopt when the data describes the zero morphism
  /// (a zero label, or an uncovered element of X or Z).
  static std::optional<Maze> canonical(RingSpec ring, IndexSet target, IndexSet source, std::vector<Passage> passages) {
    Mask hit_to = 0, hit_from = 0;
    if (target.size() >= 64 || source.size() >= 64) throw GuardError("maze endpoint with 64 or more elements");
    for (auto& p : passages) {
      if (p.to >= target.size() || p.from >= source.size()) throw DimensionError("passage endpoint out of range");
      p.label = ring.reduce(p.label);
      if (p.label == 0) return std::nullopt;
      hit_to |= Mask{1} << p.to;
      hit_from |= Mask{1} << p.from;
    }
    if (hit_to != full_mask(target.size()) || hit_from != full_mask(source.size())) return std::nullopt;
    std::sort(passages.begin(), passages.end());
    return Maze(ring, std::move(target), std::move(source), std::move(passages));
  }

  /// The identity maze {x <- x, 1} on X.
  static Maze identity(RingSpec ring, const IndexSet& X) {
    std::vector<Passage> ps;
    for (std::size_t i = 0; i < X.size(); ++i) ps.push_back({i, i, 1});
    return *canonical(ring, X, X, std::move(ps));
  }

  const RingSpec& ring() const { return ring_; }
  const IndexSet& target() const { return target_; }
  const IndexSet& source() const { return source_; }
  const std::vector<Passage>& passages() const { return passages_; }
  std::size_t size() const { return passages_.size(); }

  /// Label matrix: entry (x, z) is the sum of the labels of passages x <- z.
  Matrix label_matrix() const {
    Matrix m(ring_, target_.size(), source_.size());
    for (const auto& p : passages_) m.add_at(p.to, p.from, p.label);
    return m;
  }

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < passages_.size(); ++i) {
      const auto& p = passages_[i];
      s += (i ? ", " : "") + target_[p.to] + "<-" + source_[p.from] + ":" + std::to_string(p.label);
    }
    return s + "}";
  }

  friend bool operator==(const Maze& a, const Maze& b) {
    return a.ring_ == b.ring_ && a.target_ == b.target_ && a.source_ == b.source_ && a.passages_ == b.passages_;
  }
  friend std::strong_ordering operator<=>(const Maze& a, const Maze& b) {
    if (auto c = a.target_ <=> b.target_; c != 0) return c;
    if (auto c = a.source_ <=> b.source_; c != 0) return c;
    if (auto c = a.passages_ <=> b.passages_; c != 0) return c;
    return a.ring_.modulus() <=> b.ring_.modulus();
  }

 private:
  Maze(RingSpec ring, IndexSet target, IndexSet source, std::vector<Passage> passages)
      : ring_(ring), target_(std::move(target)), source_(std::move(source)), passages_(std::move(passages)) {}

  RingSpec ring_;
  IndexSet target_;
  IndexSet source_;
  std::vector<Passage> passages_;
};

/// A formal integer combination of canonical mazes Z -> X: a morphism of Laby(A).
class MazeSum {
 public:
  MazeSum(RingSpec ring, IndexSet target, IndexSet source)
      : ring_(ring), target_(std::move(target)), source_(std::move(source)) {}

  explicit MazeSum(const Maze& m, std::int64_t coeff = 1) : MazeSum(m.ring(), m.target(), m.source()) { add(m, coeff); }

  static MazeSum zero(RingSpec ring, IndexSet target, IndexSet source) {
    return MazeSum(ring, std::move(target), std::move(source));
  }
  static MazeSum identity(RingSpec ring, const IndexSet& X) { return MazeSum(Maze::identity(ring, X)); }

  const RingSpec& ring() const { return ring_; }
  const IndexSet& target() const { return target_; }
  const IndexSet& source() const { return source_; }
  const std::map<Maze, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::size_t max_passages() const {
    std::size_t n = 0;
    for (const auto& [m, c] : terms_) n = std::max(n, m.size());
    return n;
  }

  void add(const Maze& m, std::int64_t coeff) {
    check_endpoints(m.target(), m.source(), "MazeSum::add");
    require_same_ring(ring_, m.ring(), "MazeSum::add");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  MazeSum& operator+=(const MazeSum& other) {
    check_endpoints(other.target_, other.source_, "MazeSum +");
    for (const auto& [m, c] : other.terms_) add(m, c);
    return *this;
  }
  friend MazeSum operator+(MazeSum a, const MazeSum& b) { return a += b; }
  friend MazeSum operator*(std::int64_t c, const MazeSum& s) {
    MazeSum out(s.ring_, s.target_, s.source_);
    for (const auto& [m, k] : s.terms_) out.add(m, c * k);
    return out;
  }
  friend MazeSum operator-(MazeSum a, const MazeSum& b) { return a += (-1) * b; }

  friend bool operator==(const MazeSum& a, const MazeSum& b) {
    return a.ring_ == b.ring_ && a.target_ == b.target_ && a.source_ == b.source_ && a.terms_ == b.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) s += (s.empty() ? "" : " + ") + std::to_string(c) + "*" + m.to_string();
    return s;
  }

  void check_endpoints(const IndexSet& target, const IndexSet& source, const char* where) const {
    if (!(target == target_) || !(source == source_)) throw DimensionError(std::string(where) + ": endpoint mismatch");
  }

 private:
  RingSpec ring_;
  IndexSet target_;
  IndexSet source_;
  std::map<Maze, std::int64_t> terms_;
};

/// Canonical form modulo renaming of the middle set and zero-label
/// annihilation: either the zero morphism or a single maze with coefficient 1.
inline MazeSum normalize(RingSpec ring, const IndexSet& target, const IndexSet& source,
                         const std::vector<Passage>& passages) {
  MazeSum out(ring, target, source);
  if (auto m = Maze::canonical(ring, target, source, passages)) out.add(*m, 1);
  return out;
}

inline MazeSum normalize(RingSpec ring, const IndexSet& target, const IndexSet& source,
                         const std::vector<RawPassage>& raw) {
  std::vector<Passage> ps;
  for (const auto& r : raw) ps.push_back({target.index_of(r.to), source.index_of(r.from), ring.reduce(r.label)});
  return normalize(ring, target, source, ps);
}

/// P o Q for single mazes. Every covering K of the compatible pairs
/// {(p, q) : from(p) = to(q)} contributes the maze with passages
/// to(p) <- from(q) labelled label(p) * label(q).
inline MazeSum compose(const Maze& P, const Maze& Q, const Limits& limits = {}) {
  require_same_ring(P.ring(), Q.ring(), "compose");
  if (!(P.source() == Q.target())) throw DimensionError("compose: source of the left maze is not the target of the right");
  limits.check_passages(P.size(), "left maze");
  limits.check_passages(Q.size(), "right maze");
  const auto& ring = P.ring();
  std::vector<Pair> relation;
  for (std::size_t i = 0; i < P.size(); ++i)
    for (std::size_t j = 0; j < Q.size(); ++j)
      if (P.passages()[i].from == Q.passages()[j].to) relation.emplace_back(i, j);
  MazeSum out(ring, P.target(), Q.source());
  for (const auto& K : covering_subsets(P.size(), Q.size(), relation, limits.max_relation)) {
    std::vector<Passage> ps;
    ps.reserve(K.pairs.size());
    for (auto [i, j] : K.pairs) {
      const auto& p = P.passages()[i];
      const auto& q = Q.passages()[j];
      ps.push_back({p.to, q.from, ring.mul(p.label, q.label)});
    }
    if (auto m = Maze::canonical(ring, P.target(), Q.source(), std::move(ps))) out.add(*m, 1);
  }
  return out;
}

/// Bilinear extension of maze composition.
inline MazeSum compose(const MazeSum& P, const MazeSum& Q, const Limits& limits = {}) {
  require_same_ring(P.ring(), Q.ring(), "compose");
  if (!(P.source() == Q.target())) throw DimensionError("compose: source of the left morphism is not the target of the right");
  MazeSum out(P.ring(), P.target(), Q.source());
  for (const auto& [p, a] : P.terms())
    for (const auto& [q, b] : Q.terms()) out += (a * b) * compose(p, q, limits);
  return out;
}

/// Keeps only the mazes with at most n passages: the image in Laby_(n).
inline MazeSum truncate(const MazeSum& s, std::size_t n) {
  MazeSum out(s.ring(), s.target(), s.source());
  for (const auto& [m, c] : s.terms())
    if (m.size() <= n) out.add(m, c);
  return out;
}

/// The presentation X <-f- Y -g-> Z with structure map alpha : Omega^Z -> Omega^Y.
struct StructuredMaze {
  RingSpec ring;
  IndexSet X, Y, Z;
  std::vector<std::size_t> f;  // Y -> X
  std::vector<std::size_t> g;  // Y -> Z
  Matrix alpha;                // |Y| x |Z|, entry (y, z) = 0 unless g(y) = z

  void validate() const {
    if (f.size() != Y.size() || g.size() != Y.size()) throw DimensionError("structured maze: f, g must be defined on Y");
    if (alpha.rows() != Y.size() || alpha.cols() != Z.size()) throw DimensionError("structured maze: alpha must be |Y| x |Z|");
    require_same_ring(alpha.ring(), ring, "structured maze");
    std::vector<bool> hx(X.size()), hz(Z.size());
    for (std::size_t y = 0; y < Y.size(); ++y) {
      if (f[y] >= X.size() || g[y] >= Z.size()) throw DimensionError("structured maze: map value out of range");
      hx[f[y]] = hz[g[y]] = true;
      for (std::size_t z = 0; z < Z.size(); ++z)
        if (z != g[y] && alpha(y, z) != 0)
          throw InputError("structured maze: alpha(" + Y[y] + ", " + Z[z] + ") is nonzero off the fibre of g");
    }
    for (bool b : hx)
      if (!b) throw InputError("structured maze: f is not onto");
    for (bool b : hz)
      if (!b) throw InputError("structured maze: g is not onto");
  }
};

/// Y = passage list, f = to, g = from, alpha(y, g(y)) = label(y).
inline StructuredMaze to_structured(const Maze& m) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m.size(); ++i) names.push_back("p" + std::to_string(i + 1));
  StructuredMaze s{m.ring(), m.target(), IndexSet(std::move(names)), m.source(), {}, {}, Matrix(m.ring(), m.size(), m.source().size())};
  for (std::size_t y = 0; y < m.size(); ++y) {
    const auto& p = m.passages()[y];
    s.f.push_back(p.to);
    s.g.push_back(p.from);
    s.alpha.set(y, p.from, p.label);
  }
  return s;
}

inline MazeSum from_structured(const StructuredMaze& s) {
  s.validate();
  std::vector<Passage> ps;
  for (std::size_t y = 0; y < s.Y.size(); ++y) ps.push_back({s.f[y], s.g[y], s.alpha(y, s.g[y])});
  return normalize(s.ring, s.X, s.Z, ps);
}

/// Splits passage `index` with label c = a + b into the three-term sum
/// [p -> a || b] + [p -> a] + [p -> b]; terms with a zero label vanish.
inline MazeSum split_passage(const Maze& m, std::size_t index, Residue a, Residue b) {
  const auto& ring = m.ring();
  if (index >= m.size()) throw DimensionError("split_passage: no such passage");
  const auto& p = m.passages()[index];
  if (ring.add(ring.reduce(a), ring.reduce(b)) != p.label)
    throw InputError("split_passage: " + std::to_string(a) + " + " + std::to_string(b) + " != " + std::to_string(p.label));
  auto with = [&](std::vector<Residue> labels) {
    std::vector<Passage> ps;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (i != index) ps.push_back(m.passages()[i]);
    for (auto l : labels) ps.push_back({p.to, p.from, l});
    return normalize(ring, m.target(), m.source(), ps);
  };
  return with({ring.reduce(a), ring.reduce(b)}) + with({ring.reduce(a)}) + with({ring.reduce(b)});
}

/// The raw terms of the generalised splitting: passage s is replaced by a
/// nonempty subfamily of parallel passages labelled parts[s][i], whose labels
/// must add up to label(s). Passages without an entry in `parts` stay as they
/// are. One term per choice of nonempty subsets, before normalisation.
inline std::vector<std::vector<Passage>> gen_split_terms(const Maze& m, const std::map<std::size_t, std::vector<Residue>>& parts) {
  const auto& ring = m.ring();
  std::vector<std::vector<Residue>> choices(m.size());
  for (std::size_t s = 0; s < m.size(); ++s) {
    auto it = parts.find(s);
    if (it == parts.end()) {
      choices[s] = {m.passages()[s].label};
      continue;
    }
    if (it->second.empty()) throw InputError("gen_split: empty decomposition of passage " + std::to_string(s));
    Residue sum = 0;
    for (auto l : it->second) sum = ring.add(sum, ring.reduce(l));
    if (sum != m.passages()[s].label) throw InputError("gen_split: parts of passage " + std::to_string(s) + " do not add up to its label");
    if (it->second.size() >= 20) throw GuardError("gen_split: too many parts");
    choices[s] = it->second;
  }
  for (const auto& [s, v] : parts)
    if (s >= m.size()) throw DimensionError("gen_split: no such passage");

  std::vector<std::vector<Passage>> out{{}};
  for (std::size_t s = 0; s < m.size(); ++s) {
    const auto& p = m.passages()[s];
    const auto& labels = choices[s];
    std::vector<std::vector<Passage>> next;
    for (const auto& prefix : out)
      for (Mask I = 1; I <= full_mask(labels.size()); ++I) {
        auto ps = prefix;
        for (std::size_t i = 0; i < labels.size(); ++i)
          if (I >> i & 1) ps.push_back({p.to, p.from, ring.reduce(labels[i])});
        next.push_back(std::move(ps));
      }
    out = std::move(next);
  }
  return out;
}

inline MazeSum gen_split(const Maze& m, const std::map<std::size_t, std::vector<Residue>>& parts) {
  MazeSum out(m.ring(), m.target(), m.source());
  for (const auto& ps : gen_split_terms(m, parts)) out += normalize(m.ring(), m.target(), m.source(), ps);
  return out;
}

}  // namespace laby
