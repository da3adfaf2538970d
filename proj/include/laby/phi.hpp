#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include "laby/crosseffects.hpp"
#include "laby/maze.hpp"
#include "laby/nat.hpp"

namespace laby {

/// Phi(F)(m) as a dim ce_X F x dim ce_Z F matrix in the CEBasis coordinates.
struct CEMorphism {
  std::string functor;
  IndexSet source;
  IndexSet target;
  Matrix matrix;
};

/// Phi(F): X -> ce_X F(Omega, ..., Omega), mazes -> matrices between cross-effects.
class Phi {
 public:
  explicit Phi(Functor f, Limits limits = {}) : f_(std::move(f)), limits_(limits), cache_(std::make_shared<Cache>()) {}

  const Functor& functor() const { return f_; }
  const Limits& limits() const { return limits_; }
  const RingSpec& field() const { return f_.target_field(); }

  /// ce_k with parts (1, ..., 1); computed once per k.
  const CEBasis& ce(std::size_t k) const {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->ce.find(k);
    if (it == cache_->ce.end()) it = cache_->ce.emplace(k, ce_basis(f_, ones(k), limits_)).first;
    return it->second;
  }
  std::size_t dim(std::size_t k) const { return ce(k).dim(); }

  /// sum_{I subset Y} (-1)^{|Y|-|I|} F(sigma_I alpha), where sigma_I alpha has
  /// entry (x, z) = sum of the labels of the passages in I running x <- z.
  /// This is F(d_{y in Y} sigma_{f(y) y}) F(alpha) without forming F(Omega^Y).
  Matrix ambient(const Maze& m) const {
    require_same_ring(m.ring(), f_.source_ring(), "Phi: maze ring vs functor source");
    limits_.check_passages(m.size(), "maze");
    check_dims(m.target().size(), m.source().size());
    std::vector<Matrix> arrows;
    for (const auto& p : m.passages()) {
      Matrix a(m.ring(), m.target().size(), m.source().size());
      a.set(p.to, p.from, p.label);
      arrows.push_back(std::move(a));
    }
    return deviate_parallel(f_, arrows, m.target().size(), m.source().size());
  }

  CEMorphism eval(const Maze& m) const {
    const auto& bx = ce(m.target().size());
    const auto& bz = ce(m.source().size());
    auto coords = bx.space.coords(ambient(m) * bz.basis());
    if (!coords) throw InvariantViolation("Phi(" + f_.name() + ")" + m.to_string() + ": image leaves ce_" + std::to_string(m.target().size()));
    return {f_.name(), m.source(), m.target(), std::move(*coords)};
  }

  CEMorphism eval(const MazeSum& s) const {
    require_same_ring(s.ring(), f_.source_ring(), "Phi: maze ring vs functor source");
    Matrix out(field(), dim(s.target().size()), dim(s.source().size()));
    for (const auto& [m, c] : s.terms()) out.add_scaled(eval(m).matrix, field().reduce(c));
    return {f_.name(), s.source(), s.target(), std::move(out)};
  }

  /// The displayed formula taken literally: F(d_y sigma_{f(y) y}) F(alpha),
  /// with no normalisation of the structured maze beforehand.
  CEMorphism eval_structured(const StructuredMaze& s) const {
    s.validate();
    require_same_ring(s.ring, f_.source_ring(), "Phi: maze ring vs functor source");
    check_dims(s.X.size(), s.Z.size());
    check_dims(s.Y.size(), s.Y.size());
    Matrix amb(field(), f_.obj(s.X.size()), f_.obj(s.Z.size()));
    if (s.Y.size() == 0) {
      amb = f_.apply(Matrix(s.ring, s.X.size(), s.Z.size()));
    } else {
      std::vector<Matrix> cols;
      for (std::size_t y = 0; y < s.Y.size(); ++y) {
        Matrix e(s.ring, s.X.size(), 1);
        e.set(s.f[y], 0, 1);
        cols.push_back(std::move(e));
      }
      amb = deviate(f_, cols) * f_.apply(s.alpha);
    }
    auto coords = ce(s.X.size()).space.coords(amb * ce(s.Z.size()).basis());
    if (!coords) throw InvariantViolation("Phi(" + f_.name() + "): structured image leaves ce_" + std::to_string(s.X.size()));
    return {f_.name(), s.Z, s.X, std::move(*coords)};
  }

  /// Precomposing the ambient evaluation with the ce_Z idempotent changes nothing.
  bool well_defined(const Maze& m) const {
    auto a = ambient(m);
    return a * ce(m.source().size()).idempotent == a;
  }

 private:
  void check_dims(std::size_t x, std::size_t z) const {
    limits_.check_dim(f_.obj(x), f_.name() + "(Omega^" + std::to_string(x) + ")");
    limits_.check_dim(f_.obj(z), f_.name() + "(Omega^" + std::to_string(z) + ")");
  }

  struct Cache {
    std::mutex mutex;
    std::map<std::size_t, CEBasis> ce;
  };

  Functor f_;
  Limits limits_;
  std::shared_ptr<Cache> cache_;
};

struct FunctorialityResult {
  Matrix lhs;  // Phi(P o Q)
  Matrix rhs;  // Phi(P) Phi(Q)
  bool holds() const { return lhs == rhs; }
};

inline FunctorialityResult functoriality_check(const Phi& phi, const MazeSum& P, const MazeSum& Q) {
  return {phi.eval(compose(P, Q, phi.limits())).matrix, phi.eval(P).matrix * phi.eval(Q).matrix};
}

/// Phi(eta)_k = ce_k eta in the CEBasis coordinates of F and G.
inline Matrix phi_on_nat(const NatTransform& eta, const Phi& F, const Phi& G, std::size_t k) {
  auto coords = G.ce(k).space.coords(eta.component(k) * F.ce(k).basis());
  if (!coords) throw InvariantViolation("phi_on_nat: " + eta.name + " does not map ce_" + std::to_string(k) + " into ce_" + std::to_string(k));
  return std::move(*coords);
}

struct IntertwiningResult {
  Matrix lhs;  // Phi(eta)_X Phi(F)(m)
  Matrix rhs;  // Phi(G)(m) Phi(eta)_Z
  bool holds() const { return lhs == rhs; }
};

inline IntertwiningResult intertwining_check(const NatTransform& eta, const Phi& F, const Phi& G, const MazeSum& m) {
  const auto x = m.target().size(), z = m.source().size();
  return {phi_on_nat(eta, F, G, x) * F.eval(m).matrix, G.eval(m).matrix * phi_on_nat(eta, F, G, z)};
}

/// Block offsets of (+)_{I subset [k]} Phi(I), ordered by subset bitmask.
inline std::vector<std::size_t> subset_offsets(const Phi& phi, std::size_t k) {
  std::vector<std::size_t> off{0};
  for (Mask I = 0; I <= full_mask(k); ++I) off.push_back(off.back() + phi.dim(popcount(I)));
  return off;
}

/// The preimage construction: for alpha : Omega^n -> Omega^m, the block matrix
/// (+)_{B subset [n]} Phi(B) -> (+)_{A subset [m]} Phi(A) whose (A, B) block is
/// the sum of Phi(maze_U) over U subset [m] x [n] projecting onto A and B,
/// maze_U having passages x <- y labelled alpha(x, y).
inline Matrix reconstruct(const Phi& phi, const Matrix& alpha) {
  require_same_ring(alpha.ring(), phi.functor().source_ring(), "reconstruct");
  const std::size_t m = alpha.rows(), n = alpha.cols();
  if (m * n >= 24) throw GuardError("reconstruct: " + std::to_string(m) + "x" + std::to_string(n) + " has too many entries");
  const auto row_off = subset_offsets(phi, m);
  const auto col_off = subset_offsets(phi, n);
  Matrix out(phi.field(), row_off.back(), col_off.back());
  const auto rows = IndexSet::range(m), cols = IndexSet::range(n);
  for (Mask U = 0; U <= full_mask(m * n); ++U) {
    Mask ux = 0, uy = 0;
    bool zero = false;
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (U >> (x * n + y) & 1) {
          ux |= Mask{1} << x;
          uy |= Mask{1} << y;
          zero = zero || alpha(x, y) == 0;
        }
    if (zero) continue;
    // positions inside the restricted sets
    auto rank_in = [](Mask set, std::size_t i) { return popcount(set & (full_mask(i))); };
    std::vector<Passage> ps;
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (U >> (x * n + y) & 1) ps.push_back({rank_in(ux, x), rank_in(uy, y), alpha(x, y)});
    auto maze = Maze::canonical(alpha.ring(), rows.restrict_to(ux), cols.restrict_to(uy), ps);
    if (!maze) continue;
    place_block_add(out, phi.eval(*maze).matrix, row_off[ux], col_off[uy]);
  }
  return out;
}

struct RoundtripResult {
  Matrix conjugated;     // J_m F(alpha) J_n^{-1}
  Matrix reconstructed;  // reconstruct(Phi(F), alpha)
  bool holds() const { return conjugated == reconstructed; }
};

inline RoundtripResult roundtrip_check(const Phi& phi, const Matrix& alpha) {
  const auto& f = phi.functor();
  auto jm = decomposition(f, alpha.rows(), phi.limits());
  auto jn = decomposition(f, alpha.cols(), phi.limits());
  return {jm.J * f.apply(alpha) * jn.J_inv, reconstruct(phi, alpha)};
}

/// dim Phi(F)([k]) for k = 0..nmax, via the kernel characterisation.
inline std::vector<std::size_t> annihilation_profile(const Functor& f, std::size_t nmax, const Limits& limits = {}) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k <= nmax; ++k) out.push_back(ce_dim_by_kernel(f, ones(k), limits));
  return out;
}

}  // namespace laby
