#pragma once

#include <cstdint>
#include <random>

#include "laby/matrix.hpp"

namespace laby {

/// Seeded sampler. mt19937_64 is fully specified by the standard; draws are
/// reduced with a plain modulo (not std::uniform_int_distribution, whose
/// output is implementation-defined) so witnesses reproduce everywhere.
class Rng {
 public:
  static constexpr const char* algorithm = "mt19937_64/mod-v1";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  bool coin() { return below(2) == 1; }

  Residue residue(const RingSpec& ring) { return static_cast<Residue>(below(ring.modulus())); }
  Residue nonzero_residue(const RingSpec& ring) { return static_cast<Residue>(1 + below(ring.modulus() - 1)); }

  Matrix matrix(const RingSpec& ring, std::size_t rows, std::size_t cols) {
    Matrix m(ring, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m.set(r, c, residue(ring));
    return m;
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace laby
