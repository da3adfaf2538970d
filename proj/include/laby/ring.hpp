#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "laby/error.hpp"

namespace laby {

/// A canonical residue in [0, m).
using Residue = std::uint32_t;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// The ring Z/m, or the prime field F_p. Arithmetic is identical; the field
/// capability is decided by primality of the modulus, and the kind tag only
/// affects how the ring is printed.
class RingSpec {
 public:
  enum class Kind { zmod, fp };

  static RingSpec zmod(std::uint32_t m) {
    if (m < 2) throw InputError("zmod modulus must be at least 2, got " + std::to_string(m));
    return RingSpec(Kind::zmod, m);
  }

  static RingSpec fp(std::uint32_t p) {
    if (!is_prime(p)) throw InputError("fp modulus must be prime, got " + std::to_string(p));
    return RingSpec(Kind::fp, p);
  }

  /// Parses "zmod:m" or "fp:p".
  static RingSpec parse(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos) throw InputError("ring must look like zmod:m or fp:p, got '" + std::string(text) + "'");
    auto kind = text.substr(0, colon);
    auto digits = text.substr(colon + 1);
    if (digits.empty() || digits.size() > 9) throw InputError("bad ring modulus in '" + std::string(text) + "'");
    std::uint32_t m = 0;
    for (char c : digits) {
      if (c < '0' || c > '9') throw InputError("bad ring modulus in '" + std::string(text) + "'");
      m = m * 10 + static_cast<std::uint32_t>(c - '0');
    }
    if (kind == "zmod") return zmod(m);
    if (kind == "fp") return fp(m);
    throw InputError("unknown ring kind '" + std::string(kind) + "'");
  }

  std::string to_string() const {
    return (kind_ == Kind::fp ? "fp:" : "zmod:") + std::to_string(modulus_);
  }

  Kind kind() const { return kind_; }
  std::uint32_t modulus() const { return modulus_; }
  std::uint32_t size() const { return modulus_; }
  bool is_field() const { return field_; }

  Residue reduce(std::int64_t v) const {
    auto m = static_cast<std::int64_t>(modulus_);
    auto r = v % m;
    return static_cast<Residue>(r < 0 ? r + m : r);
  }
  Residue add(Residue a, Residue b) const {
    auto s = static_cast<std::uint64_t>(a) + b;
    return static_cast<Residue>(s >= modulus_ ? s - modulus_ : s);
  }
  Residue sub(Residue a, Residue b) const { return a >= b ? a - b : static_cast<Residue>(a + (modulus_ - b)); }
  Residue neg(Residue a) const { return a == 0 ? 0 : modulus_ - a; }
  Residue mul(Residue a, Residue b) const {
    return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % modulus_);
  }
  /// (-1)^k
  Residue sign(std::size_t k) const { return k % 2 == 0 ? 1 : neg(1); }

  Residue inv(Residue a) const {
    require_field("inverse");
    if (a % modulus_ == 0) throw RingError("division by zero in " + to_string());
    // Fermat: a^(p-2)
    std::uint64_t result = 1, base = a % modulus_, e = modulus_ - 2;
    while (e > 0) {
      if (e & 1) result = result * base % modulus_;
      base = base * base % modulus_;
      e >>= 1;
    }
    return static_cast<Residue>(result);
  }

  void require_field(std::string_view what) const {
    if (!field_) throw RingError(std::string(what) + " needs a prime field, got " + to_string());
  }

  /// Rings compare by modulus; zmod:p and fp:p are the same ring.
  friend bool operator==(const RingSpec& a, const RingSpec& b) { return a.modulus_ == b.modulus_; }

 private:
  RingSpec(Kind kind, std::uint32_t m) : kind_(kind), modulus_(m), field_(is_prime(m)) {}

  Kind kind_;
  std::uint32_t modulus_;
  bool field_;
};

inline void require_same_ring(const RingSpec& a, const RingSpec& b, std::string_view where) {
  if (!(a == b)) throw RingError(std::string(where) + ": ring mismatch " + a.to_string() + " vs " + b.to_string());
}

}  // namespace laby
