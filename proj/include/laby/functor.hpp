#pragma once

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "laby/arrows.hpp"
#include "laby/linalg.hpp"
#include "laby/random.hpp"

namespace laby {

/// Evaluation table of a functor FMod_A -> Vec_{F_p}: the dimension of
/// F(Omega^n) and the matrix of F(alpha).
class FunctorImpl {
 public:
  virtual ~FunctorImpl() = default;
  virtual std::size_t obj(std::size_t n) const = 0;
  /// `a` is an m x n matrix over the source ring; the result is obj(m) x obj(n)
  /// over the target field.
  virtual Matrix map(const Matrix& a) const = 0;
  /// out += coeff * map(a). Overridden where F(a) is sparse.
  virtual void accumulate(const Matrix& a, Residue coeff, Matrix& out) const { out.add_scaled(map(a), coeff); }
  virtual std::vector<std::string> basis_labels(std::size_t n) const {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < obj(n); ++i) labels.push_back("b" + std::to_string(i));
    return labels;
  }
};

class Functor {
 public:
  Functor(std::string name, RingSpec source, RingSpec target, std::shared_ptr<const FunctorImpl> impl)
      : name_(std::move(name)), source_(source), target_(target), impl_(std::move(impl)) {
    target_.require_field("functor target");
  }

  const std::string& name() const { return name_; }
  const RingSpec& source_ring() const { return source_; }
  const RingSpec& target_field() const { return target_; }

  std::size_t obj(std::size_t n) const { return impl_->obj(n); }

  Matrix apply(const Matrix& a) const {
    require_same_ring(a.ring(), source_, "apply(" + name_ + ")");
    return impl_->map(a);
  }

  void accumulate(const Matrix& a, Residue coeff, Matrix& out) const {
    require_same_ring(a.ring(), source_, "apply(" + name_ + ")");
    if (out.rows() != obj(a.rows()) || out.cols() != obj(a.cols()))
      throw DimensionError("accumulate(" + name_ + "): output has the wrong shape");
    impl_->accumulate(a, coeff, out);
  }

  std::vector<std::string> basis_labels(std::size_t n) const { return impl_->basis_labels(n); }

 private:
  std::string name_;
  RingSpec source_;
  RingSpec target_;
  std::shared_ptr<const FunctorImpl> impl_;
};

namespace detail {

inline std::size_t checked_pow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > (std::size_t{1} << 24) / base)
      throw GuardError("functor dimension " + std::to_string(base) + "^" + std::to_string(exp) + " is too large");
    r *= base;
  }
  return r;
}

// Points of A^n, first coordinate most significant.
inline std::vector<Residue> decode_point(std::size_t index, std::size_t n, std::uint32_t q) {
  std::vector<Residue> v(n);
  for (std::size_t i = n; i-- > 0;) {
    v[i] = static_cast<Residue>(index % q);
    index /= q;
  }
  return v;
}

// Index of the pair (i, j), i <= j (strict: i < j), in lexicographic order of such pairs.
inline std::size_t sym_index(std::size_t i, std::size_t j, std::size_t n) { return i * n - i * (i - 1) / 2 + (j - i); }
inline std::size_t alt_index(std::size_t i, std::size_t j, std::size_t n) { return i * n - i * (i + 1) / 2 + (j - i - 1); }

/// Linearisation: U(Omega^n) = F_p[A^n] with the points of A^n as basis.
class LinearizationImpl final : public FunctorImpl {
 public:
  LinearizationImpl(RingSpec source, RingSpec target) : source_(source), target_(target) {}

  std::size_t obj(std::size_t n) const override { return checked_pow(source_.modulus(), n); }

  Matrix map(const Matrix& a) const override {
    Matrix out(target_, obj(a.rows()), obj(a.cols()));
    accumulate(a, 1, out);
    return out;
  }

  void accumulate(const Matrix& a, Residue coeff, Matrix& out) const override {
    if (coeff == 0) return;
    const std::uint32_t q = source_.modulus();
    const std::size_t n = a.cols(), m = a.rows(), points = obj(n);
    std::vector<Residue> v(n, 0);
    for (std::size_t idx = 0; idx < points; ++idx) {
      std::size_t image = 0;
      for (std::size_t r = 0; r < m; ++r) {
        std::uint64_t s = 0;
        for (std::size_t c = 0; c < n; ++c) s += static_cast<std::uint64_t>(a(r, c)) * v[c];
        image = image * q + static_cast<std::size_t>(s % q);
      }
      out.add_at(image, idx, coeff);
      // next point, last coordinate fastest
      for (std::size_t c = n; c-- > 0;) {
        if (++v[c] < q) break;
        v[c] = 0;
      }
    }
  }

  std::vector<std::string> basis_labels(std::size_t n) const override {
    std::vector<std::string> labels;
    for (std::size_t idx = 0; idx < obj(n); ++idx) {
      auto v = decode_point(idx, n, source_.modulus());
      std::string s = "[";
      for (std::size_t i = 0; i < n; ++i) s += (i ? "," : "") + std::to_string(v[i]);
      labels.push_back(s + "]");
    }
    return labels;
  }

 private:
  RingSpec source_, target_;
};

/// d-th tensor power over A = F_p.
class TensorPowerImpl final : public FunctorImpl {
 public:
  TensorPowerImpl(RingSpec field, std::size_t degree) : field_(field), degree_(degree) {}

  std::size_t obj(std::size_t n) const override { return checked_pow(n, degree_); }

  Matrix map(const Matrix& a) const override {
    Matrix out = Matrix::identity(field_, 1);
    for (std::size_t i = 0; i < degree_; ++i) out = kronecker(out, a);
    return out;
  }

  std::vector<std::string> basis_labels(std::size_t n) const override {
    std::vector<std::string> labels;
    for (std::size_t idx = 0; idx < obj(n); ++idx) {
      auto v = decode_point(idx, degree_, static_cast<std::uint32_t>(n));
      std::string s;
      for (std::size_t i = 0; i < degree_; ++i) s += (i ? "(x)e" : "e") + std::to_string(v[i] + 1);
      labels.push_back(s);
    }
    return labels;
  }

 private:
  RingSpec field_;
  std::size_t degree_;
};

/// Symmetric square T^2 / (x(x)y - y(x)x), basis e_i e_j with i <= j.
class SymmetricSquareImpl final : public FunctorImpl {
 public:
  explicit SymmetricSquareImpl(RingSpec field) : field_(field) {}

  std::size_t obj(std::size_t n) const override { return n * (n + 1) / 2; }

  Matrix map(const Matrix& a) const override {
    const std::size_t m = a.rows(), n = a.cols();
    Matrix out(field_, obj(m), obj(n));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) {
        const std::size_t col = sym_index(j, k, n);
        for (std::size_t p = 0; p < m; ++p)
          for (std::size_t q = 0; q < m; ++q) {
            auto c = field_.mul(a(p, j), a(q, k));
            if (c == 0) continue;
            out.add_at(sym_index(std::min(p, q), std::max(p, q), m), col, c);
          }
      }
    return out;
  }

  std::vector<std::string> basis_labels(std::size_t n) const override {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) labels.push_back("e" + std::to_string(i + 1) + "e" + std::to_string(j + 1));
    return labels;
  }

 private:
  RingSpec field_;
};

/// Exterior square T^2 / span(x(x)x), basis e_i^e_j with i < j. In
/// characteristic 2 this is the quotient, not the alternating tensors.
class ExteriorSquareImpl final : public FunctorImpl {
 public:
  explicit ExteriorSquareImpl(RingSpec field) : field_(field) {}

  std::size_t obj(std::size_t n) const override { return n < 2 ? 0 : n * (n - 1) / 2; }

  Matrix map(const Matrix& a) const override {
    const std::size_t m = a.rows(), n = a.cols();
    Matrix out(field_, obj(m), obj(n));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const std::size_t col = alt_index(j, k, n);
        for (std::size_t p = 0; p < m; ++p)
          for (std::size_t q = p + 1; q < m; ++q) {
            auto c = field_.sub(field_.mul(a(p, j), a(q, k)), field_.mul(a(q, j), a(p, k)));
            if (c != 0) out.add_at(alt_index(p, q, m), col, c);
          }
      }
    return out;
  }

  std::vector<std::string> basis_labels(std::size_t n) const override {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) labels.push_back("e" + std::to_string(i + 1) + "^e" + std::to_string(j + 1));
    return labels;
  }

 private:
  RingSpec field_;
};

class ZeroImpl final : public FunctorImpl {
 public:
  explicit ZeroImpl(RingSpec field) : field_(field) {}
  std::size_t obj(std::size_t) const override { return 0; }
  Matrix map(const Matrix&) const override { return Matrix(field_, 0, 0); }

 private:
  RingSpec field_;
};

class DirectSumImpl final : public FunctorImpl {
 public:
  DirectSumImpl(Functor a, Functor b) : a_(std::move(a)), b_(std::move(b)) {}

  std::size_t obj(std::size_t n) const override { return a_.obj(n) + b_.obj(n); }
  Matrix map(const Matrix& x) const override {
    Matrix out(a_.target_field(), obj(x.rows()), obj(x.cols()));
    place_block(out, a_.apply(x), 0, 0);
    place_block(out, b_.apply(x), a_.obj(x.rows()), a_.obj(x.cols()));
    return out;
  }
  std::vector<std::string> basis_labels(std::size_t n) const override {
    auto la = a_.basis_labels(n), lb = b_.basis_labels(n);
    for (auto& s : la) s = "L:" + s;
    for (auto& s : lb) la.push_back("R:" + s);
    return la;
  }

 private:
  Functor a_, b_;
};

/// Reduced part: Red(F)(M) = ker F(M -> 0), a split summand of F(M).
class ReducedImpl final : public FunctorImpl {
 public:
  explicit ReducedImpl(Functor f) : f_(std::move(f)) {}

  std::size_t obj(std::size_t n) const override { return kernel(n).dim(); }

  Matrix map(const Matrix& a) const override {
    const auto& km = kernel(a.rows());
    const auto& kn = kernel(a.cols());
    auto image = f_.apply(a) * kn.basis();
    auto c = km.coords(image);
    if (!c) throw InvariantViolation("Red(" + f_.name() + "): F(alpha) does not preserve the reduced part");
    return *c;
  }

  std::vector<std::string> basis_labels(std::size_t n) const override {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < obj(n); ++i) labels.push_back("red" + std::to_string(i));
    return labels;
  }

  const Subspace& kernel(std::size_t n) const {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(n);
    if (it != cache_.end()) return it->second;
    auto to_zero = f_.apply(Matrix(f_.source_ring(), 0, n));
    return cache_.emplace(n, Subspace::kernel_of(to_zero)).first->second;
  }

 private:
  Functor f_;
  mutable std::mutex mutex_;
  mutable std::map<std::size_t, Subspace> cache_;
};

}  // namespace detail

/// Parsed functor descriptor: U, RedU, T<d>, S2, L2, Zero, Sum(a,b), Red(a).
struct FunctorSpec {
  enum class Kind { linearization, reduced_linearization, tensor_power, symmetric_square, exterior_square, zero, sum, reduced };

  Kind kind = Kind::linearization;
  std::size_t degree = 0;  // tensor_power only
  std::vector<FunctorSpec> args;

  static FunctorSpec parse(std::string_view text) {
    std::size_t pos = 0;
    auto spec = parse_at(text, pos);
    skip_ws(text, pos);
    if (pos != text.size()) throw InputError("trailing characters in functor descriptor '" + std::string(text) + "'");
    return spec;
  }

  std::string to_string() const {
    switch (kind) {
      case Kind::linearization: return "U";
      case Kind::reduced_linearization: return "RedU";
      case Kind::tensor_power: return "T" + std::to_string(degree);
      case Kind::symmetric_square: return "S2";
      case Kind::exterior_square: return "L2";
      case Kind::zero: return "Zero";
      case Kind::sum: return "Sum(" + args[0].to_string() + "," + args[1].to_string() + ")";
      case Kind::reduced: return "Red(" + args[0].to_string() + ")";
    }
    return "?";
  }

  /// Whether the source ring must equal the target field.
  bool needs_field_source() const {
    switch (kind) {
      case Kind::tensor_power:
      case Kind::symmetric_square:
      case Kind::exterior_square: return true;
      case Kind::sum: return args[0].needs_field_source() || args[1].needs_field_source();
      case Kind::reduced: return args[0].needs_field_source();
      default: return false;
    }
  }

  friend bool operator==(const FunctorSpec&, const FunctorSpec&) = default;

 private:
  static void skip_ws(std::string_view t, std::size_t& pos) {
    while (pos < t.size() && (t[pos] == ' ' || t[pos] == '\t')) ++pos;
  }

  static FunctorSpec parse_at(std::string_view t, std::size_t& pos) {
    skip_ws(t, pos);
    std::size_t start = pos;
    while (pos < t.size() && std::isalnum(static_cast<unsigned char>(t[pos]))) ++pos;
    std::string ident(t.substr(start, pos - start));
    if (ident.empty()) throw InputError("expected a functor name in '" + std::string(t) + "'");

    auto args = [&](std::size_t count) {
      skip_ws(t, pos);
      if (pos >= t.size() || t[pos] != '(') throw InputError(ident + " expects " + std::to_string(count) + " argument(s)");
      ++pos;
      std::vector<FunctorSpec> out;
      for (std::size_t i = 0; i < count; ++i) {
        if (i) {
          skip_ws(t, pos);
          if (pos >= t.size() || t[pos] != ',') throw InputError("expected ',' in " + ident + "(...)");
          ++pos;
        }
        out.push_back(parse_at(t, pos));
      }
      skip_ws(t, pos);
      if (pos >= t.size() || t[pos] != ')') throw InputError("expected ')' after " + ident + " arguments");
      ++pos;
      return out;
    };

    FunctorSpec s;
    if (ident == "U") s.kind = Kind::linearization;
    else if (ident == "RedU") s.kind = Kind::reduced_linearization;
    else if (ident == "S2") s.kind = Kind::symmetric_square;
    else if (ident == "L2") s.kind = Kind::exterior_square;
    else if (ident == "Zero") s.kind = Kind::zero;
    else if (ident == "Sum") { s.kind = Kind::sum; s.args = args(2); }
    else if (ident == "Red") { s.kind = Kind::reduced; s.args = args(1); }
    else if (ident.size() >= 2 && ident[0] == 'T' &&
             ident.find_first_not_of("0123456789", 1) == std::string::npos && ident.size() <= 3) {
      s.kind = Kind::tensor_power;
      s.degree = std::stoul(ident.substr(1));
      if (s.degree < 1 || s.degree > 4) throw InputError("tensor power degree must be 1..4, got " + ident);
    } else {
      throw InputError("unknown functor '" + ident + "'");
    }
    return s;
  }
};

/// Throws InvariantViolation with a witness unless F(id) = id and
/// F(ab) = F(a)F(b) on `pairs` random composable pairs of arities <= max_arity.
inline void spot_check_functor_laws(const Functor& f, std::size_t pairs, std::uint64_t seed, std::size_t max_arity = 2) {
  Rng rng(seed);
  const auto& A = f.source_ring();
  for (std::size_t n = 0; n <= max_arity; ++n)
    if (!(f.apply(Matrix::identity(A, n)) == Matrix::identity(f.target_field(), f.obj(n))))
      throw InvariantViolation(f.name() + ": F(id_" + std::to_string(n) + ") is not the identity");
  for (std::size_t i = 0; i < pairs; ++i) {
    auto m = rng.between(0, max_arity), k = rng.between(0, max_arity), n = rng.between(0, max_arity);
    auto a = rng.matrix(A, m, k), b = rng.matrix(A, k, n);
    if (!(f.apply(a * b) == f.apply(a) * f.apply(b)))
      throw InvariantViolation(f.name() + ": F(ab) != F(a)F(b) for a = " + a.key() + ", b = " + b.key());
  }
}

/// Builds a concrete functor FMod_A -> Vec_{F_p} from its descriptor.
inline Functor build_functor(const FunctorSpec& spec, RingSpec ring, RingSpec field, bool check_laws = true) {
  field.require_field("functor target");
  if (spec.needs_field_source() && !(ring == field))
    throw InputError(spec.to_string() + " needs source ring equal to the target field, got " + ring.to_string() +
                     " -> " + field.to_string());
  using K = FunctorSpec::Kind;
  std::shared_ptr<const FunctorImpl> impl;
  switch (spec.kind) {
    case K::linearization: impl = std::make_shared<detail::LinearizationImpl>(ring, field); break;
    case K::reduced_linearization:
      impl = std::make_shared<detail::ReducedImpl>(
          Functor("U", ring, field, std::make_shared<detail::LinearizationImpl>(ring, field)));
      break;
    case K::tensor_power: impl = std::make_shared<detail::TensorPowerImpl>(field, spec.degree); break;
    case K::symmetric_square: impl = std::make_shared<detail::SymmetricSquareImpl>(field); break;
    case K::exterior_square: impl = std::make_shared<detail::ExteriorSquareImpl>(field); break;
    case K::zero: impl = std::make_shared<detail::ZeroImpl>(field); break;
    case K::sum:
      impl = std::make_shared<detail::DirectSumImpl>(build_functor(spec.args[0], ring, field, false),
                                                     build_functor(spec.args[1], ring, field, false));
      break;
    case K::reduced:
      impl = std::make_shared<detail::ReducedImpl>(build_functor(spec.args[0], ring, field, false));
      break;
  }
  Functor f(spec.to_string(), ring, field, std::move(impl));
  if (check_laws) spot_check_functor_laws(f, 5, 0x5eed);
  return f;
}

inline Functor build_functor(std::string_view spec, RingSpec ring, RingSpec field) {
  return build_functor(FunctorSpec::parse(spec), ring, field);
}

/// A functor known on the arities 0..N through an explicit arrow table,
/// obtained by closing a generating set under composition. Every composable
/// pair of table arrows is checked against F(ab) = F(a)F(b) during closure.
class TableFunctorImpl final : public FunctorImpl {
 public:
  struct Generator {
    Matrix arrow;
    Matrix image;
  };

  TableFunctorImpl(RingSpec ring, RingSpec field, std::vector<std::size_t> dims, const std::vector<Generator>& gens,
                   std::size_t max_arrows = 1u << 14)
      : ring_(ring), field_(field), dims_(std::move(dims)) {
    if (dims_.empty()) throw InputError("functor table needs at least obj(0)");
    const std::size_t N = dims_.size() - 1;
    std::size_t expected = 0;
    for (std::size_t m = 0; m <= N; ++m)
      for (std::size_t n = 0; n <= N; ++n) {
        expected += detail::checked_pow(ring.modulus(), m * n);
        if (expected > max_arrows) throw GuardError("functor table would hold more than " + std::to_string(max_arrows) + " arrows");
      }

    std::vector<std::string> order;  // keys in discovery order
    auto insert = [&](const Matrix& a, Matrix img, const std::string& why) {
      if (a.rows() > N || a.cols() > N) throw InputError("table arrow " + a.key() + " exceeds the largest arity");
      if (img.rows() != dims_[a.rows()] || img.cols() != dims_[a.cols()] || !(img.ring() == field_))
        throw InputError("image of " + a.key() + " has the wrong shape or field");
      auto key = a.key();
      auto it = table_.find(key);
      if (it != table_.end()) {
        if (!(it->second.image == img))
          throw InputError("functor laws fail: conflicting images for " + key + " (" + why + ")");
        return;
      }
      table_.emplace(key, Generator{a, std::move(img)});
      order.push_back(key);
    };
    for (std::size_t n = 0; n <= N; ++n) insert(Matrix::identity(ring, n), Matrix::identity(field, dims_[n]), "identity");
    for (const auto& g : gens) {
      require_same_ring(g.arrow.ring(), ring, "functor table");
      insert(g.arrow, g.image, "generator");
    }

    for (std::size_t next = 0; next < order.size(); ++next) {
      const auto cur = table_.at(order[next]);
      for (std::size_t j = 0; j <= next; ++j) {
        const auto other = table_.at(order[j]);
        if (cur.arrow.cols() == other.arrow.rows())
          insert(cur.arrow * other.arrow, cur.image * other.image, "composite " + cur.arrow.key() + " . " + other.arrow.key());
        if (j != next && other.arrow.cols() == cur.arrow.rows())
          insert(other.arrow * cur.arrow, other.image * cur.image, "composite " + other.arrow.key() + " . " + cur.arrow.key());
      }
      if (table_.size() > max_arrows) throw GuardError("functor table closure exceeded its bound");
    }
    if (table_.size() != expected)
      throw InputError("generators reach " + std::to_string(table_.size()) + " of " + std::to_string(expected) +
                       " arrows; they do not generate the category up to arity " + std::to_string(N));
  }

  std::size_t max_arity() const { return dims_.size() - 1; }
  std::size_t obj(std::size_t n) const override {
    if (n >= dims_.size()) throw GuardError("functor table is only defined up to arity " + std::to_string(max_arity()));
    return dims_[n];
  }
  Matrix map(const Matrix& a) const override {
    auto it = table_.find(a.key());
    if (it == table_.end()) throw GuardError("functor table has no entry for " + a.key());
    return it->second.image;
  }

 private:
  RingSpec ring_, field_;
  std::vector<std::size_t> dims_;
  std::unordered_map<std::string, Generator> table_;
};

}  // namespace laby
