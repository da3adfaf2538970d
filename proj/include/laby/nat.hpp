#pragma once

#include <functional>
#include <string>

#include "laby/functor.hpp"

namespace laby {

/// A natural transformation eta: F -> G given by its components
/// eta_n : F(Omega^n) -> G(Omega^n).
struct NatTransform {
  std::string name;
  Functor source;
  Functor target;
  std::function<Matrix(std::size_t)> component;
};

/// The built-in quotient maps sym: T2 -> S2 and alt: T2 -> L2.
inline NatTransform make_nat_transform(const std::string& name, const Functor& f, const Functor& g) {
  if (!(f.target_field() == g.target_field()) || !(f.source_ring() == g.source_ring()))
    throw InputError("natural transformation between functors over different rings");
  const auto field = f.target_field();
  if (name == "sym" && f.name() == "T2" && g.name() == "S2") {
    return {name, f, g, [field](std::size_t n) {
              Matrix eta(field, n * (n + 1) / 2, n * n);
              for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                  eta.set(detail::sym_index(std::min(i, j), std::max(i, j), n), i * n + j, 1);
              return eta;
            }};
  }
  if (name == "alt" && f.name() == "T2" && g.name() == "L2") {
    return {name, f, g, [field](std::size_t n) {
              Matrix eta(field, n < 2 ? 0 : n * (n - 1) / 2, n * n);
              for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                  if (i < j) eta.set(detail::alt_index(i, j, n), i * n + j, 1);
                  if (i > j) eta.set(detail::alt_index(j, i, n), i * n + j, -1);
                }
              return eta;
            }};
  }
  if (name == "id" && f.name() == g.name()) {
    return {name, f, g, [f, field](std::size_t n) { return Matrix::identity(field, f.obj(n)); }};
  }
  throw InputError("unsupported natural transformation " + name + ": " + f.name() + " -> " + g.name());
}

/// eta_m F(a) == G(a) eta_n
inline bool is_natural_at(const NatTransform& eta, const Matrix& a) {
  return eta.component(a.rows()) * eta.source.apply(a) == eta.target.apply(a) * eta.component(a.cols());
}

}  // namespace laby
