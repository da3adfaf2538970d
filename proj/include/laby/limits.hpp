#pragma once

#include <cstddef>
#include <string>

#include "laby/error.hpp"

namespace laby {

/// Size bounds. Everything downstream is exponential in at least one of these.
struct Limits {
  std::size_t max_dim = 512;       // ambient dimension of any F(Omega^n) touched
  std::size_t max_passages = 8;    // passages per maze entering compose or evaluation
  std::size_t max_relation = 24;   // pairs in a relation whose covering subsets are enumerated

  void check_dim(std::size_t dim, const std::string& what) const {
    if (dim > max_dim)
      throw GuardError(what + " has dimension " + std::to_string(dim) + ", above max_dim " + std::to_string(max_dim));
  }
  void check_passages(std::size_t n, const std::string& what) const {
    if (n > max_passages)
      throw GuardError(what + " has " + std::to_string(n) + " passages, above max_passages " +
                       std::to_string(max_passages));
  }
};

}  // namespace laby
