#include <gtest/gtest.h>

#include "laby/laby.hpp"

using namespace laby;

namespace {

std::int64_t binom(std::size_t n, std::size_t k) {
  std::int64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<std::int64_t>(n - k + i) / static_cast<std::int64_t>(i);
  return r;
}

// dim F(Omega^k) = sum_j C(k,j) dim ce_j, inverted.
std::size_t moebius_ce_dim(const Functor& f, std::size_t k) {
  std::int64_t total = 0;
  for (std::size_t j = 0; j <= k; ++j)
    total += ((k - j) % 2 ? -1 : 1) * binom(k, j) * static_cast<std::int64_t>(f.obj(j));
  return static_cast<std::size_t>(total);
}

// Alternating sum over subsets with explicit zero blocks.
Matrix deviation_oracle(const Functor& f, const std::vector<Matrix>& arrows) {
  const auto& A = f.source_ring();
  const std::size_t k = arrows.size();
  std::size_t total = 0;
  for (const auto& a : arrows) total += a.cols();
  Matrix out(f.target_field(), f.obj(arrows.front().rows()), f.obj(total));
  for (Mask I = 0; I <= full_mask(k); ++I) {
    std::vector<Matrix> cols;
    for (std::size_t i = 0; i < k; ++i) cols.push_back(I >> i & 1 ? arrows[i] : Matrix(A, arrows[i].rows(), arrows[i].cols()));
    auto term = f.apply(arrow_sum(cols));
    if ((k - popcount(I)) % 2) out -= term;
    else out += term;
  }
  return out;
}

struct Case {
  std::string functor;
  RingSpec ring, field;
  std::vector<std::size_t> dims;  // ce_0 .. ce_3
};

const std::vector<Case>& cases() {
  static const std::vector<Case> all = {
      {"U", RingSpec::zmod(2), RingSpec::fp(2), {1, 1, 1, 1}},
      {"U", RingSpec::zmod(3), RingSpec::fp(3), {1, 2, 4, 8}},
      {"U", RingSpec::zmod(4), RingSpec::fp(2), {1, 3, 9, 27}},
      {"RedU", RingSpec::zmod(2), RingSpec::fp(2), {0, 1, 1, 1}},
      {"T1", RingSpec::fp(3), RingSpec::fp(3), {0, 1, 0, 0}},
      {"T2", RingSpec::fp(2), RingSpec::fp(2), {0, 1, 2, 0}},
      {"T2", RingSpec::fp(3), RingSpec::fp(3), {0, 1, 2, 0}},
      {"T3", RingSpec::fp(2), RingSpec::fp(2), {0, 1, 6, 6}},
      {"S2", RingSpec::fp(3), RingSpec::fp(3), {0, 1, 1, 0}},
      {"S2", RingSpec::fp(2), RingSpec::fp(2), {0, 1, 1, 0}},
      {"L2", RingSpec::fp(3), RingSpec::fp(3), {0, 0, 1, 0}},
      {"L2", RingSpec::fp(2), RingSpec::fp(2), {0, 0, 1, 0}},
      {"Zero", RingSpec::zmod(2), RingSpec::fp(2), {0, 0, 0, 0}},
      {"Sum(S2,L2)", RingSpec::fp(3), RingSpec::fp(3), {0, 1, 2, 0}},
  };
  return all;
}

}  // namespace

TEST(CrossEffects, DimensionsMatchInclusionExclusion) {
  for (const auto& c : cases()) {
    auto f = build_functor(c.functor, c.ring, c.field);
    for (std::size_t k = 0; k <= 3; ++k) {
      EXPECT_EQ(ce_dim(f, k), c.dims[k]) << c.functor << " " << c.ring.to_string() << " k=" << k;
      EXPECT_EQ(moebius_ce_dim(f, k), c.dims[k]) << c.functor << " k=" << k;
      EXPECT_EQ(ce_dim_by_kernel(f, ones(k)), c.dims[k]) << c.functor << " k=" << k;
    }
  }
}

TEST(CrossEffects, KernelEqualsImageOnCompositions) {
  for (const auto& c : cases()) {
    auto f = build_functor(c.functor, c.ring, c.field);
    for (const auto& parts : compositions_up_to(3)) {
      auto image = ce_basis(f, parts).space;
      auto kernel = Subspace::kernel_of(cross_effect_kernel_map(f, parts));
      EXPECT_EQ(image, kernel) << c.functor << " parts " << parts.size();
    }
  }
}

TEST(CrossEffects, IdempotentsAreOrthogonalAndComplete) {
  for (const auto& c : cases()) {
    auto f = build_functor(c.functor, c.ring, c.field);
    for (std::size_t k = 1; k <= 3; ++k) {
      const auto n = f.obj(k);
      Matrix total(c.field, n, n);
      for (Mask I = 0; I <= full_mask(k); ++I) {
        auto e = subset_idempotent(f, ones(k), I);
        total += e;
        for (Mask J = 0; J <= full_mask(k); ++J) {
          auto prod = e * subset_idempotent(f, ones(k), J);
          if (I == J) EXPECT_EQ(prod, e);
          else EXPECT_TRUE(prod.is_zero()) << c.functor << " I=" << I << " J=" << J;
        }
      }
      EXPECT_EQ(total, Matrix::identity(c.field, n)) << c.functor << " k=" << k;
    }
  }
}

TEST(CrossEffects, DecompositionBlocks) {
  auto check = [](const std::string& name, RingSpec ring, RingSpec field, std::vector<std::size_t> expect) {
    auto f = build_functor(name, ring, field);
    auto d = decomposition(f, 2);
    EXPECT_EQ(d.dims, expect) << name;
    EXPECT_EQ(d.J * d.J_inv, Matrix::identity(field, f.obj(2)));
    EXPECT_EQ(d.J_inv * d.J, Matrix::identity(field, f.obj(2)));
  };
  check("U", RingSpec::zmod(2), RingSpec::fp(2), {1, 1, 1, 1});
  check("T2", RingSpec::fp(2), RingSpec::fp(2), {0, 1, 1, 2});
  check("S2", RingSpec::fp(3), RingSpec::fp(3), {0, 1, 1, 1});
  check("L2", RingSpec::fp(3), RingSpec::fp(3), {0, 0, 0, 1});
}

TEST(CrossEffects, DecompositionConjugatesDiagonalArrows) {
  // F(diag(a, b)) is block diagonal in the decomposition, scaled on ce_1 blocks by F(a), F(b)
  auto f = build_functor("S2", RingSpec::fp(3), RingSpec::fp(3));
  auto d = decomposition(f, 2);
  auto conj = d.J * f.apply(Matrix(RingSpec::fp(3), 2, 2, {2, 0, 0, 1})) * d.J_inv;
  EXPECT_EQ(conj, Matrix(RingSpec::fp(3), 3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 2}));
}

TEST(Degree, QuadraticFunctors) {
  for (auto name : {"T2", "S2", "L2"}) {
    auto f = build_functor(name, RingSpec::fp(3), RingSpec::fp(3));
    auto d = degree(f, 4);
    ASSERT_TRUE(d.degree.has_value()) << name;
    EXPECT_EQ(*d.degree, 2u) << name;
    EXPECT_EQ(d.to_string(), "2");
  }
  EXPECT_EQ(degree(build_functor("T3", RingSpec::fp(2), RingSpec::fp(2)), 4).to_string(), "3");
  EXPECT_EQ(degree(build_functor("T1", RingSpec::fp(2), RingSpec::fp(2)), 3).to_string(), "1");
  EXPECT_EQ(degree(build_functor("Zero", RingSpec::fp(2), RingSpec::fp(2)), 3).to_string(), "0");
}

TEST(Degree, LinearizationIsNotPolynomial) {
  auto red = build_functor("RedU", RingSpec::zmod(2), RingSpec::fp(2));
  auto d = degree(red, 4);
  EXPECT_FALSE(d.degree.has_value());
  EXPECT_EQ(d.to_string(), "exceeds 4");
  for (std::size_t k = 1; k < d.ce_dims.size(); ++k) EXPECT_EQ(d.ce_dims[k], 1u);
  EXPECT_EQ(degree(build_functor("U", RingSpec::zmod(2), RingSpec::fp(2)), 3).to_string(), "exceeds 3");
}

TEST(Degree, AnnihilationProfileMatchesCrossEffects) {
  auto t2 = build_functor("T2", RingSpec::fp(2), RingSpec::fp(2));
  EXPECT_EQ(annihilation_profile(t2, 4), (std::vector<std::size_t>{0, 1, 2, 0, 0}));
  auto red = build_functor("RedU", RingSpec::zmod(2), RingSpec::fp(2));
  EXPECT_EQ(annihilation_profile(red, 4), (std::vector<std::size_t>{0, 1, 1, 1, 1}));
}

TEST(Deviation, MatchesSubsetOracle) {
  Rng rng(9);
  for (const auto& c : cases()) {
    auto f = build_functor(c.functor, c.ring, c.field);
    for (int i = 0; i < 10; ++i) {
      const std::size_t k = rng.between(1, 3), rows = rng.between(1, 2);
      std::vector<Matrix> arrows;
      for (std::size_t j = 0; j < k; ++j) arrows.push_back(rng.matrix(c.ring, rows, 1));
      EXPECT_EQ(deviate(f, arrows), deviation_oracle(f, arrows)) << c.functor;
    }
  }
}

TEST(Deviation, ParallelFormMatchesSumsOfArrows) {
  Rng rng(10);
  auto f = build_functor("U", RingSpec::zmod(3), RingSpec::fp(3));
  for (int i = 0; i < 20; ++i) {
    const std::size_t k = rng.between(0, 3), rows = rng.between(1, 2), cols = rng.between(1, 2);
    std::vector<Matrix> arrows;
    for (std::size_t j = 0; j < k; ++j) arrows.push_back(rng.matrix(RingSpec::zmod(3), rows, cols));
    Matrix expect(RingSpec::fp(3), f.obj(rows), f.obj(cols));
    for (Mask I = 0; I <= full_mask(k); ++I) {
      Matrix s(RingSpec::zmod(3), rows, cols);
      for (std::size_t j = 0; j < k; ++j)
        if (I >> j & 1) s += arrows[j];
      expect.add_scaled(f.apply(s), RingSpec::fp(3).sign(k - popcount(I)));
    }
    EXPECT_EQ(deviate_parallel(f, arrows, rows, cols), expect);
  }
}

TEST(Deviation, VanishesAboveDegree) {
  Rng rng(11);
  auto f = build_functor("T2", RingSpec::fp(3), RingSpec::fp(3));
  for (int i = 0; i < 10; ++i) {
    std::vector<Matrix> arrows;
    for (int j = 0; j < 3; ++j) arrows.push_back(rng.matrix(RingSpec::fp(3), 2, 1));
    EXPECT_TRUE(deviate(f, arrows).is_zero());
  }
}

TEST(DeviationFormula, HoldsOnRandomFamilies) {
  Rng rng(12);
  for (const auto& [name, ring, field] : std::vector<std::tuple<std::string, RingSpec, RingSpec>>{
           {"U", RingSpec::zmod(2), RingSpec::fp(2)}, {"T2", RingSpec::fp(2), RingSpec::fp(2)}, {"S2", RingSpec::fp(3), RingSpec::fp(3)}}) {
    auto f = build_functor(name, ring, field);
    for (auto [m, n] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {1, 2}, {2, 1}, {2, 2}})
      for (int s = 0; s < 15; ++s) {
        std::vector<Matrix> alphas, betas;
        std::size_t mid = 0;
        const std::size_t M = rng.between(1, 2);
        for (std::size_t i = 0; i < m; ++i) {
          alphas.push_back(rng.matrix(ring, M, rng.between(1, 2)));
          mid += alphas.back().cols();
        }
        for (std::size_t j = 0; j < n; ++j) betas.push_back(rng.matrix(ring, mid, rng.between(1, 2)));
        auto r = deviation_formula(f, alphas, betas);
        EXPECT_TRUE(r.holds()) << name << " m=" << m << " n=" << n;
        EXPECT_EQ(r.outer_terms, covering_subsets(m, n, full_relation(m, n)).size());
      }
  }
}

TEST(DeviationFormula, RejectsMismatchedShapes) {
  auto f = build_functor("T2", RingSpec::fp(2), RingSpec::fp(2));
  Matrix a(RingSpec::fp(2), 2, 1), b(RingSpec::fp(2), 3, 1);
  EXPECT_THROW(deviation_formula(f, {a}, {b}), DimensionError);
  EXPECT_THROW(deviation_formula(f, {}, {b}), DimensionError);
}
