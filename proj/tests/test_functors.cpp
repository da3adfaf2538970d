#include <gtest/gtest.h>

#include "laby/laby.hpp"

using namespace laby;

namespace {

// Index of a point of A^n, first coordinate most significant.
std::size_t point_index(const std::vector<std::int64_t>& v, std::int64_t q) {
  std::size_t idx = 0;
  for (auto x : v) idx = idx * q + static_cast<std::size_t>(((x % q) + q) % q);
  return idx;
}

std::vector<std::int64_t> point(std::size_t idx, std::size_t n, std::int64_t q) {
  std::vector<std::int64_t> v(n);
  for (std::size_t i = n; i-- > 0; idx /= q) v[i] = static_cast<std::int64_t>(idx % q);
  return v;
}

// U(a) column by column from the definition [v] -> [a v].
Matrix linearization_oracle(const Matrix& a, RingSpec field) {
  const std::int64_t q = a.ring().modulus();
  std::size_t src = 1, dst = 1;
  for (std::size_t i = 0; i < a.cols(); ++i) src *= q;
  for (std::size_t i = 0; i < a.rows(); ++i) dst *= q;
  Matrix out(field, dst, src);
  for (std::size_t idx = 0; idx < src; ++idx) {
    auto v = point(idx, a.cols(), q);
    std::vector<std::int64_t> w(a.rows(), 0);
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c) w[r] += static_cast<std::int64_t>(a(r, c)) * v[c];
    out.set(point_index(w, q), idx, 1);
  }
  return out;
}

// (a (x) a) entry ((i,k),(j,l)) = a_ij a_kl.
Matrix tensor_square_oracle(const Matrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  Matrix out(a.ring(), m * m, n * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l) out.set(i * m + k, j * n + l, static_cast<std::int64_t>(a(i, j)) * a(k, l));
  return out;
}

const std::vector<std::tuple<std::string, RingSpec, RingSpec>>& builtins() {
  static const std::vector<std::tuple<std::string, RingSpec, RingSpec>> all = {
      {"U", RingSpec::zmod(2), RingSpec::fp(2)},   {"U", RingSpec::zmod(4), RingSpec::fp(2)},
      {"U", RingSpec::zmod(3), RingSpec::fp(3)},   {"RedU", RingSpec::zmod(2), RingSpec::fp(2)},
      {"T1", RingSpec::fp(3), RingSpec::fp(3)},    {"T2", RingSpec::fp(2), RingSpec::fp(2)},
      {"T3", RingSpec::fp(2), RingSpec::fp(2)},    {"S2", RingSpec::fp(3), RingSpec::fp(3)},
      {"S2", RingSpec::fp(2), RingSpec::fp(2)},    {"L2", RingSpec::fp(3), RingSpec::fp(3)},
      {"L2", RingSpec::fp(2), RingSpec::fp(2)},    {"Zero", RingSpec::zmod(2), RingSpec::fp(2)},
      {"Sum(T2,S2)", RingSpec::fp(3), RingSpec::fp(3)}, {"Red(S2)", RingSpec::fp(3), RingSpec::fp(3)}};
  return all;
}

}  // namespace

TEST(Functors, LinearizationMatchesDefinition) {
  Rng rng(1);
  for (auto q : {2u, 3u, 4u}) {
    auto f = build_functor("U", RingSpec::zmod(q), RingSpec::fp(2));
    for (int i = 0; i < 30; ++i) {
      auto a = rng.matrix(RingSpec::zmod(q), rng.between(0, 3), rng.between(0, 3));
      EXPECT_EQ(f.apply(a), linearization_oracle(a, RingSpec::fp(2))) << a.key();
    }
  }
}

TEST(Functors, LinearizationSmallCases) {
  auto z2 = RingSpec::zmod(2), f2 = RingSpec::fp(2);
  auto u = build_functor("U", z2, f2);
  EXPECT_EQ(u.obj(3), 8u);
  EXPECT_EQ(u.apply(Matrix(z2, 1, 1, {0})), Matrix(f2, 2, 2, {1, 1, 0, 0}));
  EXPECT_EQ(u.apply(Matrix(z2, 1, 1, {1})), Matrix::identity(f2, 2));
  EXPECT_EQ(u.basis_labels(2), (std::vector<std::string>{"[0,0]", "[0,1]", "[1,0]", "[1,1]"}));
}

TEST(Functors, AccumulateAgreesWithApply) {
  Rng rng(2);
  auto u = build_functor("U", RingSpec::zmod(3), RingSpec::fp(3));
  auto a = rng.matrix(RingSpec::zmod(3), 2, 2);
  Matrix out(RingSpec::fp(3), 9, 9);
  u.accumulate(a, 2, out);
  EXPECT_EQ(out, u.apply(a) + u.apply(a));
  Matrix wrong(RingSpec::fp(3), 3, 3);
  EXPECT_THROW(u.accumulate(a, 1, wrong), DimensionError);
}

TEST(Functors, TensorSquareMatchesOracle) {
  Rng rng(3);
  auto f = RingSpec::fp(3);
  auto t2 = build_functor("T2", f, f);
  for (int i = 0; i < 30; ++i) {
    auto a = rng.matrix(f, rng.between(0, 3), rng.between(0, 3));
    EXPECT_EQ(t2.apply(a), tensor_square_oracle(a));
  }
}

TEST(Functors, QuotientsAreNaturalImagesOfTensorSquare) {
  Rng rng(4);
  for (auto p : {2u, 3u}) {
    auto f = RingSpec::fp(p);
    auto t2 = build_functor("T2", f, f), s2 = build_functor("S2", f, f), l2 = build_functor("L2", f, f);
    auto sym = make_nat_transform("sym", t2, s2), alt = make_nat_transform("alt", t2, l2);
    for (int i = 0; i < 40; ++i) {
      auto a = rng.matrix(f, rng.between(0, 3), rng.between(0, 3));
      EXPECT_TRUE(is_natural_at(sym, a)) << a.key();
      EXPECT_TRUE(is_natural_at(alt, a)) << a.key();
    }
  }
}

TEST(Functors, ExteriorSquareOfTwoByTwoIsDeterminant) {
  auto f = RingSpec::fp(5);
  auto l2 = build_functor("L2", f, f);
  Matrix a(f, 2, 2, {2, 3, 1, 4});
  EXPECT_EQ(l2.apply(a), Matrix(f, 1, 1, {2 * 4 - 3 * 1}));
  EXPECT_EQ(l2.obj(1), 0u);
  EXPECT_EQ(l2.obj(4), 6u);
}

TEST(Functors, SymmetricSquareOnScalars) {
  auto f = RingSpec::fp(3);
  auto s2 = build_functor("S2", f, f);
  EXPECT_EQ(s2.apply(Matrix(f, 1, 1, {2})), Matrix(f, 1, 1, {1}));
  EXPECT_EQ(s2.obj(3), 6u);
}

TEST(Functors, AllBuiltinsAreFunctors) {
  Rng rng(5);
  for (const auto& [name, ring, field] : builtins()) {
    auto f = build_functor(name, ring, field);
    for (std::size_t n = 0; n <= 2; ++n) EXPECT_EQ(f.apply(Matrix::identity(ring, n)), Matrix::identity(field, f.obj(n))) << name;
    for (int i = 0; i < 25; ++i) {
      auto a = rng.matrix(ring, rng.between(0, 2), rng.between(0, 2));
      auto b = rng.matrix(ring, a.cols(), rng.between(0, 2));
      EXPECT_EQ(f.apply(a * b), f.apply(a) * f.apply(b)) << name << " " << a.key() << " " << b.key();
    }
  }
}

TEST(Functors, ReducedAndSumDimensions) {
  auto z2 = RingSpec::zmod(2), f2 = RingSpec::fp(2);
  auto red = build_functor("RedU", z2, f2);
  for (std::size_t n = 0; n <= 4; ++n) EXPECT_EQ(red.obj(n), (std::size_t{1} << n) - 1);
  auto f3 = RingSpec::fp(3);
  auto sum = build_functor("Sum(T2,L2)", f3, f3);
  EXPECT_EQ(sum.obj(3), 9u + 3u);
  EXPECT_EQ(build_functor("Red(T2)", f3, f3).obj(2), 4u);
}

TEST(FunctorSpec, ParseRoundTrip) {
  for (std::string s : {"U", "RedU", "T1", "T4", "S2", "L2", "Zero", "Sum(U,T2)", "Red(Sum(S2,L2))"})
    EXPECT_EQ(FunctorSpec::parse(s).to_string(), s);
  EXPECT_EQ(FunctorSpec::parse(" Sum( U , S2 ) ").to_string(), "Sum(U,S2)");
  for (std::string bad : {"", "T5", "T0", "Foo", "Sum(U)", "Red(U", "U)", "S3"})
    EXPECT_THROW(FunctorSpec::parse(bad), InputError) << bad;
}

TEST(FunctorSpec, FieldSourceRequirement) {
  EXPECT_THROW(build_functor("T2", RingSpec::zmod(4), RingSpec::fp(2)), InputError);
  EXPECT_THROW(build_functor("U", RingSpec::zmod(4), RingSpec::zmod(4)), RingError);
  EXPECT_NO_THROW(build_functor("U", RingSpec::zmod(4), RingSpec::fp(3)));
}

TEST(FunctorSpec, DimensionGuard) {
  auto u = build_functor("U", RingSpec::zmod(16), RingSpec::fp(2));
  EXPECT_THROW(u.obj(7), GuardError);
}

TEST(TableFunctor, CompleteTableReproducesFunctor) {
  auto z2 = RingSpec::zmod(2), f2 = RingSpec::fp(2);
  auto u = build_functor("U", z2, f2);
  std::vector<TableFunctorImpl::Generator> gens;
  // elementary generators: 1x1 zero, 2x1 and 1x2 injections / retractions, swaps, shear
  for (auto a : {Matrix(z2, 1, 1, {0}), Matrix(z2, 2, 1, {1, 0}), Matrix(z2, 1, 2, {1, 0}), Matrix(z2, 1, 2, {1, 1}),
                 Matrix(z2, 2, 2, {0, 1, 1, 0}), Matrix(z2, 2, 2, {1, 1, 0, 1}), Matrix(z2, 1, 0), Matrix(z2, 0, 1)})
    gens.push_back({a, u.apply(a)});
  Functor table("table", z2, f2, std::make_shared<TableFunctorImpl>(z2, f2, std::vector<std::size_t>{1, 2, 4}, gens));
  Rng rng(6);
  for (int i = 0; i < 30; ++i) {
    auto a = rng.matrix(z2, rng.between(0, 2), rng.between(0, 2));
    EXPECT_EQ(table.apply(a), u.apply(a));
  }
  EXPECT_EQ(ce_dim(table, 2), 1u);
}

TEST(TableFunctor, ConflictsAndGaps) {
  auto z2 = RingSpec::zmod(2), f2 = RingSpec::fp(2);
  auto u = build_functor("U", z2, f2);
  // (1x0)(0x1) is the zero 1x1 arrow, but the wrong image of 0x1 breaks F(ab) = F(a)F(b)
  std::vector<TableFunctorImpl::Generator> bad{{Matrix(z2, 1, 1, {0}), u.apply(Matrix(z2, 1, 1, {0}))},
                                               {Matrix(z2, 1, 0), u.apply(Matrix(z2, 1, 0))},
                                               {Matrix(z2, 0, 1), Matrix(f2, 1, 2, {1, 0})}};
  try {
    TableFunctorImpl t(z2, f2, {1, 2}, bad);
    FAIL() << "expected a conflict";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("functor laws fail"), std::string::npos) << e.what();
  }
  EXPECT_THROW(TableFunctorImpl(z2, f2, {1, 2}, {}), InputError);
}

TEST(NatTransform, Unsupported) {
  auto f = RingSpec::fp(3);
  EXPECT_THROW(make_nat_transform("sym", build_functor("S2", f, f), build_functor("T2", f, f)), InputError);
  auto id = make_nat_transform("id", build_functor("S2", f, f), build_functor("S2", f, f));
  EXPECT_EQ(id.component(2), Matrix::identity(f, 3));
}
