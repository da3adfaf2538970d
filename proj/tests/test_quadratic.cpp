#include <gtest/gtest.h>

#include "laby/laby.hpp"

using namespace laby;

namespace {

const LawResult& find(const std::vector<LawResult>& rs, const std::string& name) {
  for (const auto& r : rs)
    if (r.name == name) return r;
  throw std::runtime_error("no law " + name);
}

}  // namespace

TEST(Generators, StructuredPresentationAgrees) {
  for (auto q : {2u, 3u, 4u}) {
    auto r = RingSpec::zmod(q);
    for (std::int64_t a = 0; a < q; ++a)
      for (std::int64_t b = 0; b < q; ++b) {
        for (auto tag : {"I", "T", "P", "H", "E"}) EXPECT_EQ(generator(r, tag, {a, b}), generator_structured(r, tag, {a, b})) << tag;
        EXPECT_EQ(generator(r, "I", {a}), generator_structured(r, "I", {a}));
      }
  }
}

TEST(Generators, Shapes) {
  auto r = RingSpec::fp(3);
  EXPECT_EQ(generator(r, "H", {1, 2}).target().size(), 2u);
  EXPECT_EQ(generator(r, "H", {1, 2}).source().size(), 1u);
  EXPECT_EQ(generator(r, "P", {1, 2}).target().size(), 1u);
  EXPECT_EQ(generator(r, "P", {1, 2}).source().size(), 2u);
  EXPECT_EQ(generator(r, "T", {1, 2}).terms().begin()->first.to_string(), "{1<-2:2, 2<-1:1}");
}

TEST(Product, LeftToRight) {
  auto r = RingSpec::fp(3);
  auto H = generator(r, "H", {1, 1}), P = generator(r, "P", {1, 1});
  EXPECT_EQ(product({P, H, P}), compose(P, compose(H, P)));
  EXPECT_THROW(product({}), InputError);
}

TEST(Laws, AllBindingLawsHoldForQuadraticFunctors) {
  for (auto [name, p] : std::vector<std::pair<std::string, std::uint32_t>>{{"T2", 3}, {"S2", 3}, {"T2", 2}, {"S2", 2}, {"L2", 3}}) {
    auto f = RingSpec::fp(p);
    Phi phi(build_functor(name, f, f));
    auto results = law_table_check(phi, 60, 5);
    EXPECT_EQ(results.size(), quadratic_laws().size());
    for (const auto& r : results) {
      EXPECT_GT(r.cases, 0u);
      EXPECT_EQ(r.truncation_mismatches, 0u) << name << " " << r.name;
      if (r.binding) EXPECT_TRUE(r.holds()) << name << "/F" << p << " " << r.name;
    }
  }
}

TEST(Laws, PrintedVariantsAreReported) {
  auto f = RingSpec::fp(3);
  Phi t2(build_functor("T2", f, f)), s2(build_functor("S2", f, f));
  auto rt = law_table_check(t2, 60, 5), rs = law_table_check(s2, 60, 5);
  // QM2 with I in place of T: fails for T2, holds for S2 only after evaluation
  const auto& qt = find(rt, "QM2 as printed: H(x)P = I(x1,x2) + I(x2,x1)");
  const auto& qs = find(rs, "QM2 as printed: H(x)P = I(x1,x2) + I(x2,x1)");
  EXPECT_FALSE(qt.binding);
  EXPECT_GT(qt.evaluated_failures, 0u);
  EXPECT_EQ(qs.evaluated_failures, 0u);
  EXPECT_GT(qs.truncated_failures, 0u);
  // T(c,d)H(x) = H((d+c)x) as printed fails as canonical sums, but not under evaluation
  const auto& th = find(rt, "T(c,d)H(x) = H((d+c)x) as printed");
  EXPECT_GT(th.truncated_failures, 0u);
  EXPECT_EQ(th.evaluated_failures, 0u);
  EXPECT_EQ(th.cases, 81u);
  EXPECT_EQ(th.truncated_failures, 8u);
  EXPECT_GT(find(rt, "E(w)P(z,e) = P(w1z,w2e) + P(w2z,x1e) as printed").evaluated_failures, 0u);
}

TEST(Laws, ParameterEnumeration) {
  Rng rng(1);
  EXPECT_EQ(law_parameters(RingSpec::fp(3), 4, 10, rng).size(), 81u);
  EXPECT_EQ(law_parameters(RingSpec::fp(5), 4, 10, rng).size(), 10u);
  EXPECT_EQ(law_parameters(RingSpec::fp(5), 0, 10, rng).size(), 1u);
}

TEST(Laws, NonQuadraticRejected) {
  auto f = RingSpec::fp(2);
  Phi phi(build_functor("T3", f, f));
  EXPECT_THROW(law_table_check(phi, 10, 1), InputError);
}

TEST(QuadData, TensorSquare) {
  auto f = RingSpec::fp(3);
  Phi phi(build_functor("T2", f, f));
  auto d = extract(phi);
  EXPECT_EQ(d.M_e->dim(), 1u);
  EXPECT_EQ(d.M_ee->dim(), 2u);
  EXPECT_EQ(d.T * d.T, Matrix::identity(f, 2));
  EXPECT_FALSE(d.T == Matrix::identity(f, 2));
  EXPECT_EQ(d.P * d.T, d.P);
  const auto& h = d.H.at({1, 1});
  EXPECT_EQ(h * d.P, Matrix::identity(f, 2) + d.T);
  EXPECT_EQ(d.P * h * d.P, d.P + d.P);
  for (const auto& inv : quad_invariants(d, f)) EXPECT_TRUE(inv.holds) << inv.name << " " << inv.witness;
}

TEST(QuadData, SymmetricAndExteriorSquares) {
  auto f = RingSpec::fp(3);
  Phi s2(build_functor("S2", f, f)), l2(build_functor("L2", f, f));
  auto ds = extract(s2);
  EXPECT_EQ(ds.T, Matrix::identity(f, 1));
  EXPECT_EQ(ds.H.at({1, 1}) * ds.P, Matrix(f, 1, 1, {2}));
  auto dl = extract(l2);
  EXPECT_EQ(dl.M_e->dim(), 0u);
  EXPECT_EQ(dl.T, Matrix(f, 1, 1, {2}));  // swapping the factors of x ^ y is -1
  for (const auto* d : {&ds, &dl})
    for (const auto& inv : quad_invariants(*d, f)) EXPECT_TRUE(inv.holds) << inv.name;
}

TEST(QuadData, NeedsReducedFunctor) {
  Phi phi(build_functor("U", RingSpec::zmod(2), RingSpec::fp(2)));
  EXPECT_THROW(extract(phi), InputError);
}

TEST(HomBasis, OneToTwoOverZ2) {
  auto hb = laby2_hom_basis(RingSpec::zmod(2), 1, 2);
  EXPECT_EQ(hb.enumerated, 4u);
  ASSERT_EQ(hb.nonzero.size(), 1u);
  EXPECT_EQ(MazeSum(hb.nonzero[0]), generator(RingSpec::zmod(2), "H", {1, 1}));
}

TEST(HomBasis, Counts) {
  // (q-1)^2 nonzero mazes per two-parameter generator, q-1 for I(e)
  auto r = RingSpec::fp(3);
  EXPECT_EQ(laby2_hom_basis(r, 2, 2).nonzero.size(), 8u);
  EXPECT_EQ(laby2_hom_basis(r, 2, 1).nonzero.size(), 4u);
  // E(w) and E(w') coincide when w' is w swapped
  EXPECT_EQ(laby2_hom_basis(r, 1, 1).nonzero.size(), 2u + 3u);
  EXPECT_THROW(laby2_hom_basis(r, 0, 1), InputError);
}
