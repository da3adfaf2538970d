#include <gtest/gtest.h>

#include "laby/laby.hpp"

using namespace laby;

namespace {

RunConfig config(const std::string& functor, RingSpec ring, RingSpec field, std::size_t samples = 20) {
  RunConfig c;
  c.functor = functor;
  c.ring = ring;
  c.field = field;
  c.samples = samples;
  c.seed = 7;
  return c;
}

void expect_pass(const Report& r) {
  auto j = r.to_json();
  EXPECT_TRUE(r.pass()) << j.dump(2);
  EXPECT_EQ(j["status"], r.pass() ? "pass" : "fail");
  EXPECT_EQ(j["version"], kVersion);
}

}  // namespace

TEST(Suites, DevForm) { expect_pass(run_devform(config("S2", RingSpec::fp(3), RingSpec::fp(3)))); }

TEST(Suites, CrossEffects) {
  auto r = run_ce(config("T2", RingSpec::fp(2), RingSpec::fp(2)));
  expect_pass(r);
  EXPECT_EQ(r.checks.front().params["dims"], json({0, 1, 2, 0}));
}

TEST(Suites, Degree) {
  auto c = config("RedU", RingSpec::zmod(2), RingSpec::fp(2));
  c.max_size = 4;
  auto r = run_degree(c);
  expect_pass(r);
  EXPECT_EQ(r.checks.front().params["degree"], "exceeds 4");
  auto l2 = run_degree(config("L2", RingSpec::fp(3), RingSpec::fp(3)));
  EXPECT_EQ(l2.checks.front().params["degree"], "2");
}

TEST(Suites, Axioms) {
  auto r = run_axioms(config("U", RingSpec::zmod(4), RingSpec::fp(2)));
  expect_pass(r);
  std::set<std::string> names;
  for (const auto& c : r.checks) names.insert(c.check);
  for (auto n : {"identity", "associativity", "functoriality", "axiom_I", "axiom_II", "axiom_III", "axiom_VI", "axiom_VII", "gen_split"})
    EXPECT_TRUE(names.count(n)) << n;
}

TEST(Suites, RoundTrip) { expect_pass(run_roundtrip(config("S2", RingSpec::fp(3), RingSpec::fp(3), 5))); }

TEST(Suites, Naturality) { expect_pass(run_naturality(config("T2", RingSpec::fp(3), RingSpec::fp(3)))); }

TEST(Suites, Quad) {
  auto r = run_quad(config("T2", RingSpec::fp(3), RingSpec::fp(3)));
  expect_pass(r);
  std::size_t info = 0;
  for (const auto& c : r.checks) info += c.status == "info";
  EXPECT_EQ(info, 3u);
}

TEST(Suites, Deterministic) {
  auto c = config("U", RingSpec::zmod(2), RingSpec::fp(2));
  EXPECT_EQ(run_axioms(c).to_json().dump(), run_axioms(c).to_json().dump());
  auto d = c;
  d.seed = 8;
  EXPECT_EQ(run_axioms(d).to_json()["config"]["seed"], 8);
}

TEST(Suites, ConfigValidation) {
  auto c = config("U", RingSpec::zmod(2), RingSpec::zmod(4));
  EXPECT_THROW(c.validate(), RingError);
  c.field = RingSpec::fp(2);
  c.samples = 0;
  EXPECT_THROW(c.validate(), InputError);
  EXPECT_EQ(config("U", RingSpec::zmod(2), RingSpec::fp(2)).to_json()["prng"], Rng::algorithm);
}

TEST(Suites, FailingRowCarriesWitness) {
  Tally t("demo");
  t.record(true, [] { return json("unused"); });
  t.record(false, [] { return json("first"); });
  t.record(false, [] { return json("second"); });
  auto row = t.finish();
  EXPECT_EQ(row.status, "fail");
  EXPECT_EQ(row.witness, "first");
  EXPECT_EQ(row.params["failures"], 2);
  Report r{json::object(), {row}};
  EXPECT_FALSE(r.pass());
  EXPECT_EQ(r.first_failure()->check, "demo");
}

TEST(Sampling, SurjectionsAndMazes) {
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = rng.between(1, 5), k = rng.between(1, n);
    auto f = random_surjection(rng, n, k);
    std::set<std::size_t> img(f.begin(), f.end());
    EXPECT_EQ(img.size(), k);
    auto m = random_maze(rng, RingSpec::zmod(4), IndexSet::range(k), IndexSet::range(n), 6);
    EXPECT_GE(m.size(), n);
    EXPECT_LE(m.size(), 6u);
  }
}
