#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "laby/laby.hpp"

using laby::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  Run r;
  const std::string cmd = std::string(LABY_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_file(const std::string& name, const json& j) {
  auto path = std::filesystem::temp_directory_path() / ("laby_cli_test_" + name + ".json");
  std::ofstream(path) << j.dump();
  return path.string();
}

}  // namespace

TEST(Cli, CrossEffectsOfTensorSquare) {
  auto r = run("ce --functor T2 --field fp:2 --max-size 3");
  ASSERT_EQ(r.code, 0) << r.out;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["checks"][0]["params"]["dims"], json({0, 1, 2, 0}));
  EXPECT_EQ(j["config"]["ring"], "fp:2");
}

TEST(Cli, DegreeOfReducedLinearization) {
  auto r = run("degree --functor RedU --ring zmod:2 --max-size 4");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(json::parse(r.out)["checks"][0]["params"]["degree"], "exceeds 4");
}

TEST(Cli, AxiomsAreDeterministic) {
  auto a = run("axioms --seed 42 --samples 100 --ring zmod:4 --functor U");
  auto b = run("axioms --seed 42 --samples 100 --ring zmod:4 --functor U");
  ASSERT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(json::parse(a.out)["config"]["field"], "fp:2");
}

TEST(Cli, OtherSuites) {
  EXPECT_EQ(run("devform --functor S2 --field fp:3 --samples 20").code, 0);
  EXPECT_EQ(run("roundtrip --functor U --ring zmod:2 --samples 3").code, 0);
  EXPECT_EQ(run("naturality --field fp:3 --samples 10").code, 0);
  auto q = run("quad --functor S2 --field fp:3 --samples 20");
  ASSERT_EQ(q.code, 0) << q.out;
  EXPECT_EQ(json::parse(q.out)["status"], "pass");
}

TEST(Cli, ComposeFiles) {
  auto r = laby::RingSpec::fp(3);
  auto T = laby::generator(r, "T", {1, 1});
  auto path = temp_file("T", laby::to_json(T));
  auto out = run("compose " + path + " " + path);
  ASSERT_EQ(out.code, 0);
  EXPECT_EQ(laby::mazesum_from_json(json::parse(out.out)), laby::generator(r, "I", {1, 1}));
  auto H = temp_file("H", laby::to_json(laby::generator(r, "H", {1, 1})));
  EXPECT_EQ(run("compose " + H + " " + H).code, 2);
}

TEST(Cli, Eval) {
  auto r = laby::RingSpec::zmod(2);
  json req = {{"functor", "U"}, {"ring", "zmod:2"}, {"maze", laby::to_json(laby::generator(r, "T", {1, 1}))}};
  auto out = run("eval -i " + temp_file("eval", req));
  ASSERT_EQ(out.code, 0);
  auto j = json::parse(out.out);
  EXPECT_EQ(j["source_dim"], 1);
  EXPECT_EQ(j["matrix"]["entries"], json({1}));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("ce --functor T9").code, 2);
  EXPECT_EQ(run("ce --field fp:4").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("ce --functor U --ring zmod:2 --max-size 12").code, 2);  // size guard
  EXPECT_EQ(run("eval -i /nonexistent/file.json").code, 2);
  EXPECT_EQ(run("quad --functor T3 --field fp:2").code, 2);  // not quadratic
  EXPECT_EQ(run("quad --functor U --ring zmod:2").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}
