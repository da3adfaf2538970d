// laby: command-line front end for mazes, cross-effects and the check suites.
//
// Exit codes: 0 all checks pass, 1 a check failed (witness in the report),
// 2 usage, malformed input or a size guard.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "laby/laby.hpp"

namespace {

using laby::json;

struct Options {
  std::string ring, field, functor = "U";
  std::uint64_t seed = 1;
  std::size_t samples = 100, max_size = 3, max_passages = 8, max_dim = 512;
  std::string input = "-", output = "-";
  std::vector<std::string> files;
};

std::string read_all(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw laby::InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json(const std::string& path) {
  try {
    return json::parse(read_all(path));
  } catch (const json::parse_error& e) {
    throw laby::InputError((path == "-" ? std::string("stdin") : path) + ": " + e.what());
  }
}

void write_json(const std::string& path, const json& j) {
  const auto text = j.dump(2) + "\n";
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw laby::InputError("cannot write " + path);
  out << text;
}

std::uint32_t smallest_prime_factor(std::uint32_t m) {
  for (std::uint32_t p = 2; p * p <= m; ++p)
    if (m % p == 0) return p;
  return m;
}

/// --field defaults to the prime field under the ring, --ring to the field.
laby::RunConfig resolve(const Options& o) {
  laby::RunConfig c;
  if (!o.field.empty()) c.field = laby::RingSpec::parse(o.field);
  if (!o.ring.empty()) {
    c.ring = laby::RingSpec::parse(o.ring);
    if (o.field.empty()) c.field = laby::RingSpec::fp(smallest_prime_factor(c.ring.modulus()));
  } else {
    c.ring = c.field;
  }
  c.functor = o.functor;
  c.seed = o.seed;
  c.samples = o.samples;
  c.max_size = o.max_size;
  c.limits.max_passages = o.max_passages;
  c.limits.max_dim = o.max_dim;
  laby::FunctorSpec::parse(c.functor);
  c.validate();
  return c;
}

int finish(const laby::Report& r, const std::string& out) {
  write_json(out, r.to_json());
  return r.pass() ? 0 : 1;
}

int cmd_compose(const Options& o) {
  if (o.files.size() != 2) throw laby::InputError("compose takes two maze files (use - for stdin)");
  if (o.files[0] == "-" && o.files[1] == "-") throw laby::InputError("only one operand may come from stdin");
  laby::Limits limits;
  limits.max_passages = o.max_passages;
  auto p = laby::mazesum_from_json(read_json(o.files[0]));
  auto q = laby::mazesum_from_json(read_json(o.files[1]));
  write_json(o.output, laby::to_json(laby::compose(p, q, limits)));
  return 0;
}

/// {"functor":"U","ring":"zmod:2","field":"fp:2","maze":{...}}; keys override flags.
/// "functor_table" may replace "functor" with an explicit table.
int cmd_eval(const Options& o) {
  auto req = read_json(o.input);
  if (!req.is_object()) throw laby::InputError("evaluation request must be a JSON object");
  Options merged = o;
  if (req.contains("functor")) merged.functor = req.at("functor").get<std::string>();
  if (req.contains("ring")) merged.ring = req.at("ring").get<std::string>();
  if (req.contains("field")) merged.field = req.at("field").get<std::string>();
  auto cfg = resolve(merged);
  auto f = req.contains("functor_table") ? laby::table_functor_from_json(req.at("functor_table"))
                                         : laby::functor_from_config(cfg);
  if (!req.contains("maze")) throw laby::InputError("missing key 'maze'");
  auto m = laby::mazesum_from_json(req.at("maze"));
  laby::Phi phi(f, cfg.limits);
  auto e = phi.eval(m);
  write_json(o.output, {{"matrix", laby::to_json(e.matrix)}, {"source_dim", e.matrix.cols()}, {"target_dim", e.matrix.rows()}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polynomial functors and the labyrinth category"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* s) {
    s->add_option("--ring", o.ring, "source ring, zmod:m or fp:p");
    s->add_option("--field", o.field, "target field fp:p");
    s->add_option("--functor", o.functor, "U, RedU, T1..T4, S2, L2, Zero, Sum(F,G), Red(F)");
    s->add_option("--seed", o.seed, "sampling seed");
    s->add_option("--samples", o.samples, "samples per check")->check(CLI::PositiveNumber);
    s->add_option("--max-size", o.max_size, "largest set size / arity");
    s->add_option("--max-passages", o.max_passages, "passages per maze")->check(CLI::PositiveNumber);
    s->add_option("--max-dim", o.max_dim, "largest ambient dimension")->check(CLI::PositiveNumber);
    s->add_option("-i,--input", o.input, "input file, - for stdin");
    s->add_option("-o,--output", o.output, "output file, - for stdout");
  };

  auto* compose = app.add_subcommand("compose", "compose two maze sums P o Q");
  compose->add_option("files", o.files, "P and Q as JSON files")->expected(2);
  common(compose);
  auto* eval = app.add_subcommand("eval", "evaluate Phi(F) on a maze sum");
  common(eval);

  std::vector<std::pair<CLI::App*, laby::Report (*)(const laby::RunConfig&)>> suites;
  for (auto [name, fn, help] : std::vector<std::tuple<const char*, laby::Report (*)(const laby::RunConfig&), const char*>>{
           {"ce", laby::run_ce, "cross-effect dimensions, kernel = image, idempotents"},
           {"degree", laby::run_degree, "polynomial degree and annihilation profile"},
           {"devform", laby::run_devform, "deviation formula on random arrows"},
           {"axioms", laby::run_axioms, "labyrinth axioms and functoriality of Phi(F)"},
           {"roundtrip", laby::run_roundtrip, "reconstruction from Phi(F)"},
           {"naturality", laby::run_naturality, "Phi(sym) for sym: T2 -> S2"},
           {"quad", laby::run_quad, "quadratic multiplication laws and quadratic data"}}) {
    auto* s = app.add_subcommand(name, help);
    common(s);
    suites.emplace_back(s, fn);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*compose) return cmd_compose(o);
    if (*eval) return cmd_eval(o);
    for (auto& [s, fn] : suites)
      if (*s) return finish(fn(resolve(o)), o.output);
  } catch (const laby::InvariantViolation& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return 1;
  } catch (const laby::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
