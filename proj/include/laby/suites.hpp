#pragma once

#include <functional>
#include <string>
#include <vector>

#include "laby/io.hpp"
#include "laby/quadratic.hpp"

namespace laby {

inline constexpr const char* kVersion = "laby-toolkit 1.0";

struct RunConfig {
  RingSpec ring = RingSpec::fp(2);
  RingSpec field = RingSpec::fp(2);
  std::string functor = "U";
  std::uint64_t seed = 1;
  std::size_t samples = 100;
  std::size_t max_size = 3;
  Limits limits;

  void validate() const {
    if (samples == 0 || limits.max_passages == 0 || limits.max_dim == 0 || limits.max_relation == 0)
      throw InputError("bounds must be positive");
    field.require_field("--field");
  }

  json to_json() const {
    return {{"ring", ring.to_string()},       {"field", field.to_string()},
            {"functor", functor},             {"seed", seed},
            {"samples", samples},             {"max_set_size", max_size},
            {"max_passages", limits.max_passages}, {"max_dim", limits.max_dim},
            {"prng", Rng::algorithm}};
  }
};

/// status: "pass", "fail", or "info" for rows that report a verdict without
/// taking part in the overall status.
struct CheckRow {
  std::string check;
  json params = json::object();
  std::string status = "pass";
  json witness = nullptr;
};

struct Report {
  json config;
  std::vector<CheckRow> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (c.status == "fail") return false;
    return true;
  }
  const CheckRow* first_failure() const {
    for (const auto& c : checks)
      if (c.status == "fail") return &c;
    return nullptr;
  }
  json to_json() const {
    json rows = json::array();
    for (const auto& c : checks)
      rows.push_back({{"check", c.check}, {"params", c.params}, {"status", c.status}, {"witness", c.witness}});
    return {{"version", kVersion}, {"config", config}, {"checks", rows}, {"status", pass() ? "pass" : "fail"}};
  }
};

/// Counts samples of one property and keeps the first failing witness.
class Tally {
 public:
  Tally(std::string check, json params = json::object()) : row_{std::move(check), std::move(params)} {}

  void record(bool ok, const std::function<json()>& witness) {
    ++samples_;
    if (ok) return;
    ++failures_;
    if (row_.witness.is_null()) row_.witness = witness();
  }
  CheckRow finish() {
    row_.params["samples"] = samples_;
    if (failures_) row_.params["failures"] = failures_;
    row_.status = failures_ ? "fail" : "pass";
    return row_;
  }

 private:
  CheckRow row_;
  std::size_t samples_ = 0, failures_ = 0;
};

inline Functor functor_from_config(const RunConfig& cfg) { return build_functor(cfg.functor, cfg.ring, cfg.field); }

// ---------------------------------------------------------------- sampling

/// Fisher-Yates with the portable draw.
inline std::vector<std::size_t> random_permutation(Rng& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[rng.below(i)]);
  return p;
}

/// A random surjection from a set of size `from` onto one of size `onto`.
inline std::vector<std::size_t> random_surjection(Rng& rng, std::size_t from, std::size_t onto) {
  if (onto > from || (onto == 0 && from > 0)) throw DimensionError("no surjection");
  auto perm = random_permutation(rng, from);
  std::vector<std::size_t> f(from);
  for (std::size_t i = 0; i < from; ++i) f[perm[i]] = i < onto ? i : rng.below(onto);
  return f;
}

/// Random nonzero maze Z -> X with between max(|X|,|Z|) and `max_passages` passages.
inline Maze random_maze(Rng& rng, RingSpec ring, const IndexSet& X, const IndexSet& Z, std::size_t max_passages) {
  const std::size_t lo = std::max(X.size(), Z.size());
  const std::size_t n = lo + rng.below(std::max(max_passages, lo) - lo + 1);
  auto px = random_permutation(rng, n), pz = random_permutation(rng, n);
  std::vector<Passage> ps;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t to = px[i] < X.size() ? px[i] : rng.below(X.size());
    std::size_t from = pz[i] < Z.size() ? pz[i] : rng.below(Z.size());
    ps.push_back({to, from, rng.nonzero_residue(ring)});
  }
  return *Maze::canonical(ring, X, Z, ps);
}

/// A random morphism: one maze, or with probability 1/3 a two-term sum with small coefficients.
inline MazeSum random_morphism(Rng& rng, RingSpec ring, const IndexSet& X, const IndexSet& Z, std::size_t max_passages) {
  MazeSum s(random_maze(rng, ring, X, Z, max_passages));
  if (rng.below(3) == 0) {
    std::int64_t c = static_cast<std::int64_t>(rng.between(1, 2)) * (rng.coin() ? 1 : -1);
    s += c * MazeSum(random_maze(rng, ring, X, Z, max_passages));
  }
  return s;
}

inline IndexSet random_set(Rng& rng, std::size_t max_size, const std::string& prefix) {
  return IndexSet::range(rng.between(1, std::max<std::size_t>(max_size, 1)), prefix);
}

/// Draws until `body` completes without a guard violation; guards depend on
/// the sample only, so the sequence stays deterministic.
inline void with_resampling(const std::function<void()>& body, std::size_t attempts = 200) {
  for (std::size_t i = 0; i < attempts; ++i) {
    try {
      body();
      return;
    } catch (const GuardError&) {
    }
  }
  throw GuardError("could not draw a sample within the configured bounds");
}

inline constexpr std::size_t kSamplePassages = 3;

/// contraction X <-f- Y with unit labels
inline Maze contraction(RingSpec ring, const IndexSet& X, const IndexSet& Y, const std::vector<std::size_t>& f) {
  std::vector<Passage> ps;
  for (std::size_t y = 0; y < Y.size(); ++y) ps.push_back({f[y], y, 1});
  return *Maze::canonical(ring, X, Y, ps);
}

/// extension from Y to X along g : X -> Y with structure map alpha (|X| x |Y|)
inline MazeSum extension(RingSpec ring, const IndexSet& X, const IndexSet& Y, const std::vector<std::size_t>& g, const Matrix& alpha) {
  std::vector<Passage> ps;
  for (std::size_t x = 0; x < X.size(); ++x) ps.push_back({x, g[x], alpha(x, g[x])});
  return normalize(ring, X, Y, ps);
}

// ---------------------------------------------------------------- suites

inline Report run_devform(const RunConfig& cfg) {
  cfg.validate();
  Report rep{cfg.to_json(), {}};
  auto f = functor_from_config(cfg);
  const auto& A = f.source_ring();
  Rng rng(cfg.seed);
  for (auto [m, n] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {1, 2}, {2, 1}, {2, 2}}) {
    Tally t("deviation_formula", {{"m", m}, {"n", n}});
    std::size_t outer = 0;
    for (std::size_t s = 0; s < cfg.samples; ++s) {
      with_resampling([&] {
        const std::size_t M = rng.between(1, 2);
        std::vector<Matrix> alphas, betas;
        std::size_t mid = 0, src = 0;
        for (std::size_t i = 0; i < m; ++i) {
          alphas.push_back(rng.matrix(A, M, rng.between(1, 2)));
          mid += alphas.back().cols();
        }
        for (std::size_t j = 0; j < n; ++j) {
          betas.push_back(rng.matrix(A, mid, rng.between(1, 2)));
          src += betas.back().cols();
        }
        cfg.limits.check_dim(f.obj(mid), "F(N)");
        cfg.limits.check_dim(f.obj(src), "F(P)");
        auto r = deviation_formula(f, alphas, betas);
        outer = r.outer_terms;
        t.record(r.holds(), [&] {
          json a = json::array(), b = json::array();
          for (const auto& x : alphas) a.push_back(to_json(x));
          for (const auto& x : betas) b.push_back(to_json(x));
          return json{{"alphas", a}, {"betas", b}, {"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)}};
        });
      });
    }
    auto row = t.finish();
    row.params["covering_subsets"] = outer;
    rep.checks.push_back(std::move(row));
  }
  return rep;
}

inline std::vector<std::vector<std::size_t>> compositions_up_to(std::size_t total) {
  std::vector<std::vector<std::size_t>> out;
  std::function<void(std::vector<std::size_t>&, std::size_t)> rec = [&](std::vector<std::size_t>& cur, std::size_t left) {
    if (!cur.empty()) out.push_back(cur);
    for (std::size_t p = 1; p <= left; ++p) {
      cur.push_back(p);
      rec(cur, left - p);
      cur.pop_back();
    }
  };
  std::vector<std::size_t> cur;
  rec(cur, total);
  return out;
}

inline Report run_ce(const RunConfig& cfg) {
  cfg.validate();
  Report rep{cfg.to_json(), {}};
  auto f = functor_from_config(cfg);
  cfg.limits.check_dim(f.obj(cfg.max_size), f.name() + "(Omega^" + std::to_string(cfg.max_size) + ")");
  const auto& field = f.target_field();

  json dims = json::array();
  bool dims_ok = true;
  for (std::size_t k = 0; k <= cfg.max_size; ++k) {
    auto a = ce_dim(f, k, cfg.limits), b = ce_dim_by_kernel(f, ones(k), cfg.limits);
    dims.push_back(a);
    dims_ok = dims_ok && a == b;
  }
  rep.checks.push_back({"ce_dims", {{"dims", dims}}, dims_ok ? "pass" : "fail", nullptr});

  for (const auto& parts : compositions_up_to(cfg.max_size)) {
    auto image = ce_basis(f, parts, cfg.limits).space;
    auto kernel = Subspace::kernel_of(cross_effect_kernel_map(f, parts));
    const bool in = kernel.contains(image.basis()), out = image.contains(kernel.basis());
    rep.checks.push_back({"kernel_equals_image", {{"parts", parts}, {"dim", image.dim()}}, in && out ? "pass" : "fail",
                          in && out ? json(nullptr) : json{{"image_in_kernel", in}, {"kernel_in_image", out}}});
  }

  for (std::size_t k = 1; k <= cfg.max_size; ++k) {
    const auto p = ones(k);
    const std::size_t n = f.obj(k);
    std::vector<Matrix> e;
    for (Mask I = 0; I <= full_mask(k); ++I) e.push_back(subset_idempotent(f, p, I));
    bool ok = true;
    json witness = nullptr;
    Matrix total(field, n, n);
    for (Mask I = 0; I <= full_mask(k) && ok; ++I) {
      total += e[I];
      for (Mask J = 0; J <= full_mask(k) && ok; ++J) {
        auto prod = e[I] * e[J];
        ok = I == J ? prod == e[I] : prod.is_zero();
        if (!ok) witness = {{"I", I}, {"J", J}};
      }
    }
    if (ok && !(total == Matrix::identity(field, n))) {
      ok = false;
      witness = {{"completeness", to_json(total)}};
    }
    rep.checks.push_back({"idempotents", {{"k", k}}, ok ? "pass" : "fail", witness});

    auto d = decomposition(f, k, cfg.limits);
    rep.checks.push_back({"decomposition", {{"k", k}, {"block_dims", d.dims}}, "pass", nullptr});
  }
  return rep;
}

inline Report run_degree(const RunConfig& cfg) {
  cfg.validate();
  Report rep{cfg.to_json(), {}};
  auto f = functor_from_config(cfg);
  auto d = degree(f, cfg.max_size, cfg.limits);
  auto profile = annihilation_profile(f, cfg.max_size + 1, cfg.limits);
  rep.checks.push_back({"degree", {{"degree", d.to_string()}, {"ce_dims", d.ce_dims}}, "pass", nullptr});
  bool ok = true;
  json witness = nullptr;
  for (std::size_t k = 0; k < profile.size(); ++k)
    if (profile[k] != d.ce_dims[k]) {
      ok = false;
      witness = {{"k", k}, {"profile", profile[k]}, {"ce_dim", d.ce_dims[k]}};
    }
  for (std::size_t n = 0; n <= cfg.max_size && ok; ++n) {
    bool vanishes = true;
    for (std::size_t k = n + 1; k < profile.size(); ++k) vanishes = vanishes && profile[k] == 0;
    const bool at_most_n = d.degree && *d.degree <= n;
    if (vanishes != at_most_n) {
      ok = false;
      witness = {{"n", n}, {"profile_vanishes_above_n", vanishes}, {"degree_at_most_n", at_most_n}};
    }
  }
  rep.checks.push_back({"annihilation_profile", {{"profile", profile}}, ok ? "pass" : "fail", witness});
  return rep;
}

inline json witness_pair(const MazeSum& p, const MazeSum& q, const Matrix& lhs, const Matrix& rhs) {
  return {{"P", to_json(p)}, {"Q", to_json(q)}, {"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}};
}

inline Report run_axioms(const RunConfig& cfg) {
  cfg.validate();
  Report rep{cfg.to_json(), {}};
  Phi phi(functor_from_config(cfg), cfg.limits);
  const auto A = phi.functor().source_ring();
  const auto field = phi.field();
  const std::size_t mp = std::min(kSamplePassages, cfg.limits.max_passages);
  const std::size_t ms = cfg.max_size;
  Rng rng(cfg.seed);

  {
    Tally t("identity");
    for (std::size_t k = 0; k <= ms; ++k) {
      auto id = MazeSum::identity(A, IndexSet::range(k));
      auto e = phi.eval(id).matrix;
      t.record(e == Matrix::identity(field, phi.dim(k)), [&] { return json{{"k", k}, {"eval", to_json(e)}}; });
      auto z = phi.eval(MazeSum::zero(A, IndexSet::range(k), IndexSet::range(k))).matrix;
      t.record(z.is_zero(), [&] { return json{{"k", k}, {"zero_eval", to_json(z)}}; });
    }
    rep.checks.push_back(t.finish());
  }

  {
    Tally t("identity_neutral");
    for (std::size_t s = 0; s < cfg.samples; ++s)
      with_resampling([&] {
        auto X = random_set(rng, ms, "x"), Z = random_set(rng, ms, "z");
        auto m = random_morphism(rng, A, X, Z, mp);
        bool ok = compose(MazeSum::identity(A, X), m, cfg.limits) == m && compose(m, MazeSum::identity(A, Z), cfg.limits) == m;
        t.record(ok, [&] { return json{{"maze", to_json(m)}}; });
      });
    rep.checks.push_back(t.finish());
  }

  {
    // triple composites are drawn with a smaller relation bound to keep the enumeration short
    Limits tight = cfg.limits;
    tight.max_relation = std::min<std::size_t>(tight.max_relation, 12);
    Tally t("associativity", {{"max_relation", tight.max_relation}});
    for (std::size_t s = 0; s < cfg.samples; ++s)
      with_resampling([&] {
        auto W = random_set(rng, ms, "w"), X = random_set(rng, ms, "x"), Y = random_set(rng, ms, "y"), Z = random_set(rng, ms, "z");
        auto P = MazeSum(random_maze(rng, A, W, X, mp)), Q = MazeSum(random_maze(rng, A, X, Y, mp)), R = MazeSum(random_maze(rng, A, Y, Z, mp));
        auto left = compose(compose(P, Q, tight), R, tight);
        auto right = compose(P, compose(Q, R, tight), tight);
        t.record(left == right, [&] { return json{{"P", to_json(P)}, {"Q", to_json(Q)}, {"R", to_json(R)}}; });
      });
    rep.checks.push_back(t.finish());
  }

  {
    Tally t("functoriality");
    for (std::size_t s = 0; s < cfg.samples; ++s)
      with_resampling([&] {
        auto X = random_set(rng, ms, "x"), Z = random_set(rng, ms, "z"), V = random_set(rng, ms, "v");
        auto P = random_morphism(rng, A, X, Z, mp), Q = random_morphism(rng, A, Z, V, mp);
        auto r = functoriality_check(phi, P, Q);
        t.record(r.holds(), [&] { return witness_pair(P, Q, r.lhs, r.rhs); });
      });
    rep.checks.push_back(t.finish());
  }

  {
    Tally t("well_defined");
    Tally lit("literal_formula");
    Tally xi("structured_roundtrip");
    for (std::size_t s = 0; s < cfg.samples; ++s)
      with_resampling([&] {
        auto X = random_set(rng, ms, "x"), Z = random_set(rng, ms, "z");
        auto m = random_maze(rng, A, X, Z, mp);
        t.record(phi.well_defined(m), [&] { return json{{"maze", to_json(m)}}; });
        auto st = to_structured(m);
        auto a = phi.eval(m).matrix, b = phi.eval_structured(st).matrix;
        lit.record(a == b, [&] { return json{{"maze", to_json(m)}, {"fast", to_json(a)}, {"literal", to_json(b)}}; });
        xi.record(from_structured(st) == MazeSum(m), [&] { return json{{"maze", to_json(m)}}; });
      });
    rep.checks.push_back(t.finish());
    rep.checks.push_back(lit.finish());
    rep.checks.push_back(xi.finish());
  }

  {
    Tally t("axiom_I");
    for (std::size_t s = 0; s < cfg.samples; ++s)
      with_resampling([&] {
        auto Z = random_set(rng, ms, "z");
        auto Y = IndexSet::range(rng.between(1, Z.size()), "y");
        auto X = IndexSet::range(rng.between(1, Y.size()), "x");
        auto f = random_surjection(rng, Y.size(), X.size()), g = random_surjection(rng, Z.size(), Y.size());
        std::vector<std::size_t> fg(Z.size());
        for (std::size_t z = 0; z < Z.size(); ++z) fg[z] = f[g[z]];
        MazeSum cf(contraction(A, X, Y, f)), cg(contraction(A, Y, Z, g)), cfg_(contraction(A, X, Z, fg));
        auto lhs = phi.eval(cf).matrix * phi.eval(cg).matrix, rhs = phi.eval(cfg_).matrix;
        t.record(compose(cf, cg, cfg.limits) == cfg_ && lhs == rhs, [&] { return witness_pair(cf, cg, lhs, rhs); });
      });
    rep.checks.push_back(t.finish());
  }

  {
    Tally t("axiom_II");
    for (std::size_t s = 0; s < cfg.samples; ++s)
      with_resampling([&] {
        auto X = random_set(rng, ms, "x");
        auto Y = IndexSet::range(rng.between(1, X.size()), "y");
        auto Z = IndexSet::range(rng.between(1, Y.size()), "z");
        auto f = random_surjection(rng, X.size(), Y.size()), g = random_surjection(rng, Y.size(), Z.size());
        Matrix alpha(A, X.size(), Y.size()), beta(A, Y.size(), Z.size());
        for (std::size_t x = 0; x < X.size(); ++x) alpha.set(x, f[x], rng.nonzero_residue(A));
        for (std::size_t y = 0; y < Y.size(); ++y) beta.set(y, g[y], rng.nonzero_residue(A));
        std::vector<std::size_t> gf(X.size());
        for (std::size_t x = 0; x < X.size(); ++x) gf[x] = g[f[x]];
        auto e1 = extension(A, X, Y, f, alpha), e2 = extension(A, Y, Z, g, beta), e12 = extension(A, X, Z, gf, alpha * beta);
        auto lhs = phi.eval(e1).matrix * phi.eval(e2).matrix, rhs = phi.eval(e12).matrix;
        t.record(compose(e1, e2, cfg.limits) == e12 && lhs == rhs, [&] { return witness_pair(e1, e2, lhs, rhs); });
      });
    rep.checks.push_back(t.finish());
  }

  {
    // extension from Y to X along f : X -> Y, then contraction Z -> Y along g;
    // the right side sums over coverings of the set-theoretic pullback.
    Tally t("axiom_III");
    for (std::size_t s = 0; s < cfg.samples; ++s)
      with_resampling([&] {
        auto Y = random_set(rng, std::min<std::size_t>(ms, 2), "y");
        auto X = IndexSet::range(rng.between(Y.size(), ms), "x");
        auto Z = IndexSet::range(rng.between(Y.size(), ms), "z");
        auto f = random_surjection(rng, X.size(), Y.size()), g = random_surjection(rng, Z.size(), Y.size());
        Matrix alpha(A, X.size(), Y.size());
        for (std::size_t x = 0; x < X.size(); ++x) alpha.set(x, f[x], rng.nonzero_residue(A));
        auto ext = extension(A, X, Y, f, alpha);
        MazeSum con(contraction(A, Y, Z, g));
        std::vector<Pair> pullback;
        for (std::size_t x = 0; x < X.size(); ++x)
          for (std::size_t z = 0; z < Z.size(); ++z)
            if (f[x] == g[z]) pullback.emplace_back(x, z);
        MazeSum expansion(A, X, Z);
        for (const auto& K : covering_subsets(X.size(), Z.size(), pullback, cfg.limits.max_relation)) {
          std::vector<Passage> ps;
          for (auto [x, z] : K.pairs) ps.push_back({x, z, alpha(x, f[x])});
          expansion += normalize(A, X, Z, ps);
        }
        auto lhs = phi.eval(ext).matrix * phi.eval(con).matrix, rhs = phi.eval(expansion).matrix;
        t.record(compose(ext, con, cfg.limits) == expansion && lhs == rhs, [&] {
          auto w = witness_pair(ext, con, lhs, rhs);
          w["expansion"] = to_json(expansion);
          return w;
        });
      });
    rep.checks.push_back(t.finish());
  }

  {
    Tally t("axiom_VI");
    for (std::size_t s = 0; s < cfg.samples; ++s)
      with_resampling([&] {
        auto X = random_set(rng, ms, "x"), Z = random_set(rng, ms, "z");
        auto st = to_structured(random_maze(rng, A, X, Z, mp));
        const std::size_t y = rng.below(st.Y.size());
        st.alpha.set(y, st.g[y], 0);
        auto e = phi.eval_structured(st).matrix;
        t.record(e.is_zero() && from_structured(st).is_zero(), [&] { return json{{"y", y}, {"eval", to_json(e)}}; });
      });
    rep.checks.push_back(t.finish());
  }

  {
    Tally t("axiom_VII");
    Tally g("gen_split");
    for (std::size_t s = 0; s < cfg.samples; ++s)
      with_resampling([&] {
        auto X = random_set(rng, ms, "x"), Z = random_set(rng, ms, "z");
        auto m = random_maze(rng, A, X, Z, mp);
        const auto before = phi.eval(m).matrix;
        const std::size_t p = rng.below(m.size());
        const Residue a = rng.residue(A), b = A.sub(m.passages()[p].label, a);
        auto split = split_passage(m, p, a, b);
        auto after = phi.eval(split).matrix;
        t.record(before == after, [&] {
          return json{{"maze", to_json(m)}, {"passage", p}, {"a", a}, {"b", b}, {"split", to_json(split)}};
        });

        std::map<std::size_t, std::vector<Residue>> parts;
        for (std::size_t q = 0; q < m.size(); ++q) {
          if (!rng.coin()) continue;
          std::vector<Residue> ls(rng.between(1, 3));
          Residue sum = 0;
          for (std::size_t i = 0; i + 1 < ls.size(); ++i) sum = A.add(sum, ls[i] = rng.residue(A));
          ls.back() = A.sub(m.passages()[q].label, sum);
          parts.emplace(q, std::move(ls));
        }
        auto gs = gen_split(m, parts);
        auto ge = phi.eval(gs).matrix;
        g.record(before == ge, [&] {
          json pj = json::object();
          for (const auto& [q, ls] : parts) pj[std::to_string(q)] = ls;
          return json{{"maze", to_json(m)}, {"parts", pj}, {"split", to_json(gs)}};
        });
      });
    rep.checks.push_back(t.finish());
    rep.checks.push_back(g.finish());
  }

  {
    Tally t("truncation_compatible", {{"n", 2}});
    for (std::size_t s = 0; s < cfg.samples; ++s)
      with_resampling([&] {
        auto X = random_set(rng, ms, "x"), Z = random_set(rng, ms, "z"), V = random_set(rng, ms, "v");
        auto P = random_morphism(rng, A, X, Z, mp), Q = random_morphism(rng, A, Z, V, mp);
        auto left = truncate(compose(P, Q, cfg.limits), 2);
        auto right = truncate(compose(truncate(P, 2), truncate(Q, 2), cfg.limits), 2);
        t.record(left == right, [&] { return json{{"P", to_json(P)}, {"Q", to_json(Q)}}; });
      });
    rep.checks.push_back(t.finish());
  }
  return rep;
}

inline Report run_roundtrip(const RunConfig& cfg) {
  cfg.validate();
  Report rep{cfg.to_json(), {}};
  Phi phi(functor_from_config(cfg), cfg.limits);
  const auto A = phi.functor().source_ring();
  Rng rng(cfg.seed);
  for (auto [m, n] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {2, 2}, {3, 2}}) {
    Tally t("roundtrip", {{"shape", std::to_string(m) + "x" + std::to_string(n)}});
    for (std::size_t s = 0; s < cfg.samples; ++s) {
      auto alpha = rng.matrix(A, m, n);
      auto r = roundtrip_check(phi, alpha);
      t.record(r.holds(), [&] {
        return json{{"alpha", to_json(alpha)}, {"conjugated", to_json(r.conjugated)}, {"reconstructed", to_json(r.reconstructed)}};
      });
    }
    rep.checks.push_back(t.finish());
  }
  Tally t("reconstruction_multiplicative");
  for (std::size_t s = 0; s < cfg.samples; ++s) {
    const std::size_t m = rng.between(1, 2), k = rng.between(1, 2), n = rng.between(1, 2);
    auto a = rng.matrix(A, m, k), b = rng.matrix(A, k, n);
    auto lhs = reconstruct(phi, a) * reconstruct(phi, b), rhs = reconstruct(phi, a * b);
    t.record(lhs == rhs, [&] { return json{{"a", to_json(a)}, {"b", to_json(b)}}; });
  }
  rep.checks.push_back(t.finish());
  return rep;
}

/// Phi(sym) for sym : T2 -> S2 over the configured field.
inline Report run_naturality(const RunConfig& cfg) {
  cfg.validate();
  Report rep{cfg.to_json(), {}};
  auto t2 = build_functor("T2", cfg.field, cfg.field), s2 = build_functor("S2", cfg.field, cfg.field);
  cfg.limits.check_dim(t2.obj(cfg.max_size), "T2(Omega^" + std::to_string(cfg.max_size) + ")");
  auto eta = make_nat_transform("sym", t2, s2);
  Phi F(t2, cfg.limits), G(s2, cfg.limits);
  const auto& A = cfg.field;
  Rng rng(cfg.seed);
  {
    Tally t("componentwise_natural");
    for (std::size_t s = 0; s < cfg.samples; ++s) {
      auto a = rng.matrix(A, rng.between(0, cfg.max_size), rng.between(0, cfg.max_size));
      t.record(is_natural_at(eta, a), [&] { return json{{"arrow", to_json(a)}}; });
    }
    rep.checks.push_back(t.finish());
  }
  {
    json comps = json::object();
    for (std::size_t k = 0; k <= std::min<std::size_t>(cfg.max_size, 2); ++k) comps[std::to_string(k)] = to_json(phi_on_nat(eta, F, G, k));
    rep.checks.push_back({"phi_eta", {{"components", comps}}, "pass", nullptr});
  }
  Tally t("intertwining");
  for (std::size_t s = 0; s < cfg.samples; ++s)
    with_resampling([&] {
      auto X = random_set(rng, cfg.max_size, "x"), Z = random_set(rng, cfg.max_size, "z");
      auto m = random_morphism(rng, A, X, Z, std::min(kSamplePassages, cfg.limits.max_passages));
      auto r = intertwining_check(eta, F, G, m);
      t.record(r.holds(), [&] { return json{{"maze", to_json(m)}, {"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)}}; });
    });
  rep.checks.push_back(t.finish());
  return rep;
}

inline Report run_quad(const RunConfig& cfg) {
  cfg.validate();
  Report rep{cfg.to_json(), {}};
  Phi phi(functor_from_config(cfg), cfg.limits);
  for (const auto& r : law_table_check(phi, cfg.samples, cfg.seed)) {
    CheckRow row{"law", {{"law", r.name}, {"group", r.group}, {"cases", r.cases}}};
    if (r.binding) {
      row.status = r.holds() ? "pass" : "fail";
    } else {
      row.status = "info";
      row.params["verdict"] = r.evaluated_failures == 0 ? "holds under evaluation" : "fails under evaluation";
      row.params["as_canonical_sums"] = r.truncated_failures == 0 ? "holds" : "fails";
    }
    if (r.witness) {
      row.witness = {{"params", r.witness->params}, {"route", r.witness->route}, {"lhs", r.witness->lhs}, {"rhs", r.witness->rhs}};
      row.params["truncated_failures"] = r.truncated_failures;
      row.params["evaluated_failures"] = r.evaluated_failures;
    }
    if (r.truncation_mismatches) {
      row.status = "fail";
      row.params["truncation_mismatches"] = r.truncation_mismatches;
    }
    rep.checks.push_back(std::move(row));
  }
  if (phi.dim(0) == 0) {
    const auto d = extract(phi);
    rep.checks.push_back({"quad_data",
                          {{"dim_M_e", d.M_e->dim()}, {"dim_M_ee", d.M_ee->dim()}, {"T", to_json(d.T)}, {"P", to_json(d.P)}},
                          "pass",
                          nullptr});
    for (const auto& inv : quad_invariants(d, phi.functor().source_ring()))
      rep.checks.push_back({"quad_invariant", {{"identity", inv.name}}, inv.holds ? "pass" : "fail",
                            inv.holds ? json(nullptr) : json(inv.witness)});
  } else {
    rep.checks.push_back({"quad_data", {{"skipped", "F(0) != 0; use Red(F)"}}, "info", nullptr});
  }
  return rep;
}

}  // namespace laby
