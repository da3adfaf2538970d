#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "laby/phi.hpp"
#include "laby/random.hpp"

namespace laby {

/// The spanning mazes between [1] and [2]:
///   I(a, b) = {1<-1 a, 2<-2 b}     T(g, d) = {2<-1 g, 1<-2 d}
///   P(z, e) = {1<-1 z, 1<-2 e}     H(x)    = {1<-1 x1, 2<-1 x2}
///   I(e)    = {1<-1 e}             E(w)    = {1<-1 w1, 1<-1 w2}
/// A zero parameter gives the zero morphism.
inline MazeSum generator(RingSpec ring, std::string_view tag, const std::vector<std::int64_t>& params) {
  const auto one = IndexSet::range(1), two = IndexSet::range(2);
  auto need = [&](std::size_t n) {
    if (params.size() != n)
      throw InputError("generator " + std::string(tag) + " takes " + std::to_string(n) + " parameters, got " +
                       std::to_string(params.size()));
  };
  auto r = [&](std::size_t i) { return ring.reduce(params[i]); };
  if (tag == "I" && params.size() == 1) return normalize(ring, one, one, std::vector<Passage>{{0, 0, r(0)}});
  if (tag == "I") {
    need(2);
    return normalize(ring, two, two, std::vector<Passage>{{0, 0, r(0)}, {1, 1, r(1)}});
  }
  if (tag == "T") {
    need(2);
    return normalize(ring, two, two, std::vector<Passage>{{1, 0, r(0)}, {0, 1, r(1)}});
  }
  if (tag == "P") {
    need(2);
    return normalize(ring, one, two, std::vector<Passage>{{0, 0, r(0)}, {0, 1, r(1)}});
  }
  if (tag == "H") {
    need(2);
    return normalize(ring, two, one, std::vector<Passage>{{0, 0, r(0)}, {1, 0, r(1)}});
  }
  if (tag == "E") {
    need(2);
    return normalize(ring, one, one, std::vector<Passage>{{0, 0, r(0)}, {0, 0, r(1)}});
  }
  throw InputError("unknown generator " + std::string(tag));
}

/// The same generators read off their structured presentations X <-f- Y -g-> Z.
inline MazeSum generator_structured(RingSpec ring, std::string_view tag, const std::vector<std::int64_t>& params) {
  const auto one = IndexSet::range(1), two = IndexSet::range(2);
  auto diag = [&](std::size_t n) {
    Matrix a(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) a.set(i, i, params.at(i));
    return a;
  };
  auto column = [&] { return Matrix(ring, 2, 1, {params.at(0), params.at(1)}); };
  if (tag == "I" && params.size() == 1) return from_structured({ring, one, one, one, {0}, {0}, diag(1)});
  if (tag == "I") return from_structured({ring, two, two, two, {0, 1}, {0, 1}, diag(2)});
  if (tag == "T") return from_structured({ring, two, two, two, {1, 0}, {0, 1}, diag(2)});
  if (tag == "P") return from_structured({ring, one, two, two, {0, 0}, {0, 1}, diag(2)});
  if (tag == "H") return from_structured({ring, two, two, one, {0, 1}, {0, 0}, column()});
  if (tag == "E") return from_structured({ring, one, two, one, {0, 0}, {0, 0}, column()});
  throw InputError("unknown generator " + std::string(tag));
}

/// Composite of a product written left to right, A B C = A o B o C.
inline MazeSum product(const std::vector<MazeSum>& factors, const Limits& limits = {}) {
  if (factors.empty()) throw InputError("empty product");
  MazeSum out = factors.back();
  for (std::size_t i = factors.size() - 1; i-- > 0;) out = compose(factors[i], out, limits);
  return out;
}

/// One instance of a law: lhs and rhs are products (a single factor is just a morphism).
struct LawCase {
  std::vector<MazeSum> lhs;
  std::vector<MazeSum> rhs;
};

struct Law {
  std::string name;
  std::string group;   // "table", "expression", "axiom", "derived"
  bool binding = true; // false: a variant as printed, reported but not required to hold
  std::size_t arity = 0;
  std::function<LawCase(RingSpec, const std::vector<std::int64_t>&)> make;
};

/// Multiplication table, expressions through T = T(1,1) and P = P(1,1), the ten
/// axioms and the derived identities. T(g,d)H(x) and E(w)P(z,e) appear both
/// as corrected and as printed; (QM2) both with T and with I.
inline std::vector<Law> quadratic_laws() {
  using V = std::vector<std::int64_t>;
  auto g = [](RingSpec r, std::string_view t, V p) { return generator(r, t, p); };
  std::vector<Law> laws;
  auto add = [&](std::string name, std::string group, bool binding, std::size_t arity,
                 std::function<LawCase(RingSpec, const V&)> make) {
    laws.push_back({std::move(name), std::move(group), binding, arity, std::move(make)});
  };

  add("I(a,b)I(a',b') = I(aa',bb')", "table", true, 4, [g](RingSpec r, const V& p) {
    return LawCase{{g(r, "I", {p[0], p[1]}), g(r, "I", {p[2], p[3]})}, {g(r, "I", {p[0] * p[2], p[1] * p[3]})}};
  });
  add("I(a,b)T(c,d) = T(bc,ad)", "table", true, 4, [g](RingSpec r, const V& p) {
    return LawCase{{g(r, "I", {p[0], p[1]}), g(r, "T", {p[2], p[3]})}, {g(r, "T", {p[1] * p[2], p[0] * p[3]})}};
  });
  add("T(c,d)I(a,b) = T(ca,db)", "table", true, 4, [g](RingSpec r, const V& p) {
    return LawCase{{g(r, "T", {p[0], p[1]}), g(r, "I", {p[2], p[3]})}, {g(r, "T", {p[0] * p[2], p[1] * p[3]})}};
  });
  add("T(c,d)T(c',d') = I(dc',cd')", "table", true, 4, [g](RingSpec r, const V& p) {
    return LawCase{{g(r, "T", {p[0], p[1]}), g(r, "T", {p[2], p[3]})}, {g(r, "I", {p[1] * p[2], p[0] * p[3]})}};
  });
  add("I(a,b)H(x) = H((a+b)x)", "table", true, 4, [g](RingSpec r, const V& p) {
    return LawCase{{g(r, "I", {p[0], p[1]}), g(r, "H", {p[2], p[3]})}, {g(r, "H", {p[0] * p[2], p[1] * p[3]})}};
  });
  add("T(c,d)H(x) = H((d+c)sx)", "table", true, 4, [g](RingSpec r, const V& p) {
    return LawCase{{g(r, "T", {p[0], p[1]}), g(r, "H", {p[2], p[3]})}, {g(r, "H", {p[1] * p[3], p[0] * p[2]})}};
  });
  add("T(c,d)H(x) = H((d+c)x) as printed", "table", false, 4, [g](RingSpec r, const V& p) {
    return LawCase{{g(r, "T", {p[0], p[1]}), g(r, "H", {p[2], p[3]})}, {g(r, "H", {p[1] * p[2], p[0] * p[3]})}};
  });
  add("P(z,e)I(a,b) = P(za,eb)", "table", true, 4, [g](RingSpec r, const V& p) {
    return LawCase{{g(r, "P", {p[0], p[1]}), g(r, "I", {p[2], p[3]})}, {g(r, "P", {p[0] * p[2], p[1] * p[3]})}};
  });
  add("P(z,e)T(c,d) = P(ec,zd)", "table", true, 4, [g](RingSpec r, const V& p) {
    return LawCase{{g(r, "P", {p[0], p[1]}), g(r, "T", {p[2], p[3]})}, {g(r, "P", {p[1] * p[2], p[0] * p[3]})}};
  });
  add("H(x)I(e) = H(xe)", "table", true, 3, [g](RingSpec r, const V& p) {
    return LawCase{{g(r, "H", {p[0], p[1]}), g(r, "I", {p[2]})}, {g(r, "H", {p[0] * p[2], p[1] * p[2]})}};
  });
  add("I(e)I(e') = I(ee')", "table", true, 2, [g](RingSpec r, const V& p) {
    return LawCase{{g(r, "I", {p[0]}), g(r, "I", {p[1]})}, {g(r, "I", {p[0] * p[1]})}};
  });
  add("I(e)E(w) = E((e+e)w)", "table", true, 3, [g](RingSpec r, const V& p) {
    return LawCase{{g(r, "I", {p[0]}), g(r, "E", {p[1], p[2]})}, {g(r, "E", {p[0] * p[1], p[0] * p[2]})}};
  });
  add("E(w)I(e) = E(we)", "table", true, 3, [g](RingSpec r, const V& p) {
    return LawCase{{g(r, "E", {p[0], p[1]}), g(r, "I", {p[2]})}, {g(r, "E", {p[0] * p[2], p[1] * p[2]})}};
  });
  add("E(w)E(w') = E((w1+w2)w') + E((w2+w1)w')", "table", true, 4, [g](RingSpec r, const V& p) {
    return LawCase{{g(r, "E", {p[0], p[1]}), g(r, "E", {p[2], p[3]})},
                   {g(r, "E", {p[0] * p[2], p[1] * p[3]}) + g(r, "E", {p[1] * p[2], p[0] * p[3]})}};
  });
  add("H(x)E(w) = H((x1+x2)w) + H((x1+x2)sw)", "table", true, 4, [g](RingSpec r, const V& p) {
    return LawCase{{g(r, "H", {p[0], p[1]}), g(r, "E", {p[2], p[3]})},
                   {g(r, "H", {p[0] * p[2], p[1] * p[3]}) + g(r, "H", {p[0] * p[3], p[1] * p[2]})}};
  });
  add("H(x)P(z,e) = I(x1z,x2e) + T(x2z,x1e)", "table", true, 4, [g](RingSpec r, const V& p) {
    return LawCase{{g(r, "H", {p[0], p[1]}), g(r, "P", {p[2], p[3]})},
                   {g(r, "I", {p[0] * p[2], p[1] * p[3]}) + g(r, "T", {p[1] * p[2], p[0] * p[3]})}};
  });
  add("E(w)P(z,e) = P(w1z,w2e) + P(w2z,w1e)", "table", true, 4, [g](RingSpec r, const V& p) {
    return LawCase{{g(r, "E", {p[0], p[1]}), g(r, "P", {p[2], p[3]})},
                   {g(r, "P", {p[0] * p[2], p[1] * p[3]}) + g(r, "P", {p[1] * p[2], p[0] * p[3]})}};
  });
  // printed with x1 in the last slot; x is an independent parameter (p[4], p[5])
  add("E(w)P(z,e) = P(w1z,w2e) + P(w2z,x1e) as printed", "table", false, 6, [g](RingSpec r, const V& p) {
    return LawCase{{g(r, "E", {p[0], p[1]}), g(r, "P", {p[2], p[3]})},
                   {g(r, "P", {p[0] * p[2], p[1] * p[3]}) + g(r, "P", {p[1] * p[2], p[4] * p[3]})}};
  });
  add("P(z,e)H(x) = E((z+e)x)", "table", true, 4, [g](RingSpec r, const V& p) {
    return LawCase{{g(r, "P", {p[0], p[1]}), g(r, "H", {p[2], p[3]})}, {g(r, "E", {p[0] * p[2], p[1] * p[3]})}};
  });
  add("I(e)P(z,e') = P(ez,ee')", "table", true, 3, [g](RingSpec r, const V& p) {
    return LawCase{{g(r, "I", {p[0]}), g(r, "P", {p[1], p[2]})}, {g(r, "P", {p[0] * p[1], p[0] * p[2]})}};
  });

  add("T(c,d) = T I(c,d)", "expression", true, 2, [g](RingSpec r, const V& p) {
    return LawCase{{g(r, "T", {1, 1}), g(r, "I", {p[0], p[1]})}, {g(r, "T", {p[0], p[1]})}};
  });
  add("P(z,e) = P I(z,e)", "expression", true, 2, [g](RingSpec r, const V& p) {
    return LawCase{{g(r, "P", {1, 1}), g(r, "I", {p[0], p[1]})}, {g(r, "P", {p[0], p[1]})}};
  });
  add("E(w) = P H(w)", "expression", true, 2, [g](RingSpec r, const V& p) {
    return LawCase{{g(r, "P", {1, 1}), g(r, "H", {p[0], p[1]})}, {g(r, "E", {p[0], p[1]})}};
  });

  add("M module: I(e)I(e') = I(ee')", "axiom", true, 2, [g](RingSpec r, const V& p) {
    return LawCase{{g(r, "I", {p[0]}), g(r, "I", {p[1]})}, {g(r, "I", {p[0] * p[1]})}};
  });
  add("N module: I(a,b)I(a',b') = I(aa',bb')", "axiom", true, 4, [g](RingSpec r, const V& p) {
    return LawCase{{g(r, "I", {p[0], p[1]}), g(r, "I", {p[2], p[3]})}, {g(r, "I", {p[0] * p[2], p[1] * p[3]})}};
  });
  add("N symmetric: I(a,b)T = T I(b,a)", "axiom", true, 2, [g](RingSpec r, const V& p) {
    return LawCase{{g(r, "I", {p[0], p[1]}), g(r, "T", {1, 1})}, {g(r, "T", {1, 1}), g(r, "I", {p[1], p[0]})}};
  });
  add("T involution: TT = I(1,1)", "axiom", true, 0, [g](RingSpec r, const V&) {
    return LawCase{{g(r, "T", {1, 1}), g(r, "T", {1, 1})}, {g(r, "I", {1, 1})}};
  });
  add("P homo: I(e)P = P I(e,e)", "axiom", true, 1, [g](RingSpec r, const V& p) {
    return LawCase{{g(r, "I", {p[0]}), g(r, "P", {1, 1})}, {g(r, "P", {1, 1}), g(r, "I", {p[0], p[0]})}};
  });
  add("P: PT = P", "axiom", true, 0, [g](RingSpec r, const V&) {
    return LawCase{{g(r, "P", {1, 1}), g(r, "T", {1, 1})}, {g(r, "P", {1, 1})}};
  });
  add("H well-defined: H(x)I(e) = H(xe)", "axiom", true, 3, [g](RingSpec r, const V& p) {
    return LawCase{{g(r, "H", {p[0], p[1]}), g(r, "I", {p[2]})}, {g(r, "H", {p[0] * p[2], p[1] * p[2]})}};
  });
  add("H symmetric: TH(x) = H(sx)", "axiom", true, 2, [g](RingSpec r, const V& p) {
    return LawCase{{g(r, "T", {1, 1}), g(r, "H", {p[0], p[1]})}, {g(r, "H", {p[1], p[0]})}};
  });
  add("H homo: I(a,b)H(x) = H((a+b)x)", "axiom", true, 4, [g](RingSpec r, const V& p) {
    return LawCase{{g(r, "I", {p[0], p[1]}), g(r, "H", {p[2], p[3]})}, {g(r, "H", {p[0] * p[2], p[1] * p[3]})}};
  });
  add("QM2 with T: H(x)P = I(x1,x2) + T(x2,x1)", "axiom", true, 2, [g](RingSpec r, const V& p) {
    return LawCase{{g(r, "H", {p[0], p[1]}), g(r, "P", {1, 1})}, {g(r, "I", {p[0], p[1]}) + g(r, "T", {p[1], p[0]})}};
  });
  add("QM2 as printed: H(x)P = I(x1,x2) + I(x2,x1)", "axiom", false, 2, [g](RingSpec r, const V& p) {
    return LawCase{{g(r, "H", {p[0], p[1]}), g(r, "P", {1, 1})}, {g(r, "I", {p[0], p[1]}) + g(r, "I", {p[1], p[0]})}};
  });

  add("H(1,1)P = I(1,1) + T", "derived", true, 0, [g](RingSpec r, const V&) {
    return LawCase{{g(r, "H", {1, 1}), g(r, "P", {1, 1})}, {g(r, "I", {1, 1}) + g(r, "T", {1, 1})}};
  });
  add("PHP = 2P", "derived", true, 0, [g](RingSpec r, const V&) {
    return LawCase{{g(r, "P", {1, 1}), g(r, "H", {1, 1}), g(r, "P", {1, 1})}, {2 * g(r, "P", {1, 1})}};
  });
  return laws;
}

/// Parameter tuples: all of A^arity when that has at most 256 elements, else `samples` draws.
inline std::vector<std::vector<std::int64_t>> law_parameters(RingSpec ring, std::size_t arity, std::size_t samples, Rng& rng) {
  std::vector<std::vector<std::int64_t>> out;
  std::size_t total = 1;
  bool exhaustive = true;
  for (std::size_t i = 0; i < arity && exhaustive; ++i) {
    total *= ring.modulus();
    exhaustive = total <= 256;
  }
  if (exhaustive) {
    for (std::size_t t = 0; t < total; ++t) {
      std::vector<std::int64_t> p(arity);
      std::size_t rest = t;
      for (std::size_t i = 0; i < arity; ++i, rest /= ring.modulus()) p[i] = static_cast<std::int64_t>(rest % ring.modulus());
      out.push_back(std::move(p));
    }
  } else {
    for (std::size_t t = 0; t < samples; ++t) {
      std::vector<std::int64_t> p(arity);
      for (auto& v : p) v = rng.residue(ring);
      out.push_back(std::move(p));
    }
  }
  return out;
}

struct LawFailure {
  std::vector<std::int64_t> params;
  std::string route;  // "truncated" or "evaluated"
  std::string lhs;
  std::string rhs;
};

struct LawResult {
  std::string name;
  std::string group;
  bool binding = true;
  std::size_t cases = 0;
  std::size_t truncated_failures = 0;
  std::size_t evaluated_failures = 0;
  std::size_t truncation_mismatches = 0;  // Phi(composite) != Phi(truncate(composite, 2))
  std::optional<LawFailure> witness;
  bool holds() const { return truncated_failures == 0 && evaluated_failures == 0 && truncation_mismatches == 0; }
};

/// Both routes per instance: truncated composites in Laby_(2) compared as
/// canonical sums, and untruncated composites compared under Phi(F).
inline LawResult check_law(const Law& law, const Phi& phi, std::size_t samples, Rng& rng) {
  const auto ring = phi.functor().source_ring();
  LawResult res{law.name, law.group, law.binding};
  for (const auto& params : law_parameters(ring, law.arity, samples, rng)) {
    auto c = law.make(ring, params);
    auto lhs = product(c.lhs, phi.limits());
    auto rhs = product(c.rhs, phi.limits());
    ++res.cases;
    auto tl = truncate(lhs, 2), tr = truncate(rhs, 2);
    if (!(tl == tr)) {
      ++res.truncated_failures;
      if (!res.witness) res.witness = LawFailure{params, "truncated", tl.to_string(), tr.to_string()};
    }
    auto el = phi.eval(lhs).matrix, er = phi.eval(rhs).matrix;
    if (!(el == er)) {
      ++res.evaluated_failures;
      if (!res.witness) res.witness = LawFailure{params, "evaluated", el.key(), er.key()};
    }
    if (!(el == phi.eval(tl).matrix) || !(er == phi.eval(tr).matrix)) ++res.truncation_mismatches;
  }
  return res;
}

/// Rejects functors whose cross-effects do not vanish from ce_3 on.
inline void require_quadratic(const Functor& f, const Limits& limits) {
  auto d = degree(f, 2, limits);
  if (!d.degree) throw InputError(f.name() + " is not quadratic: degree " + d.to_string());
}

inline std::vector<LawResult> law_table_check(const Phi& phi, std::size_t samples, std::uint64_t seed) {
  require_quadratic(phi.functor(), phi.limits());
  Rng rng(seed);
  std::vector<LawResult> out;
  for (const auto& law : quadratic_laws()) out.push_back(check_law(law, phi, samples, rng));
  return out;
}

/// The quadratic data of F: cross-effects at [1], [2] and the structure maps.
struct QuadData {
  const CEBasis* M_e = nullptr;
  const CEBasis* M_ee = nullptr;
  Matrix T;
  Matrix P;
  std::map<std::pair<Residue, Residue>, Matrix> H;
  std::map<Residue, Matrix> I_act;
  std::map<std::pair<Residue, Residue>, Matrix> II_act;
};

struct InvariantResult {
  std::string name;
  bool holds = true;
  std::string witness;
};

inline QuadData extract(const Phi& phi) {
  const auto& f = phi.functor();
  require_quadratic(f, phi.limits());
  if (phi.dim(0) != 0) throw InputError(f.name() + "(0) != 0; extract the reduced functor instead");
  const auto ring = f.source_ring();
  const auto q = static_cast<Residue>(ring.modulus());
  QuadData d;
  d.M_e = &phi.ce(1);
  d.M_ee = &phi.ce(2);
  d.T = phi.eval(generator(ring, "T", {1, 1})).matrix;
  d.P = phi.eval(generator(ring, "P", {1, 1})).matrix;
  for (Residue a = 0; a < q; ++a) {
    d.I_act.emplace(a, phi.eval(generator(ring, "I", {a})).matrix);
    for (Residue b = 0; b < q; ++b) {
      d.H.emplace(std::pair{a, b}, phi.eval(generator(ring, "H", {a, b})).matrix);
      d.II_act.emplace(std::pair{a, b}, phi.eval(generator(ring, "I", {a, b})).matrix);
    }
  }
  return d;
}

inline std::vector<InvariantResult> quad_invariants(const QuadData& d, RingSpec ring) {
  const auto field = d.T.ring();
  const auto q = static_cast<Residue>(ring.modulus());
  const auto ide = Matrix::identity(field, d.M_e->dim());
  const auto idee = Matrix::identity(field, d.M_ee->dim());
  std::vector<InvariantResult> out;
  auto record = [&](std::string name, bool ok, std::string witness) {
    if (!out.empty() && out.back().name == name) {
      if (out.back().holds && !ok) out.back() = {std::move(name), false, std::move(witness)};
      return;
    }
    out.push_back({std::move(name), ok, ok ? "" : std::move(witness)});
  };
  auto p = [](auto... v) { return ((std::to_string(v) + " ") + ...); };
  record("T^2 = id", d.T * d.T == idee, d.T.key());
  record("PT = P", d.P * d.T == d.P, d.P.key());
  record("I(1) = id", d.I_act.at(1) == ide, d.I_act.at(1).key());
  for (Residue a = 0; a < q; ++a)
    for (Residue b = 0; b < q; ++b)
      record("I(a)I(b) = I(ab)", d.I_act.at(a) * d.I_act.at(b) == d.I_act.at(ring.mul(a, b)), p(a, b));
  for (Residue a = 0; a < q; ++a)
    for (Residue b = 0; b < q; ++b)
      record("II(a,b)T = T II(b,a)", d.II_act.at({a, b}) * d.T == d.T * d.II_act.at({b, a}), p(a, b));
  for (Residue e = 0; e < q; ++e)
    record("P II(e,e) = I(e) P", d.P * d.II_act.at({e, e}) == d.I_act.at(e) * d.P, p(e));
  for (const auto& [xi, h] : d.H)
    for (Residue e = 0; e < q; ++e)
      record("H(xe) = H(x) I(e)", d.H.at({ring.mul(xi.first, e), ring.mul(xi.second, e)}) == h * d.I_act.at(e),
             p(xi.first, xi.second, e));
  for (const auto& [xi, h] : d.H) record("T H(x) = H(sx)", d.T * h == d.H.at({xi.second, xi.first}), p(xi.first, xi.second));
  const auto& h11 = d.H.at({1, 1});
  record("H(1,1) P = id + T", h11 * d.P == idee + d.T, (h11 * d.P).key());
  record("PHP = 2P", d.P * h11 * d.P == d.P + d.P, (d.P * h11 * d.P).key());
  return out;
}

/// Spanning mazes of a hom-slot of Laby_(2), enumerated over the finite ring.
struct HomSpan {
  std::size_t enumerated = 0;   // parameter tuples tried
  std::vector<Maze> nonzero;    // distinct nonzero canonical mazes
};

inline HomSpan laby2_hom_basis(RingSpec ring, std::size_t from, std::size_t to) {
  if (from < 1 || from > 2 || to < 1 || to > 2) throw InputError("laby2_hom_basis: objects must be [1] or [2]");
  std::vector<std::pair<std::string, std::size_t>> tags;
  if (from == 1 && to == 1) tags = {{"I", 1}, {"E", 2}};
  if (from == 2 && to == 1) tags = {{"P", 2}};
  if (from == 1 && to == 2) tags = {{"H", 2}};
  if (from == 2 && to == 2) tags = {{"I", 2}, {"T", 2}};
  const std::int64_t q = ring.modulus();
  if (q > 256) throw GuardError("laby2_hom_basis: ring with more than 256 elements");
  HomSpan out;
  std::set<Maze> seen;
  for (const auto& [tag, arity] : tags) {
    const std::int64_t total = arity == 1 ? q : q * q;
    for (std::int64_t t = 0; t < total; ++t) {
      std::vector<std::int64_t> params{t % q};
      if (arity == 2) params.push_back(t / q);
      ++out.enumerated;
      const auto g = generator(ring, tag, params);
      for (const auto& [m, c] : g.terms())
        if (seen.insert(m).second) out.nonzero.push_back(m);
    }
  }
  return out;
}

}  // namespace laby
