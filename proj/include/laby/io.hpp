#pragma once

#include <json.hpp>

#include "laby/functor.hpp"
#include "laby/maze.hpp"

namespace laby {

using json = nlohmann::ordered_json;

namespace detail {

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing key '") + key + "'");
  return j.at(key);
}

template <class T>
T get_as(const json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const json::exception& e) {
    throw InputError(std::string("bad value for '") + key + "': " + e.what());
  }
}

inline IndexSet index_set(const json& j, const char* key) {
  auto names = get_as<std::vector<std::string>>(j, key);
  try {
    return IndexSet(std::move(names));
  } catch (const Error& e) {
    throw InputError(std::string(key) + ": " + e.what());
  }
}

}  // namespace detail

/// {"ring":"fp:3","rows":2,"cols":2,"entries":[1,0,0,1]}, entries row-major;
/// a list of rows is accepted on input.
inline json to_json(const Matrix& m) {
  json entries = json::array();
  for (auto v : m.entries()) entries.push_back(v);
  return {{"ring", m.ring().to_string()}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

inline Matrix matrix_from_json(const json& j, std::optional<RingSpec> ring = std::nullopt) {
  auto r = j.contains("ring") ? RingSpec::parse(detail::get_as<std::string>(j, "ring")) : ring.value_or(RingSpec::zmod(2));
  if (ring && j.contains("ring")) require_same_ring(r, *ring, "matrix");
  const auto rows = detail::get_as<std::size_t>(j, "rows"), cols = detail::get_as<std::size_t>(j, "cols");
  const auto& e = detail::field(j, "entries");
  std::vector<std::int64_t> flat;
  try {
    for (const auto& x : e) {
      if (x.is_array())
        for (const auto& y : x) flat.push_back(y.get<std::int64_t>());
      else
        flat.push_back(x.get<std::int64_t>());
    }
  } catch (const json::exception& ex) {
    throw InputError(std::string("matrix entries: ") + ex.what());
  }
  return Matrix(r, rows, cols, flat);
}

inline json to_json(const Maze& m) {
  json ps = json::array();
  for (const auto& p : m.passages())
    ps.push_back({{"to", m.target()[p.to]}, {"from", m.source()[p.from]}, {"label", p.label}});
  return {{"ring", m.ring().to_string()}, {"source", m.source().names()}, {"target", m.target().names()}, {"passages", ps}};
}

/// Loading normalizes: the result may be the zero morphism.
inline MazeSum maze_from_json(const json& j) {
  const auto ring = RingSpec::parse(detail::get_as<std::string>(j, "ring"));
  const auto source = detail::index_set(j, "source");
  const auto target = detail::index_set(j, "target");
  std::vector<RawPassage> raw;
  for (const auto& p : detail::field(j, "passages")) {
    raw.push_back({detail::get_as<std::string>(p, "to"), detail::get_as<std::string>(p, "from"),
                   detail::get_as<std::int64_t>(p, "label")});
    if (!target.contains(raw.back().to)) throw InputError("passage target '" + raw.back().to + "' is not in the target set");
    if (!source.contains(raw.back().from)) throw InputError("passage source '" + raw.back().from + "' is not in the source set");
  }
  return normalize(ring, target, source, raw);
}

/// {"ring":..,"source":..,"target":..,"terms":[{"coeff":c,"maze":{..}}]}. The
/// endpoint keys keep the zero morphism typed; on input they are optional
/// when there is at least one term. A bare maze object is read as a one-term sum.
inline json to_json(const MazeSum& s) {
  json terms = json::array();
  for (const auto& [m, c] : s.terms()) terms.push_back({{"coeff", c}, {"maze", to_json(m)}});
  return {{"ring", s.ring().to_string()}, {"source", s.source().names()}, {"target", s.target().names()}, {"terms", terms}};
}

inline MazeSum mazesum_from_json(const json& j) {
  if (j.is_object() && j.contains("passages")) return maze_from_json(j);
  const auto& terms = detail::field(j, "terms");
  if (!terms.is_array()) throw InputError("'terms' must be an array");
  std::optional<MazeSum> out;
  if (j.contains("ring") && j.contains("source") && j.contains("target"))
    out.emplace(RingSpec::parse(detail::get_as<std::string>(j, "ring")), detail::index_set(j, "target"),
                detail::index_set(j, "source"));
  for (const auto& t : terms) {
    auto m = maze_from_json(detail::field(t, "maze"));
    const auto c = detail::get_as<std::int64_t>(t, "coeff");
    if (!out) out.emplace(m.ring(), m.target(), m.source());
    try {
      require_same_ring(out->ring(), m.ring(), "maze sum");
      *out += c * m;
    } catch (const Error& e) {
      throw InputError(std::string("maze sum term: ") + e.what());
    }
  }
  if (!out) throw InputError("an empty maze sum needs 'ring', 'source' and 'target'");
  return *out;
}

/// {"ring":"zmod:2","field":"fp:2","obj":[d0,d1,...],"generators":{"RxC:e,..":matrix,...}}
/// where each key is the arrow and each value its image.
inline Functor table_functor_from_json(const json& j, const std::string& name = "table") {
  const auto ring = RingSpec::parse(detail::get_as<std::string>(j, "ring"));
  const auto field = RingSpec::parse(detail::get_as<std::string>(j, "field"));
  field.require_field("functor table");
  auto dims = detail::get_as<std::vector<std::size_t>>(j, "obj");
  std::vector<TableFunctorImpl::Generator> gens;
  const auto& g = detail::field(j, "generators");
  if (!g.is_object()) throw InputError("'generators' must be an object keyed by arrow");
  for (const auto& [key, image] : g.items()) {
    auto colon = key.find(':');
    auto x = key.find('x');
    if (colon == std::string::npos || x == std::string::npos || x > colon) throw InputError("bad arrow key '" + key + "'");
    std::vector<std::int64_t> entries;
    std::size_t rows = 0, cols = 0;
    try {
      rows = std::stoul(key.substr(0, x));
      cols = std::stoul(key.substr(x + 1, colon - x - 1));
      std::string rest = key.substr(colon + 1);
      std::size_t pos = 0;
      while (pos < rest.size()) {
        auto comma = rest.find(',', pos);
        entries.push_back(std::stoll(rest.substr(pos, comma - pos)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
    } catch (const std::logic_error&) {
      throw InputError("bad arrow key '" + key + "'");
    }
    gens.push_back({Matrix(ring, rows, cols, entries), matrix_from_json(image, field)});
  }
  return Functor(name, ring, field, std::make_shared<TableFunctorImpl>(ring, field, std::move(dims), gens));
}

}  // namespace laby
