#pragma once

// JSON formats for category specs, objects, morphisms and algebras.
//
//   category  {"kind":"group","table":[[...]]}
//             {"kind":"pair","n":2}
//             {"kind":"union","left":<category>,"right":<category>}
//             {"kind":"explicit","objects":n,"arrows":[[src,tgt],...],
//              "identity":[...],"compose":[[k|null,...],...],"inverse":[...],
//              "labels":[...]}                       (labels optional)
//             An optional "name" string is ignored by the parser.
//   object    {"mult":{"<grade>":m,...}}             (absent grades are 0)
//   morphism  {"source":<object>,"target":<object>,
//              "blocks":{"<grade>":[["p/q",...],...],...}}   (absent blocks are 0)
//   algebra   {"carrier":<object>,"mult":{"blocks":...},"unit":{"blocks":...}}
//             {"gen":"unit"} | {"gen":"unit_summand","i":0}
//             {"gen":"groupoid_algebra","J":[...]} | {"gen":"internal_end","x":<object>}
//             {"gen":"sum","parts":[<algebra>,...]}
//   coalgebra {"dual_of":<algebra>} or explicit {"carrier","comult","counit"}
//
// Everything malformed raises InputError; a well-formed groupoid table that
// violates the groupoid laws raises ValidationError.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gcat/internal.hpp"

namespace gcat {

using Json = nlohmann::json;

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

namespace detail {

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    throw InputError(std::string("field '") + key + "' has the wrong type");
  }
}

inline std::size_t grade_key(const std::string& key, std::size_t grades) {
  std::size_t pos = 0;
  unsigned long g = 0;
  try {
    g = std::stoul(key, &pos);
  } catch (const std::exception&) {
    throw InputError("grade key '" + key + "' is not an index");
  }
  if (pos != key.size() || g >= grades) throw InputError("grade key '" + key + "' out of range");
  return g;
}

}  // namespace detail

inline Groupoid parse_groupoid(const Json& j) {
  const auto kind = detail::field<std::string>(j, "kind");
  if (kind == "group") return make_group(detail::field<std::vector<std::vector<std::size_t>>>(j, "table"));
  if (kind == "pair") return make_pair_groupoid(detail::field<std::size_t>(j, "n"));
  if (kind == "union") return disjoint_union(parse_groupoid(j.at("left")), parse_groupoid(j.at("right")));
  if (kind == "explicit") {
    const auto n = detail::field<std::size_t>(j, "objects");
    std::vector<Arrow> arrows;
    for (const auto& a : detail::field<std::vector<std::vector<std::size_t>>>(j, "arrows")) {
      if (a.size() != 2) throw InputError("arrow must be [src, tgt]");
      arrows.push_back({a[0], a[1]});
    }
    std::vector<std::vector<std::optional<std::size_t>>> compose;
    if (!j.contains("compose") || !j["compose"].is_array()) throw InputError("missing field 'compose'");
    for (const auto& row : j["compose"]) {
      if (!row.is_array()) throw InputError("compose rows must be arrays");
      std::vector<std::optional<std::size_t>> out;
      for (const auto& e : row) {
        if (e.is_null()) out.emplace_back();
        else if (e.is_number_unsigned()) out.emplace_back(e.get<std::size_t>());
        else throw InputError("compose entries must be indices or null");
      }
      compose.push_back(std::move(out));
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = detail::field<std::vector<std::string>>(j, "labels");
    return Groupoid(n, std::move(arrows), detail::field<std::vector<std::size_t>>(j, "identity"), std::move(compose),
                    detail::field<std::vector<std::size_t>>(j, "inverse"), std::move(labels));
  }
  throw InputError("unknown category kind '" + kind + "'");
}

inline Category load_category(const std::string& path) { return share(parse_groupoid(read_json_file(path))); }

// ---------------------------------------------------------------------------
// Objects and morphisms

inline Json to_json(const GradedObject& v) {
  Json mult = Json::object();
  for (auto g : v.support()) mult[std::to_string(g)] = v.mult(g);
  return {{"mult", mult}};
}

inline GradedObject parse_object(const Category& c, const Json& j) {
  if (!j.is_object() || !j.contains("mult") || !j["mult"].is_object()) throw InputError("object needs a 'mult' map");
  std::vector<std::size_t> mult(c->arrow_count(), 0);
  for (const auto& [key, value] : j["mult"].items()) {
    if (!value.is_number_unsigned()) throw InputError("multiplicities must be non-negative integers");
    mult[detail::grade_key(key, mult.size())] = value.get<std::size_t>();
  }
  return {c, std::move(mult)};
}

inline Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Only nonzero blocks are written.
inline Json to_json(const GradedMorphism& f) {
  Json blocks = Json::object();
  for (std::size_t g = 0; g < f.blocks().size(); ++g)
    if (!f.block(g).is_zero()) blocks[std::to_string(g)] = to_json(f.block(g));
  return {{"source", to_json(f.source())}, {"target", to_json(f.target())}, {"blocks", blocks}};
}

inline Matrix parse_matrix(const Json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) throw InputError("block has the wrong number of rows");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw InputError("block has the wrong number of columns");
    for (std::size_t c = 0; c < cols; ++c) {
      const Json& e = j[i][c];
      if (e.is_string()) m(i, c) = parse_rational(e.get<std::string>());
      else if (e.is_number_integer()) m(i, c) = Rational(e.get<long>());
      else throw InputError("matrix entries must be integers or \"p/q\" strings");
    }
  }
  return m;
}

/// Source and target default to the given objects when absent.
inline GradedMorphism parse_morphism(const Category& c, const Json& j, const GradedObject* source = nullptr,
                                     const GradedObject* target = nullptr) {
  if (!j.is_object()) throw InputError("morphism must be an object");
  const GradedObject s = j.contains("source") ? parse_object(c, j["source"]) : source ? *source : throw InputError("morphism needs a source");
  const GradedObject t = j.contains("target") ? parse_object(c, j["target"]) : target ? *target : throw InputError("morphism needs a target");
  if (source && !(s == *source)) throw InputError("morphism source does not match");
  if (target && !(t == *target)) throw InputError("morphism target does not match");
  std::vector<Matrix> blocks;
  for (std::size_t g = 0; g < s.grade_count(); ++g) blocks.emplace_back(t.mult(g), s.mult(g));
  if (j.contains("blocks")) {
    if (!j["blocks"].is_object()) throw InputError("'blocks' must be a map");
    for (const auto& [key, value] : j["blocks"].items()) {
      const std::size_t g = detail::grade_key(key, s.grade_count());
      blocks[g] = parse_matrix(value, t.mult(g), s.mult(g));
    }
  }
  return {s, t, std::move(blocks)};
}

// ---------------------------------------------------------------------------
// Algebras

inline InternalAlgebra build_algebra(const Category& c, const Json& j) {
  if (!j.is_object()) throw InputError("algebra spec must be an object");
  if (j.contains("gen")) {
    const auto gen = detail::field<std::string>(j, "gen");
    try {
      if (gen == "unit") return unit_algebra(c);
      if (gen == "unit_summand") return unit_summand_algebra(c, detail::field<std::size_t>(j, "i"));
      if (gen == "groupoid_algebra") return groupoid_algebra(c, detail::field<std::vector<std::size_t>>(j, "J"));
      if (gen == "internal_end") return internal_end(parse_object(c, j.at("x")));
      if (gen == "sum") {
        if (!j.contains("parts") || !j["parts"].is_array() || j["parts"].empty()) throw InputError("sum needs parts");
        InternalAlgebra acc = build_algebra(c, j["parts"][0]);
        for (std::size_t k = 1; k < j["parts"].size(); ++k) acc = direct_sum(acc, build_algebra(c, j["parts"][k]));
        return acc;
      }
    } catch (const std::out_of_range& e) {
      throw InputError(std::string("algebra generator: ") + e.what());
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("algebra generator: ") + e.what());
    }
    throw InputError("unknown algebra generator '" + gen + "'");
  }
  const GradedObject A = parse_object(c, j.at("carrier"));
  const GradedObject AA = tensor(A, A);
  const GradedObject one = GradedObject::unit(c);
  const GradedMorphism m = parse_morphism(c, j.at("mult"), &AA, &A);
  const GradedMorphism u = parse_morphism(c, j.at("unit"), j.at("unit").contains("source") ? nullptr : &one, &A);
  return {A, m, u};
}

inline InternalCoalgebra build_coalgebra(const Category& c, const Json& j) {
  if (!j.is_object()) throw InputError("coalgebra spec must be an object");
  if (j.contains("dual_of")) {
    const InternalAlgebra a = build_algebra(c, j["dual_of"]);
    if (!validate_algebra(a).valid()) throw InputError("dual_of: not an algebra");
    return dualize_algebra(a);
  }
  const GradedObject C = parse_object(c, j.at("carrier"));
  const GradedObject CC = tensor(C, C);
  const GradedObject one = GradedObject::unit(c);
  const GradedMorphism d = parse_morphism(c, j.at("comult"), &C, &CC);
  const GradedMorphism e = parse_morphism(c, j.at("counit"), &C, j.at("counit").contains("target") ? nullptr : &one);
  return {C, d, e};
}

inline Json to_json(const InternalAlgebra& a) {
  return {{"carrier", to_json(a.carrier)}, {"mult", to_json(a.mult)}, {"unit", to_json(a.unit)}};
}

inline Json to_json(const ValidationReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    Json e = {{"equation", f.equation}};
    e["grade"] = f.grade ? Json(*f.grade) : Json(nullptr);
    e["grades"] = f.grades;
    failures.push_back(std::move(e));
  }
  return {{"valid", r.valid()}, {"zero", r.zero}, {"failures", failures}};
}

}  // namespace gcat
