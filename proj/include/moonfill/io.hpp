#pragma once

// JSON encoding of the library's objects. Every document written by the CLI
// carries a top-level "schema" tag.

#include <string>
#include <vector>

#include <json.hpp>

#include "moonfill/algebra.hpp"
#include "moonfill/complex.hpp"
#include "moonfill/error.hpp"
#include "moonfill/paths.hpp"
#include "moonfill/perm.hpp"
#include "moonfill/pipedreams.hpp"
#include "moonfill/shapes.hpp"
#include "moonfill/triangulations.hpp"
#include "moonfill/words.hpp"

namespace moonfill {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "v1";

inline json with_schema(const std::string& kind, json body) {
  json out;
  out["schema"] = "moonfill." + kind + "/" + kSchemaVersion;
  for (auto& [key, value] : body.items()) out[key] = value;
  return out;
}

inline json to_json(BoxCoord b) { return json::array({b.row, b.col}); }

inline json to_json(const std::vector<BoxCoord>& boxes) {
  json a = json::array();
  for (auto b : boxes) a.push_back(to_json(b));
  return a;
}

inline json to_json(const Polyomino& m) { return {{"class", std::string(to_string(m.shape_class()))}, {"boxes", to_json(m.boxes())}}; }

inline json to_json(const Filling& f) { return {{"shape", to_json(f.shape.boxes())}, {"marks", to_json(f.marks)}}; }

inline json to_json(const Permutation& s) { return s.oneline(); }

inline json to_json(const PipeDream& d) { return {{"n", d.n}, {"crossings", to_json(d.crossings)}}; }

inline json to_json(const Biword& t) { return {{"top", t.top}, {"bottom", t.bottom}}; }

inline json to_json(const Tableau& t) { return t.rows; }

inline json to_json(const ReversePlanePartition& r) { return r.rows; }

inline json to_json(const FanOfPaths& f) {
  json j = {{"rows", f.rows}, {"cols", f.cols}, {"dyck", f.dyck}, {"paths", f.paths}};
  if (f.dyck) j["dyck_length"] = f.rows + 1;
  return j;
}

inline json to_json(const Triangulation& t) {
  json ds = json::array();
  for (auto d : t.nontrivial()) ds.push_back({d.a, d.b});
  return {{"n", t.n}, {"k", t.k}, {"diagonals", ds}};
}

inline json to_json(const MPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exponents", e}, {"coefficient", c}});
  return terms;
}

inline json to_json(const UPoly& p) { return p.coefficients(); }

inline json to_json(const CspReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    json j = {{"d", row.d}, {"fixed_points", row.fixed_points}};
    j["f_at_root"] = row.f_value ? json(*row.f_value) : json(nullptr);
    rows.push_back(j);
  }
  return {{"n", r.n},
          {"k", r.k},
          {"count", r.count},
          {"orbit_sizes", r.orbit_sizes},
          {"promotion_orbit_sizes", r.promotion_orbit_sizes},
          {"promotion_matches", r.promotion_matches},
          {"fixed_points_by_divisor", rows},
          {"f_mod_qn_minus_1", r.f_mod},
          {"orbit_mod_qn_minus_1", r.orbit_mod},
          {"verdict", r.holds ? "holds" : "fails"}};
}

inline json to_json(const SphereReport& r) {
  return {{"facets", r.num_facets},
          {"facet_size", r.facet_size},
          {"cone_points", to_json(r.cone_points)},
          {"sphere_dimension", r.dimension},
          {"checks",
           {{"cone_points_are_passive", r.cone_points_match_passive},
            {"pseudomanifold", r.pseudomanifold},
            {"connected", r.connected},
            {"euler_characteristic", r.euler_ok}}},
          {"euler_characteristic", r.euler_characteristic},
          {"expected_euler_characteristic", r.expected_euler},
          {"ok", r.ok()}};
}

inline json to_json(const BijectionTrace& t) {
  return {{"ne_filling", to_json(t.ne)}, {"pipe_dream", to_json(t.pipe_dream)}, {"biword", to_json(t.biword)},
          {"P", to_json(t.p)},           {"Q", to_json(t.q)},                   {"rpp", to_json(t.rpp)},
          {"fan", to_json(t.fan)},       {"se_filling", to_json(t.se)}};
}

inline json error_json(const Error& e) { return {{"error", std::string(to_string(e.code()))}, {"message", e.what()}}; }

// ---- parsing

inline BoxCoord box_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw Error(ErrorCode::InvalidInput, "a box is a pair [row, col]");
  return {j[0].get<int>(), j[1].get<int>()};
}

inline std::vector<BoxCoord> boxes_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::InvalidInput, "expected a list of boxes");
  std::vector<BoxCoord> out;
  for (const auto& b : j) out.push_back(box_from_json(b));
  return out;
}

/// Accepts a partition [l1, l2, ...], a list of boxes [[r, c], ...], or an
/// object with "rows" (partition) or "boxes".
inline Polyomino polyomino_from_json(const json& j) {
  if (j.is_object()) {
    if (j.contains("rows")) return ferrers_shape(j["rows"].get<Partition>());
    if (j.contains("boxes")) return classify(boxes_from_json(j["boxes"]));
    throw Error(ErrorCode::InvalidInput, "shape object needs \"rows\" or \"boxes\"");
  }
  if (!j.is_array() || j.empty()) throw Error(ErrorCode::EmptyShape, "empty shape");
  if (j[0].is_number_integer()) return ferrers_shape(j.get<Partition>());
  return classify(boxes_from_json(j));
}

inline Filling filling_from_json(const json& j) {
  if (!j.is_object() || !j.contains("shape") || !j.contains("marks"))
    throw Error(ErrorCode::InvalidInput, "filling needs \"shape\" and \"marks\"");
  return make_filling(polyomino_from_json(j["shape"]), boxes_from_json(j["marks"]));
}

inline Triangulation triangulation_from_json(int n, int k, const json& diagonals) {
  if (!diagonals.is_array()) throw Error(ErrorCode::InvalidInput, "diagonals must be a list of pairs");
  std::vector<Diagonal> ds;
  for (const auto& d : diagonals) {
    if (!d.is_array() || d.size() != 2) throw Error(ErrorCode::InvalidInput, "a diagonal is a pair [a, b]");
    ds.push_back(make_diagonal(d[0].get<int>(), d[1].get<int>()));
  }
  return make_triangulation(n, k, ds);
}

inline Tableau tableau_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::InvalidInput, "a tableau is a list of rows");
  return Tableau{j.get<std::vector<std::vector<int>>>()};
}

inline json parse_json_argument(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace moonfill
