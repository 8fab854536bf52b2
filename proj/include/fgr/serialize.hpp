#ifndef FGR_SERIALIZE_HPP_
#define FGR_SERIALIZE_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fgr/abelian.hpp"
#include "fgr/basis.hpp"
#include "fgr/core_graph.hpp"
#include "fgr/error.hpp"
#include "fgr/retracts.hpp"
#include "fgr/word.hpp"

namespace fgr {

using json = nlohmann::json;

// { "rank": n, "vertices": V, "base": 0, "edges": [{"from","to","label"}] }
// Edges are listed in stored (from, label) order; callers canonicalize first
// when canonical numbering is wanted.
inline json graph_to_json(CoreGraph const& g) {
  json edges = json::array();
  for (Edge const& e : g.edges()) {
    edges.push_back({{"from", e.from}, {"to", e.to}, {"label", e.label}});
  }
  return {{"rank", g.ambient_rank()},
          {"vertices", g.vertex_count()},
          {"base", 0},
          {"edges", std::move(edges)}};
}

inline CoreGraph graph_from_json(json const& j) {
  try {
    if (j.at("base").get<std::size_t>() != 0) {
      throw InvalidGraph("graph JSON must use base 0");
    }
    std::vector<Edge> edges;
    for (auto const& e : j.at("edges")) {
      edges.push_back({e.at("from").get<std::size_t>(), e.at("to").get<std::size_t>(),
                       e.at("label").get<int>()});
    }
    return CoreGraph::from_edges(j.at("rank").get<std::size_t>(),
                                 j.at("vertices").get<std::size_t>(), std::move(edges));
  } catch (json::exception const& ex) {
    throw InvalidGraph(std::string("malformed graph JSON: ") + ex.what());
  }
}

inline json words_to_json(std::vector<Word> const& words) {
  json out = json::array();
  for (Word const& w : words) out.push_back(render(w));
  return out;
}

inline json basis_word_to_json(BasisWord const& w) { return w.symbols; }

inline json abelian_to_json(AbelianVector const& v) {
  return {{"basis", v.basis == BasisTag::ambient ? "ambient" : "subgroup"},
          {"entries", v.entries}};
}

inline json report_to_json(IntersectionReport const& r) {
  json j = {{"rank_H", r.rank_H},
            {"rank_R", r.rank_R},
            {"rank_intersection", r.rank_intersection},
            {"intersection_basis", words_to_json(r.intersection_basis)},
            {"smallest_power", nullptr},
            {"intersection_visible_in_H", nullptr},
            {"verdict", std::string(to_string(r.retract_verdict))}};
  if (r.smallest_power) j["smallest_power"] = *r.smallest_power;
  if (r.intersection_visible_in_H) j["intersection_visible_in_H"] = *r.intersection_visible_in_H;
  return j;
}

inline json retract_to_json(RetractPresentation const& r) {
  return {{"n", r.ambient_rank()},
          {"section_images", words_to_json(r.section_images())},
          {"retraction_images", words_to_json(r.retraction_images())}};
}

}  // namespace fgr

#endif  // FGR_SERIALIZE_HPP_
