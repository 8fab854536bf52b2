#ifndef FGR_COVERING_HPP_
#define FGR_COVERING_HPP_

#include <cstddef>
#include <vector>

#include "fgr/core_graph.hpp"
#include "fgr/error.hpp"
#include "fgr/permutation.hpp"
#include "fgr/word.hpp"

namespace fgr {

// Coset graph of a transitive action: generator i sends point p to
// perms[i-1](p). The stabilizer of `base_point` is the represented subgroup;
// the result is canonicalized, so the base point becomes vertex 0.
inline CoreGraph schreier_graph(std::size_t rank,
                                std::vector<Permutation> const& perms,
                                std::size_t base_point) {
  if (perms.size() != rank) throw RankMismatch(perms.size(), rank);
  if (perms.empty()) throw InvalidArgument("need at least one permutation");
  std::size_t const degree = perms.front().degree();
  for (auto const& p : perms) {
    if (p.degree() != degree) throw RankMismatch(p.degree(), degree);
  }
  if (base_point >= degree) throw InvalidArgument("base point out of range");
  if (!is_transitive(perms, degree)) throw NotConnected();

  // swap base_point and 0 so the base is vertex 0
  auto relabel = [&](std::size_t p) {
    return p == base_point ? 0 : p == 0 ? base_point : p;
  };
  std::vector<Edge> edges;
  edges.reserve(rank * degree);
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t p = 0; p < degree; ++p) {
      edges.push_back({relabel(p), relabel(perms[i](p)), static_cast<int>(i + 1)});
    }
  }
  return canonicalize(CoreGraph::from_edges(rank, degree, std::move(edges)));
}

// Permutation of the vertices induced by reading `w`: v maps to the end of
// the lift of w starting at v. Composition is left to right, so
// coset_permutation(uv) = coset_permutation(u).then(coset_permutation(v)).
inline Permutation coset_permutation(CoreGraph const& g, Word const& w) {
  if (!is_covering(g)) throw NotACovering();
  if (w.rank() != g.ambient_rank()) throw RankMismatch(w.rank(), g.ambient_rank());
  std::vector<std::size_t> images(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) images[v] = *g.trace(v, w);
  return Permutation(std::move(images));
}

// Generator actions of a covering graph; inverse of schreier_graph.
inline std::vector<Permutation> generator_permutations(CoreGraph const& g) {
  std::vector<Permutation> out;
  for (std::size_t l = 1; l <= g.ambient_rank(); ++l) {
    out.push_back(coset_permutation(g, Word::generator(g.ambient_rank(),
                                                       static_cast<int>(l))));
  }
  return out;
}

}  // namespace fgr

#endif  // FGR_COVERING_HPP_
