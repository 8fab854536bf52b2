#ifndef FGR_PULLBACK_HPP_
#define FGR_PULLBACK_HPP_

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "fgr/core_graph.hpp"
#include "fgr/error.hpp"

namespace fgr {

// Fiber product of two core graphs restricted to the component of
// (base, base) and trimmed to its core; presents the intersection of the two
// subgroups. Pairs are discovered lazily from (base, base), so unreachable
// parts of the full product are never built.
inline CoreGraph pullback(CoreGraph const& a, CoreGraph const& b) {
  if (a.ambient_rank() != b.ambient_rank()) {
    throw RankMismatch(a.ambient_rank(), b.ambient_rank());
  }
  int const n = static_cast<int>(a.ambient_rank());
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> id;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  auto intern = [&](std::size_t u, std::size_t v) {
    auto [it, inserted] = id.try_emplace({u, v}, pairs.size());
    if (inserted) pairs.emplace_back(u, v);
    return it->second;
  };
  intern(a.base(), b.base());
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto const [u, v] = pairs[i];
    for (int l = 1; l <= n; ++l) {
      std::size_t const ua = a.step(u, l);
      std::size_t const vb = b.step(v, l);
      if (ua != npos && vb != npos) edges.push_back({i, intern(ua, vb), l});
      // incoming edges only need to discover vertices; the edge itself is
      // recorded from its origin
      std::size_t const ua_in = a.step(u, -l);
      std::size_t const vb_in = b.step(v, -l);
      if (ua_in != npos && vb_in != npos) intern(ua_in, vb_in);
    }
  }
  auto [count, core] = detail::trim_to_core(pairs.size(), 0, std::move(edges));
  return canonicalize(
      CoreGraph::from_edges(a.ambient_rank(), count, std::move(core)));
}

}  // namespace fgr

#endif  // FGR_PULLBACK_HPP_
