#ifndef FGR_CORE_GRAPH_HPP_
#define FGR_CORE_GRAPH_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <deque>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "fgr/error.hpp"
#include "fgr/word.hpp"

namespace fgr {

inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

// Directed edge labeled by a generator index 1..rank.
struct Edge {
  std::size_t from;
  std::size_t to;
  int label;

  friend bool operator==(Edge const&, Edge const&) = default;
  friend auto operator<=>(Edge const& a, Edge const& b) {
    if (auto c = a.from <=> b.from; c != 0) return c;
    if (auto c = a.label <=> b.label; c != 0) return c;
    return a.to <=> b.to;
  }
};

// Arbitrary based labeled digraph; input to fold().
struct LabeledGraph {
  std::size_t rank = 0;
  std::size_t vertex_count = 1;
  std::size_t base = 0;
  std::vector<Edge> edges;
};

// Folded, connected, based core graph (Stallings automaton). The base vertex
// is always 0. Vertex numbering is whatever the constructor was given; use
// canonicalize() for the BFS numbering that makes equality mean subgroup
// equality.
class CoreGraph {
 public:
  // Validates the invariants and throws InvalidGraph when one fails.
  static CoreGraph from_edges(std::size_t rank, std::size_t vertex_count,
                              std::vector<Edge> edges) {
    if (rank == 0 || rank > kMaxRank) throw InvalidGraph("bad ambient rank");
    if (vertex_count == 0) throw InvalidGraph("graph needs a base vertex");
    CoreGraph g(rank, vertex_count);
    std::sort(edges.begin(), edges.end());
    g.edges_ = std::move(edges);
    for (std::size_t i = 0; i < g.edges_.size(); ++i) {
      Edge const& e = g.edges_[i];
      if (e.label < 1 || static_cast<std::size_t>(e.label) > rank) {
        throw InvalidGraph("edge label out of range");
      }
      if (e.from >= vertex_count || e.to >= vertex_count) {
        throw InvalidGraph("edge endpoint out of range");
      }
      auto& out = g.out_[g.slot(e.from, e.label)];
      auto& in = g.in_[g.slot(e.to, e.label)];
      if (out != npos || in != npos) throw InvalidGraph("graph is not folded");
      out = i;
      in = i;
    }
    std::vector<std::size_t> degree(vertex_count, 0);
    for (Edge const& e : g.edges_) {
      ++degree[e.from];
      ++degree[e.to];
    }
    for (std::size_t v = 1; v < vertex_count; ++v) {
      if (degree[v] < 2) throw InvalidGraph("graph is not a core graph");
    }
    if (g.component_of_base().size() != vertex_count) {
      throw InvalidGraph("graph is not connected");
    }
    return g;
  }

  static CoreGraph trivial(std::size_t rank) { return from_edges(rank, 1, {}); }

  std::size_t ambient_rank() const noexcept { return rank_; }
  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t base() const noexcept { return 0; }
  std::vector<Edge> const& edges() const noexcept { return edges_; }
  Edge const& edge(std::size_t i) const { return edges_.at(i); }

  // Index of the edge leaving/entering v with the given label, or npos.
  std::size_t out_edge(std::size_t v, int label) const {
    return out_[slot(v, label)];
  }
  std::size_t in_edge(std::size_t v, int label) const {
    return in_[slot(v, label)];
  }

  // Edge index matching a (from, to, label) triple, or npos.
  std::size_t find_edge(Edge const& e) const {
    if (e.from >= vertex_count_ || e.label < 1 ||
        static_cast<std::size_t>(e.label) > rank_) {
      return npos;
    }
    std::size_t const i = out_edge(e.from, e.label);
    return i != npos && edges_[i].to == e.to ? i : npos;
  }

  // Vertex reached by reading a signed letter from v, or npos.
  std::size_t step(std::size_t v, int letter) const {
    if (letter > 0) {
      std::size_t const e = out_edge(v, letter);
      return e == npos ? npos : edges_[e].to;
    }
    std::size_t const e = in_edge(v, -letter);
    return e == npos ? npos : edges_[e].from;
  }

  // End of the path spelled by `w` from `start`, if the path exists.
  std::optional<std::size_t> trace(std::size_t start, Word const& w) const {
    if (w.rank() != rank_) throw RankMismatch(w.rank(), rank_);
    std::size_t v = start;
    for (int letter : w) {
      v = step(v, letter);
      if (v == npos) return std::nullopt;
    }
    return v;
  }

  friend bool operator==(CoreGraph const& a, CoreGraph const& b) {
    return a.rank_ == b.rank_ && a.vertex_count_ == b.vertex_count_ &&
           a.edges_ == b.edges_;
  }

 private:
  CoreGraph(std::size_t rank, std::size_t vertex_count)
      : rank_(rank),
        vertex_count_(vertex_count),
        out_(rank * vertex_count, npos),
        in_(rank * vertex_count, npos) {}

  std::size_t slot(std::size_t v, int label) const {
    return v * rank_ + static_cast<std::size_t>(label - 1);
  }

  std::vector<std::size_t> component_of_base() const {
    std::vector<bool> seen(vertex_count_, false);
    std::vector<std::size_t> order{0};
    seen[0] = true;
    for (std::size_t i = 0; i < order.size(); ++i) {
      std::size_t const v = order[i];
      for (int l = 1; l <= static_cast<int>(rank_); ++l) {
        for (std::size_t w : {step(v, l), step(v, -l)}) {
          if (w != npos && !seen[w]) {
            seen[w] = true;
            order.push_back(w);
          }
        }
      }
    }
    return order;
  }

  std::size_t rank_;
  std::size_t vertex_count_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> out_;
  std::vector<std::size_t> in_;
};

namespace detail {

// BFS order from the base: outgoing labels 1..n, then incoming labels 1..n.
inline std::vector<std::size_t> bfs_order(CoreGraph const& g) {
  std::vector<std::size_t> order{0};
  std::vector<bool> seen(g.vertex_count(), false);
  seen[0] = true;
  int const n = static_cast<int>(g.ambient_rank());
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::size_t const v = order[i];
    for (int sign : {1, -1}) {
      for (int l = 1; l <= n; ++l) {
        std::size_t const w = g.step(v, sign * l);
        if (w != npos && !seen[w]) {
          seen[w] = true;
          order.push_back(w);
        }
      }
    }
  }
  return order;
}

// Drops everything outside the base component, then repeatedly removes
// non-base vertices of degree <= 1. Returns vertex count and renumbered
// edges with base 0 (numbering is not yet canonical).
inline std::pair<std::size_t, std::vector<Edge>> trim_to_core(
    std::size_t vertex_count, std::size_t base, std::vector<Edge> edges) {
  std::vector<std::vector<std::size_t>> incident(vertex_count);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    incident[edges[i].from].push_back(i);
    incident[edges[i].to].push_back(i);
  }
  std::vector<bool> reach(vertex_count, false);
  std::vector<std::size_t> stack{base};
  reach[base] = true;
  while (!stack.empty()) {
    std::size_t const v = stack.back();
    stack.pop_back();
    for (std::size_t i : incident[v]) {
      for (std::size_t w : {edges[i].from, edges[i].to}) {
        if (!reach[w]) {
          reach[w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  std::vector<bool> edge_alive(edges.size());
  std::vector<std::size_t> degree(vertex_count, 0);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    edge_alive[i] = reach[edges[i].from];
    if (edge_alive[i]) {
      ++degree[edges[i].from];
      ++degree[edges[i].to];
    }
  }
  std::vector<bool> alive = reach;
  std::deque<std::size_t> queue;
  for (std::size_t v = 0; v < vertex_count; ++v) {
    if (alive[v] && v != base && degree[v] <= 1) queue.push_back(v);
  }
  while (!queue.empty()) {
    std::size_t const v = queue.front();
    queue.pop_front();
    if (!alive[v]) continue;
    alive[v] = false;
    for (std::size_t i : incident[v]) {
      if (!edge_alive[i]) continue;
      edge_alive[i] = false;
      --degree[edges[i].from];
      --degree[edges[i].to];
      std::size_t const other = edges[i].from == v ? edges[i].to : edges[i].from;
      if (alive[other] && other != base && degree[other] <= 1) {
        queue.push_back(other);
      }
    }
  }
  std::vector<std::size_t> id(vertex_count, npos);
  id[base] = 0;
  std::size_t next = 1;
  for (std::size_t v = 0; v < vertex_count; ++v) {
    if (alive[v] && v != base) id[v] = next++;
  }
  std::vector<Edge> kept;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edge_alive[i]) {
      kept.push_back({id[edges[i].from], id[edges[i].to], edges[i].label});
    }
  }
  return {next, std::move(kept)};
}

}  // namespace detail

// Renumbers vertices in BFS order from the base (outgoing labels 1..n first,
// then incoming labels 1..n). Two core graphs present the same subgroup iff
// their canonical forms compare equal.
inline CoreGraph canonicalize(CoreGraph const& g) {
  std::vector<std::size_t> const order = detail::bfs_order(g);
  std::vector<std::size_t> id(g.vertex_count(), npos);
  for (std::size_t i = 0; i < order.size(); ++i) id[order[i]] = i;
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (Edge const& e : g.edges()) edges.push_back({id[e.from], id[e.to], e.label});
  return CoreGraph::from_edges(g.ambient_rank(), g.vertex_count(),
                               std::move(edges));
}

inline bool same_subgroup(CoreGraph const& a, CoreGraph const& b) {
  return canonicalize(a) == canonicalize(b);
}

// Stallings folding. The fixpoint loop identifies the termini (resp. origins)
// of any two edges sharing an origin (resp. terminus) and label; the result
// is trimmed to the core of the base component and canonicalized, so it does
// not depend on the order of the input edges.
inline CoreGraph fold(LabeledGraph const& input) {
  std::size_t const n = input.rank;
  if (n == 0 || n > kMaxRank) throw InvalidGraph("bad ambient rank");
  if (input.base >= input.vertex_count) throw InvalidGraph("base out of range");
  for (Edge const& e : input.edges) {
    if (e.from >= input.vertex_count || e.to >= input.vertex_count ||
        e.label < 1 || static_cast<std::size_t>(e.label) > n) {
      throw InvalidGraph("malformed edge");
    }
  }
  std::vector<std::size_t> parent(input.vertex_count);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&parent](std::size_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  auto unite = [&](std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  };
  auto slot = [n](std::size_t v, int label) {
    return v * n + static_cast<std::size_t>(label - 1);
  };

  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::size_t> out(input.vertex_count * n, npos);
    std::vector<std::size_t> in(input.vertex_count * n, npos);
    for (Edge const& e : input.edges) {
      std::size_t const o = find(e.from);
      std::size_t const t = find(e.to);
      auto& os = out[slot(o, e.label)];
      if (os == npos) {
        os = t;
      } else {
        changed |= unite(os, t);
      }
      auto& is = in[slot(find(e.to), e.label)];
      if (is == npos) {
        is = find(e.from);
      } else {
        changed |= unite(is, e.from);
      }
    }
  }

  std::vector<Edge> edges;
  for (Edge const& e : input.edges) {
    edges.push_back({find(e.from), find(e.to), e.label});
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  auto [count, core] =
      detail::trim_to_core(input.vertex_count, find(input.base), std::move(edges));
  return canonicalize(CoreGraph::from_edges(n, count, std::move(core)));
}

// Wedge of the generator loops at the base, folded. Identity generators are
// ignored; if nothing remains the trivial (one vertex, no edges) graph is
// returned.
inline CoreGraph from_generators(std::size_t rank,
                                 std::vector<Word> const& generators) {
  LabeledGraph wedge{rank, 1, 0, {}};
  for (Word const& g : generators) {
    if (g.rank() != rank) throw RankMismatch(g.rank(), rank);
    if (g.empty()) continue;
    std::size_t v = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      std::size_t const w = i + 1 == g.size() ? 0 : wedge.vertex_count++;
      int const letter = g[i];
      if (letter > 0) {
        wedge.edges.push_back({v, w, letter});
      } else {
        wedge.edges.push_back({w, v, -letter});
      }
      v = w;
    }
  }
  return fold(wedge);
}

inline bool contains(CoreGraph const& g, Word const& w) {
  auto const end = g.trace(g.base(), w);
  return end && *end == g.base();
}

// Rank of the represented subgroup: |E| - |V| + 1.
inline std::size_t rank(CoreGraph const& g) {
  return g.edges().size() + 1 - g.vertex_count();
}

inline bool is_covering(CoreGraph const& g) {
  return g.edges().size() == g.vertex_count() * g.ambient_rank();
}

// Index in the ambient free group; nullopt means infinite.
inline std::optional<std::size_t> index(CoreGraph const& g) {
  // Folded + |E| = n|V| forces every vertex to have one in- and one
  // out-edge per label.
  if (is_covering(g)) return g.vertex_count();
  return std::nullopt;
}

// The same subgroup viewed in a free group of larger rank (letters kept).
inline CoreGraph embed(CoreGraph const& g, std::size_t new_rank) {
  if (new_rank < g.ambient_rank()) throw RankMismatch(new_rank, g.ambient_rank());
  return CoreGraph::from_edges(new_rank, g.vertex_count(), g.edges());
}

}  // namespace fgr

#endif  // FGR_CORE_GRAPH_HPP_
