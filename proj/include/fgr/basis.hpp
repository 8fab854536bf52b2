#ifndef FGR_BASIS_HPP_
#define FGR_BASIS_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <span>
#include <tuple>
#include <vector>

#include "fgr/core_graph.hpp"
#include "fgr/error.hpp"
#include "fgr/word.hpp"

namespace fgr {

// Spanning tree of a core graph together with the induced ordering of the
// non-tree edges. Non-tree edge j (1-based) is basis symbol j.
struct SpanningTree {
  std::vector<std::size_t> tree_edges;
  std::vector<std::size_t> nontree_edges;
  // BFS order of the vertices along the tree, and its inverse.
  std::vector<std::size_t> order;
  std::vector<std::size_t> position;
  // Tree path from the base to each vertex, as a word.
  std::vector<Word> path_to;
  // 0 for tree edges, j for the j-th non-tree edge.
  std::vector<int> symbol_of_edge;

  std::size_t basis_size() const noexcept { return nontree_edges.size(); }
};

// Word over the free basis attached to a spanning tree: symbol j > 0 stands
// for the j-th basis element, -j for its inverse.
struct BasisWord {
  std::size_t basis_rank = 0;
  std::vector<int> symbols;

  friend bool operator==(BasisWord const&, BasisWord const&) = default;
};

inline BasisWord make_basis_word(std::size_t basis_rank,
                                 std::vector<int> const& symbols) {
  for (int s : symbols) {
    if (s == 0 || static_cast<std::size_t>(std::abs(s)) > basis_rank) {
      throw InvalidAlphabet("basis symbol out of range");
    }
  }
  return {basis_rank, detail::free_reduce(symbols)};
}

inline IntVector exponent_sums(BasisWord const& w) {
  IntVector v(w.basis_rank, 0);
  for (int s : w.symbols) {
    auto& slot = v[static_cast<std::size_t>(std::abs(s)) - 1];
    slot = detail::checked_add(slot, s > 0 ? 1 : -1);
  }
  return v;
}

// Substitutes basis words for the symbols and reduces.
inline Word evaluate(BasisWord const& w, std::span<Word const> basis) {
  if (basis.size() != w.basis_rank) throw RankMismatch(basis.size(), w.basis_rank);
  if (basis.empty()) return Word::identity(1);
  std::size_t const rank = basis.front().rank();
  std::vector<int> raw;
  for (int s : w.symbols) {
    Word const& b = basis[static_cast<std::size_t>(std::abs(s)) - 1];
    if (s > 0) {
      raw.insert(raw.end(), b.begin(), b.end());
    } else {
      for (auto it = b.letters().rbegin(); it != b.letters().rend(); ++it) {
        raw.push_back(-*it);
      }
    }
  }
  return Word(rank, std::move(raw));
}

namespace detail {

// Fills order/position/path_to/nontree/symbol data once tree_edges is known.
inline SpanningTree finish_tree(CoreGraph const& g,
                                std::vector<std::size_t> tree_edges) {
  SpanningTree t;
  std::size_t const nv = g.vertex_count();
  std::vector<bool> in_tree(g.edges().size(), false);
  for (std::size_t e : tree_edges) in_tree[e] = true;

  t.position.assign(nv, npos);
  t.path_to.assign(nv, Word::identity(g.ambient_rank()));
  t.order.push_back(0);
  t.position[0] = 0;
  int const n = static_cast<int>(g.ambient_rank());
  for (std::size_t i = 0; i < t.order.size(); ++i) {
    std::size_t const v = t.order[i];
    for (int sign : {1, -1}) {
      for (int l = 1; l <= n; ++l) {
        std::size_t const e = sign > 0 ? g.out_edge(v, l) : g.in_edge(v, l);
        if (e == npos || !in_tree[e]) continue;
        std::size_t const w = sign > 0 ? g.edge(e).to : g.edge(e).from;
        if (t.position[w] != npos) continue;
        t.position[w] = t.order.size();
        t.order.push_back(w);
        t.path_to[w] = t.path_to[v] * Word::generator(g.ambient_rank(), sign * l);
      }
    }
  }
  if (t.order.size() != nv) throw InvalidArgument("edge set is not a spanning tree");

  // tree edges listed in the order their child vertex was reached
  auto child = [&](std::size_t e) {
    return std::max(t.position[g.edge(e).from], t.position[g.edge(e).to]);
  };
  std::sort(tree_edges.begin(), tree_edges.end(),
            [&](std::size_t a, std::size_t b) { return child(a) < child(b); });
  t.tree_edges = std::move(tree_edges);

  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    if (!in_tree[e]) t.nontree_edges.push_back(e);
  }
  std::sort(t.nontree_edges.begin(), t.nontree_edges.end(),
            [&](std::size_t a, std::size_t b) {
              Edge const& ea = g.edge(a);
              Edge const& eb = g.edge(b);
              auto key = [&](Edge const& e) {
                return std::tuple(t.position[e.from], e.label, t.position[e.to]);
              };
              return key(ea) < key(eb);
            });
  t.symbol_of_edge.assign(g.edges().size(), 0);
  for (std::size_t j = 0; j < t.nontree_edges.size(); ++j) {
    t.symbol_of_edge[t.nontree_edges[j]] = static_cast<int>(j + 1);
  }
  return t;
}

}  // namespace detail

// Default tree: BFS from the base, outgoing labels 1..n then incoming labels
// 1..n. An override must list exactly the edges of a spanning tree.
inline SpanningTree spanning_tree(
    CoreGraph const& g,
    std::optional<std::vector<Edge>> const& override_edges = std::nullopt) {
  std::vector<std::size_t> tree;
  if (override_edges) {
    if (override_edges->size() + 1 != g.vertex_count()) {
      throw InvalidArgument("spanning tree needs exactly |V|-1 edges");
    }
    std::vector<bool> used(g.edges().size(), false);
    for (Edge const& e : *override_edges) {
      std::size_t const i = g.find_edge(e);
      if (i == npos) throw InvalidArgument("tree edge not in graph");
      if (used[i]) throw InvalidArgument("duplicate tree edge");
      used[i] = true;
      tree.push_back(i);
    }
    // connectivity is checked in finish_tree; |V|-1 edges + connected = tree
  } else {
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<std::size_t> queue{0};
    seen[0] = true;
    int const n = static_cast<int>(g.ambient_rank());
    for (std::size_t i = 0; i < queue.size(); ++i) {
      std::size_t const v = queue[i];
      for (int sign : {1, -1}) {
        for (int l = 1; l <= n; ++l) {
          std::size_t const e = sign > 0 ? g.out_edge(v, l) : g.in_edge(v, l);
          if (e == npos) continue;
          std::size_t const w = sign > 0 ? g.edge(e).to : g.edge(e).from;
          if (seen[w]) continue;
          seen[w] = true;
          queue.push_back(w);
          tree.push_back(e);
        }
      }
    }
  }
  return detail::finish_tree(g, std::move(tree));
}

// Free basis read off the non-tree edges: path to origin, edge label, path
// back from the terminus.
inline std::vector<Word> basis(CoreGraph const& g, SpanningTree const& t) {
  std::vector<Word> out;
  out.reserve(t.nontree_edges.size());
  for (std::size_t e : t.nontree_edges) {
    Edge const& edge = g.edge(e);
    out.push_back(t.path_to[edge.from] *
                  Word::generator(g.ambient_rank(), edge.label) *
                  inverse(t.path_to[edge.to]));
  }
  return out;
}

inline std::vector<Word> basis(CoreGraph const& g) {
  return basis(g, spanning_tree(g));
}

// Expresses a member of the subgroup in the tree's basis by recording the
// non-tree edges crossed while reading `w` from the base.
inline BasisWord rewrite_in_basis(CoreGraph const& g, SpanningTree const& t,
                                  Word const& w) {
  if (w.rank() != g.ambient_rank()) throw RankMismatch(w.rank(), g.ambient_rank());
  std::vector<int> symbols;
  std::size_t v = g.base();
  for (int letter : w) {
    std::size_t const e = letter > 0 ? g.out_edge(v, letter) : g.in_edge(v, -letter);
    if (e == npos) throw NotAMember();
    if (int const s = t.symbol_of_edge[e]; s != 0) {
      symbols.push_back(letter > 0 ? s : -s);
    }
    v = letter > 0 ? g.edge(e).to : g.edge(e).from;
  }
  if (v != g.base()) throw NotAMember();
  return make_basis_word(t.basis_size(), symbols);
}

}  // namespace fgr

#endif  // FGR_BASIS_HPP_
