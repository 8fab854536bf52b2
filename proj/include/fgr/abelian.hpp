#ifndef FGR_ABELIAN_HPP_
#define FGR_ABELIAN_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "fgr/basis.hpp"
#include "fgr/core_graph.hpp"
#include "fgr/covering.hpp"
#include "fgr/error.hpp"
#include "fgr/word.hpp"

namespace fgr {

enum class BasisTag { ambient, subgroup };

struct AbelianVector {
  BasisTag basis = BasisTag::ambient;
  IntVector entries;

  friend bool operator==(AbelianVector const&, AbelianVector const&) = default;
};

// One coefficient per edge of a core graph.
using ChainVector = std::vector<std::int64_t>;

// rows x cols integer matrix, row-major.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> data;

  std::int64_t& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  std::int64_t at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  friend bool operator==(IntMatrix const&, IntMatrix const&) = default;
};

inline IntVector multiply(IntMatrix const& m, IntVector const& v) {
  if (v.size() != m.cols) throw RankMismatch(v.size(), m.cols);
  IntVector out(m.rows, 0);
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) {
      out[r] = detail::checked_add(out[r], detail::checked_mul(m.at(r, c), v[c]));
    }
  }
  return out;
}

inline bool is_visible_ambient(Word const& w) { return is_primitive(sigma(w)); }

inline AbelianVector abelianize_in_subgroup(CoreGraph const& g,
                                            SpanningTree const& t,
                                            Word const& w) {
  return {BasisTag::subgroup, exponent_sums(rewrite_in_basis(g, t, w))};
}

// Visibility is basis-independent, so the tree only fixes coordinates.
inline bool is_visible_in_subgroup(CoreGraph const& g, SpanningTree const& t,
                                   Word const& w) {
  return is_primitive(abelianize_in_subgroup(g, t, w).entries);
}

// Signed edge counts of the path spelled by `w` from `start`.
inline ChainVector chain_of_path(CoreGraph const& g, std::size_t start,
                                 Word const& w) {
  ChainVector chain(g.edges().size(), 0);
  std::size_t v = start;
  for (int letter : w) {
    std::size_t const e = letter > 0 ? g.out_edge(v, letter) : g.in_edge(v, -letter);
    if (e == npos) throw InvalidArgument("path leaves the graph");
    chain[e] = detail::checked_add(chain[e], letter > 0 ? 1 : -1);
    v = letter > 0 ? g.edge(e).to : g.edge(e).from;
  }
  return chain;
}

// Sum of entering minus leaving coefficients at each vertex; zero for cycles.
inline IntVector boundary(CoreGraph const& g, ChainVector const& chain) {
  IntVector out(g.vertex_count(), 0);
  for (std::size_t e = 0; e < chain.size(); ++e) {
    out[g.edge(e).to] = detail::checked_add(out[g.edge(e).to], chain[e]);
    out[g.edge(e).from] = detail::checked_add(out[g.edge(e).from], -chain[e]);
  }
  return out;
}

// Transfer into the abelianized subgroup. For each cycle of the coset
// permutation of `w`, `representative` picks a vertex v on it; the cycle
// contributes the class of path(v) w^len path(v)^-1.
inline AbelianVector transfer(
    CoreGraph const& g, SpanningTree const& t, Word const& w,
    std::function<std::size_t(std::vector<std::size_t> const&)> const& representative) {
  Permutation const perm = coset_permutation(g, w);
  IntVector total(t.basis_size(), 0);
  for (auto const& cycle : perm.cycles()) {
    std::size_t const v = representative(cycle);
    Word const loop = t.path_to[v] * power(w, static_cast<std::int64_t>(cycle.size())) *
                      inverse(t.path_to[v]);
    total = add(total, abelianize_in_subgroup(g, t, loop).entries);
  }
  return {BasisTag::subgroup, std::move(total)};
}

// Cycle representatives are the minimal vertex ids.
inline AbelianVector transfer(CoreGraph const& g, SpanningTree const& t,
                              Word const& w) {
  return transfer(g, t, w, [](std::vector<std::size_t> const& c) { return c.front(); });
}

// Matrix of the chain map sending the lift of generator i at the base to
// e_i and every other edge to 0, restricted to cycles and written in the
// tree's basis (column j = image of basis element j).
inline IntMatrix phi_matrix(CoreGraph const& g, SpanningTree const& t) {
  if (!is_covering(g)) throw NotACovering();
  std::size_t const n = g.ambient_rank();
  std::vector<std::size_t> lift(n);
  for (std::size_t i = 0; i < n; ++i) {
    lift[i] = g.out_edge(g.base(), static_cast<int>(i + 1));
    if (lift[i] == npos) throw NotACovering();
  }
  std::vector<Word> const b = basis(g, t);
  IntMatrix m{n, b.size(), std::vector<std::int64_t>(n * b.size(), 0)};
  for (std::size_t j = 0; j < b.size(); ++j) {
    ChainVector const chain = chain_of_path(g, g.base(), b[j]);
    for (std::size_t i = 0; i < n; ++i) m.at(i, j) = chain[lift[i]];
  }
  return m;
}

}  // namespace fgr

#endif  // FGR_ABELIAN_HPP_
