#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "fgr/fgr.hpp"
#include "test_support.hpp"

namespace fgr {
namespace {

using testing::B;
using testing::W;
using testing::Ws;

CoreGraph h3() { return from_generators(2, Ws({"a", "baBB", "bbaB", "bbb"})); }
CoreGraph k3() { return from_generators(2, Ws({"a", "baBB", "bbaB"})); }

TEST(FromGenerators, WholeGroup) {
  CoreGraph const g = from_generators(2, Ws({"a", "b"}));
  EXPECT_EQ(g.vertex_count(), 1U);
  EXPECT_EQ(g.edges().size(), 2U);
  EXPECT_EQ(rank(g), 2U);
  EXPECT_EQ(index(g), 1U);
  EXPECT_EQ(basis(g), Ws({"a", "b"}));
}

TEST(FromGenerators, H3HasIndexThree) {
  CoreGraph const g = h3();
  EXPECT_EQ(g.vertex_count(), 3U);
  EXPECT_EQ(g.edges().size(), 6U);
  EXPECT_EQ(index(g), 3U);
  EXPECT_EQ(rank(g), 4U);
  EXPECT_EQ(canonicalize(g), canonicalize(gamma_m(3)));
}

TEST(FromGenerators, KHasInfiniteIndex) {
  CoreGraph const g = k3();
  EXPECT_EQ(g.vertex_count(), 3U);
  EXPECT_EQ(g.edges().size(), 5U);
  EXPECT_EQ(index(g), std::nullopt);
  EXPECT_EQ(rank(g), 3U);
}

TEST(FromGenerators, TrivialConventions) {
  CoreGraph const g = from_generators(3, {Word::identity(3), W("aA", 3)});
  EXPECT_EQ(g, CoreGraph::trivial(3));
  EXPECT_EQ(rank(g), 0U);
  EXPECT_EQ(index(g), std::nullopt);
  EXPECT_THROW(from_generators(3, {W("a")}), RankMismatch);
}

TEST(FromGenerators, BaseOfDegreeOneIsKept) {
  CoreGraph const g = from_generators(2, Ws({"bab^-1"}));
  EXPECT_EQ(g.vertex_count(), 2U);
  EXPECT_TRUE(contains(g, W("baB")));
  EXPECT_FALSE(contains(g, W("a")));
}

TEST(Fold, Examples) {
  // already folded input is unchanged up to canonical numbering
  CoreGraph const gamma = gamma_m(5);
  EXPECT_EQ(fold({2, 5, 0, gamma.edges()}), canonicalize(gamma));

  // two a-edges out of the base with distinct termini get merged
  CoreGraph const merged = fold({2, 3, 0, {{0, 1, 1}, {0, 2, 1}, {1, 0, 2}, {2, 0, 2}}});
  EXPECT_EQ(merged.vertex_count(), 2U);
  EXPECT_EQ(merged.edges().size(), 2U);
  EXPECT_TRUE(same_subgroup(merged, from_generators(2, Ws({"ab"}))));

  // <a^2, a> = <a>
  CoreGraph const single = from_generators(2, Ws({"aa", "a"}));
  EXPECT_EQ(single.vertex_count(), 1U);
  EXPECT_EQ(single.edges().size(), 1U);
}

TEST(Fold, InvalidInput) {
  EXPECT_THROW(fold({2, 2, 0, {{0, 5, 1}}}), InvalidGraph);
  EXPECT_THROW(fold({2, 2, 0, {{0, 1, 3}}}), InvalidGraph);
  EXPECT_THROW(fold({2, 1, 1, {}}), InvalidGraph);
}

TEST(CoreGraph, FromEdgesValidates) {
  EXPECT_THROW(CoreGraph::from_edges(2, 2, {{0, 1, 1}, {0, 0, 1}, {1, 0, 2}}), InvalidGraph);
  EXPECT_THROW(CoreGraph::from_edges(2, 2, {{0, 0, 1}, {1, 1, 1}}), InvalidGraph);
  EXPECT_THROW(CoreGraph::from_edges(2, 2, {{0, 1, 1}}), InvalidGraph);
  EXPECT_NO_THROW(CoreGraph::from_edges(2, 2, {{0, 1, 1}, {1, 1, 2}}));
}

TEST(Contains, H3Membership) {
  CoreGraph const g = h3();
  EXPECT_TRUE(contains(g, W("bbb")));
  EXPECT_FALSE(contains(g, W("a[a,b]")));
  EXPECT_TRUE(contains(g, W("(a[a,b])^2")));
  EXPECT_TRUE(contains(g, Word::identity(2)));
  EXPECT_THROW(contains(g, W("a", 3)), RankMismatch);
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(k3()), 3U);
  for (std::size_t m = 2; m <= 10; ++m) EXPECT_EQ(rank(gamma_m(m)), m + 1);
}

TEST(SpanningTree, SingleVertex) {
  CoreGraph const g = from_generators(2, Ws({"a", "b"}));
  SpanningTree const t = spanning_tree(g);
  EXPECT_TRUE(t.tree_edges.empty());
  EXPECT_EQ(t.nontree_edges.size(), 2U);
}

TEST(SpanningTree, DefaultBfsOnGamma3) {
  // hand BFS from v0: out-a is the loop e0, out-b reaches v1 by f0, in-a is
  // e0 again, in-b reaches v2 by f2 (v2 -> v0)
  CoreGraph const g = gamma_m(3);
  SpanningTree const t = spanning_tree(g);
  std::vector<Edge> tree;
  for (std::size_t e : t.tree_edges) tree.push_back(g.edge(e));
  EXPECT_EQ(tree, (std::vector<Edge>{{0, 1, 2}, {2, 0, 2}}));
}

TEST(SpanningTree, OverrideValidation) {
  CoreGraph const g = gamma_m(3);
  EXPECT_NO_THROW(spanning_tree(g, std::vector<Edge>{{0, 1, 2}, {1, 2, 2}}));
  EXPECT_THROW(spanning_tree(g, std::vector<Edge>{{0, 1, 2}}), InvalidArgument);
  EXPECT_THROW(spanning_tree(g, std::vector<Edge>{{0, 1, 2}, {0, 0, 1}}), InvalidArgument);
  EXPECT_THROW(spanning_tree(g, std::vector<Edge>{{0, 1, 2}, {0, 2, 2}}), InvalidArgument);
  EXPECT_THROW(spanning_tree(g, std::vector<Edge>{{0, 1, 2}, {0, 1, 2}}), InvalidArgument);
}

TEST(Basis, H3BPathTree) {
  auto const h = h_m_graph(3);
  EXPECT_EQ(basis(h.graph, h.tree), Ws({"a", "baBB", "bbaB", "bbb"}));
}

TEST(Basis, H9BPathTree) {
  auto const h = h_m_graph(9);
  std::vector<Word> expected{W("a")};
  for (int i = 1; i <= 8; ++i) {
    expected.push_back(power(W("b"), i) * W("a") * power(W("B"), 9 - i));
  }
  expected.push_back(power(W("b"), 9));
  EXPECT_EQ(basis(h.graph, h.tree), expected);
  EXPECT_EQ(render(expected[8]), "bbbbbbbbaB");
}

TEST(Rewrite, Examples) {
  auto const h = h_m_graph(3);
  EXPECT_EQ(rewrite_in_basis(h.graph, h.tree, W("(a[a,b])^2")), B(4, {1, 1, -3, 2, 3, -2}));
  auto const h9 = h_m_graph(9);
  EXPECT_EQ(rewrite_in_basis(h9.graph, h9.tree, W("(a[a,b]^4)^2")),
            B(10, {1, 1, -9, 8, -7, 6, -5, 4, -3, 2, 9, -8, 7, -6, 5, -4, 3, -2}));
  EXPECT_TRUE(rewrite_in_basis(h.graph, h.tree, Word::identity(2)).symbols.empty());
  EXPECT_THROW(rewrite_in_basis(h.graph, h.tree, W("a[a,b]")), NotAMember);
  EXPECT_THROW(rewrite_in_basis(k3(), spanning_tree(k3()), W("b")), NotAMember);
}

TEST(Canonicalize, IdempotentAndRelabelInvariant) {
  CoreGraph const g = gamma_m(7);
  CoreGraph const c = canonicalize(g);
  EXPECT_EQ(canonicalize(c), c);
  // reverse the non-base vertex ids
  std::vector<Edge> relabeled;
  for (Edge const& e : g.edges()) {
    auto f = [](std::size_t v) { return v == 0 ? 0 : 7 - v; };
    relabeled.push_back({f(e.from), f(e.to), e.label});
  }
  CoreGraph const r = CoreGraph::from_edges(2, 7, relabeled);
  EXPECT_FALSE(r == g);
  EXPECT_EQ(canonicalize(r), c);
}

// --- properties over random instances -----------------------------------

std::vector<Word> random_gens(Rng& rng, std::size_t n) {
  std::vector<Word> gens;
  std::size_t const count = uniform_index(rng, 1, 4);
  for (std::size_t i = 0; i < count; ++i) gens.push_back(random_word(rng, n, 12));
  return gens;
}

Word random_product(Rng& rng, std::vector<Word> const& gens) {
  Word u = Word::identity(gens.front().rank());
  std::size_t const len = uniform_index(rng, 0, 6);
  for (std::size_t i = 0; i < len; ++i) {
    Word const& g = gens[uniform_index(rng, 0, gens.size() - 1)];
    u = u * (coin(rng) ? g : inverse(g));
  }
  return u;
}

// Kruskal over shuffled edges.
std::vector<Edge> random_tree(Rng& rng, CoreGraph const& g) {
  std::vector<Edge> edges = g.edges();
  std::shuffle(edges.begin(), edges.end(), rng);
  std::vector<std::size_t> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v];
    return v;
  };
  std::vector<Edge> tree;
  for (Edge const& e : edges) {
    std::size_t a = find(e.from), b = find(e.to);
    if (a == b) continue;
    parent[a] = b;
    tree.push_back(e);
  }
  return tree;
}

TEST(StallingsProperty, MembershipNielsenAndRoundTrip) {
  Rng rng = derive_rng(2024, 0);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t const n = uniform_index(rng, 2, 4);
    auto const gens = random_gens(rng, n);
    CoreGraph const g = from_generators(n, gens);
    EXPECT_LE(rank(g), gens.size());
    for (Word const& s : gens) EXPECT_TRUE(contains(g, s));

    SpanningTree const t_default = spanning_tree(g);
    SpanningTree const t_random = spanning_tree(g, random_tree(rng, g));
    for (SpanningTree const* t : {&t_default, &t_random}) {
      auto const b = basis(g, *t);
      ASSERT_EQ(b.size(), rank(g));
      // the basis generates the same subgroup
      if (!b.empty()) {
        EXPECT_TRUE(same_subgroup(from_generators(n, b), g));
      }
      for (int i = 0; i < 20; ++i) {
        Word const w = random_product(rng, gens);
        ASSERT_TRUE(contains(g, w));
        EXPECT_EQ(evaluate(rewrite_in_basis(g, *t, w), b), w);
      }
    }
  }
}

TEST(StallingsProperty, SchreierFormula) {
  Rng rng = derive_rng(99, 0);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t const n = uniform_index(rng, 2, 4);
    CoreGraph const g = random_finite_index_subgroup(rng, n, 12);
    ASSERT_TRUE(index(g).has_value());
    EXPECT_EQ(rank(g), *index(g) * (n - 1) + 1);
  }
}

TEST(StallingsProperty, FoldConfluence) {
  Rng rng = derive_rng(5, 0);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t const n = uniform_index(rng, 2, 3);
    auto const gens = random_gens(rng, n);
    CoreGraph const reference = from_generators(n, gens);
    // wedge of loops, edges shuffled and vertices renamed
    LabeledGraph wedge{n, 1, 0, {}};
    for (Word const& g : gens) {
      std::size_t v = 0;
      for (std::size_t i = 0; i < g.size(); ++i) {
        std::size_t const w = i + 1 == g.size() ? 0 : wedge.vertex_count++;
        if (g[i] > 0) {
          wedge.edges.push_back({v, w, g[i]});
        } else {
          wedge.edges.push_back({w, v, -g[i]});
        }
        v = w;
      }
    }
    std::vector<std::size_t> rename(wedge.vertex_count);
    std::iota(rename.begin(), rename.end(), std::size_t{0});
    std::shuffle(rename.begin(), rename.end(), rng);
    for (Edge& e : wedge.edges) e = {rename[e.from], rename[e.to], e.label};
    wedge.base = rename[0];
    std::shuffle(wedge.edges.begin(), wedge.edges.end(), rng);
    EXPECT_EQ(fold(wedge), reference);
  }
}

}  // namespace
}  // namespace fgr
