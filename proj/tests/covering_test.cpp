#include <gtest/gtest.h>

#include "fgr/fgr.hpp"
#include "test_support.hpp"

namespace fgr {
namespace {

using testing::brute_force_lift;
using testing::W;
using testing::Ws;

TEST(Pullback, DiagonalAndExample) {
  CoreGraph const g = gamma_m(5);
  EXPECT_EQ(pullback(g, g), canonicalize(g));

  CoreGraph const h3 = from_generators(2, Ws({"a", "baBB", "bbaB", "bbb"}));
  CoreGraph const r = from_generators(2, {w_k(1)});
  CoreGraph const meet = pullback(h3, r);
  EXPECT_EQ(rank(meet), 1U);
  EXPECT_EQ(basis(meet), std::vector<Word>{power(w_k(1), 2)});
}

TEST(Pullback, TrivialIntersection) {
  CoreGraph const a = from_generators(2, Ws({"a"}));
  CoreGraph const b = from_generators(2, Ws({"b"}));
  EXPECT_EQ(pullback(a, b), CoreGraph::trivial(2));
  EXPECT_THROW(pullback(a, from_generators(3, Ws({"c"}, 3))), RankMismatch);
}

TEST(PullbackProperty, MembershipMatchesBothFactors) {
  Rng rng = derive_rng(17, 0);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t const n = uniform_index(rng, 2, 3);
    CoreGraph const a = coin(rng) ? random_finite_index_subgroup(rng, n, 6)
                                  : from_generators(n, {random_word(rng, n, 6), random_word(rng, n, 6)});
    CoreGraph const b = random_finite_index_subgroup(rng, n, 6);
    CoreGraph const meet = pullback(a, b);
    EXPECT_EQ(meet, pullback(b, a));

    std::vector<Word> pool;
    for (auto const* g : {&a, &b, &meet}) {
      auto const gens = basis(*g);
      for (int i = 0; i < 10 && !gens.empty(); ++i) {
        pool.push_back(gens[uniform_index(rng, 0, gens.size() - 1)] *
                       inverse(gens[uniform_index(rng, 0, gens.size() - 1)]) *
                       gens[uniform_index(rng, 0, gens.size() - 1)]);
      }
    }
    for (int i = 0; i < 70; ++i) pool.push_back(random_word(rng, n, 10));
    for (Word const& w : pool) {
      EXPECT_EQ(contains(meet, w), contains(a, w) && contains(b, w)) << render(w);
    }
  }
}

TEST(Schreier, DihedralCosetsGiveGamma3) {
  // cosets <t>, <t>s, <t>s^2: t sends <t>s^j to <t>s^-j, s adds one
  std::vector<Permutation> perms{Permutation({0, 2, 1}), Permutation({1, 2, 0})};
  EXPECT_EQ(schreier_graph(2, perms, 0), canonicalize(gamma_m(3)));
}

TEST(Schreier, TrivialAndRegular) {
  auto const whole = schreier_graph(2, {Permutation::identity(1), Permutation::identity(1)}, 0);
  EXPECT_EQ(whole, from_generators(2, Ws({"a", "b"})));

  // regular action of Z/2 x Z/2
  std::vector<Permutation> klein{Permutation({1, 0, 3, 2}), Permutation({2, 3, 0, 1})};
  CoreGraph const g = schreier_graph(2, klein, 0);
  EXPECT_EQ(index(g), 4U);
  EXPECT_EQ(rank(g), 5U);
  Rng rng = derive_rng(4, 0);
  for (int i = 0; i < 50; ++i) {
    Word const u = random_word(rng, 2, 8);
    Word const c = random_word(rng, 2, 5);
    EXPECT_EQ(contains(g, u), contains(g, c * u * inverse(c)));
  }
}

TEST(Schreier, BasePointAndErrors) {
  std::vector<Permutation> perms{Permutation({1, 2, 0}), Permutation({0, 2, 1})};
  CoreGraph const at2 = schreier_graph(2, perms, 2);
  // stabilizer of point 2: a^3, b, and a b a^-1 ... check by the action
  for (Word const& w : Ws({"aaa", "b", "aabA", "abaaBA"})) {
    std::size_t p = 2;
    for (int l : w) p = l > 0 ? perms[l - 1](p) : perms[-l - 1].inverse()(p);
    EXPECT_EQ(contains(at2, w), p == 2) << render(w);
  }
  std::vector<Permutation> split{Permutation({1, 0, 2}), Permutation({1, 0, 2})};
  EXPECT_THROW(schreier_graph(2, split, 0), NotConnected);
  EXPECT_THROW(schreier_graph(3, split, 0), RankMismatch);
}

TEST(CosetPermutation, Gamma3Examples) {
  CoreGraph const g = gamma_m(3);
  EXPECT_EQ(coset_permutation(g, W("b")), Permutation({1, 2, 0}));
  Permutation const p = coset_permutation(g, w_k(1));
  EXPECT_EQ(p, Permutation({1, 0, 2}));
  for (std::size_t v = 0; v < 3; ++v) EXPECT_EQ(p(v), brute_force_lift(g, v, w_k(1)).end);
  EXPECT_TRUE(coset_permutation(g, Word::identity(2)).is_identity());
  EXPECT_THROW(coset_permutation(from_generators(2, Ws({"a"})), W("a")), NotACovering);
}

TEST(CosetPermutationProperty, HomomorphismAndKernel) {
  Rng rng = derive_rng(23, 0);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t const n = uniform_index(rng, 2, 3);
    CoreGraph const g = random_finite_index_subgroup(rng, n, 12);
    Word const u = random_word(rng, n, 15);
    Word const v = random_word(rng, n, 15);
    EXPECT_EQ(coset_permutation(g, u * v),
              coset_permutation(g, u).then(coset_permutation(g, v)));
    EXPECT_EQ(contains(g, u), coset_permutation(g, u)(g.base()) == g.base());
    EXPECT_EQ(schreier_graph(n, generator_permutations(g), 0), g);
  }
}

}  // namespace
}  // namespace fgr
