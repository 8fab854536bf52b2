#ifndef FGR_CONSTRUCTIONS_HPP_
#define FGR_CONSTRUCTIONS_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "fgr/basis.hpp"
#include "fgr/core_graph.hpp"
#include "fgr/covering.hpp"
#include "fgr/error.hpp"
#include "fgr/permutation.hpp"
#include "fgr/word.hpp"

namespace fgr {

// Element t^reflection s^rotation of the dihedral group
// D_m = <t, s | t^2, s^m, tst = s^-1>.
class DihedralElement {
 public:
  DihedralElement(std::size_t m, bool reflection, std::int64_t rotation)
      : m_(m), reflection_(reflection), rotation_(normalize(rotation, m)) {
    if (m < 2) throw InvalidArgument("dihedral order parameter must be >= 2");
  }

  static DihedralElement identity(std::size_t m) { return {m, false, 0}; }
  static DihedralElement t(std::size_t m) { return {m, true, 0}; }
  static DihedralElement s(std::size_t m) { return {m, false, 1}; }

  std::size_t m() const noexcept { return m_; }
  bool reflection() const noexcept { return reflection_; }
  std::int64_t rotation() const noexcept { return rotation_; }
  bool is_identity() const noexcept { return !reflection_ && rotation_ == 0; }

  // t^r1 s^a * t^r2 s^b = t^(r1+r2) s^(b + (r2 ? -a : a)), using s^a t = t s^-a.
  friend DihedralElement operator*(DihedralElement const& x, DihedralElement const& y) {
    if (x.m_ != y.m_) throw RankMismatch(x.m_, y.m_);
    std::int64_t const a = y.reflection_ ? -x.rotation_ : x.rotation_;
    return {x.m_, x.reflection_ != y.reflection_, a + y.rotation_};
  }

  DihedralElement inverse() const {
    // reflections are involutions
    if (reflection_) return *this;
    return {m_, false, -rotation_};
  }

  friend bool operator==(DihedralElement const&, DihedralElement const&) = default;
  friend auto operator<=>(DihedralElement const&, DihedralElement const&) = default;

 private:
  static std::int64_t normalize(std::int64_t r, std::size_t m) {
    auto const mm = static_cast<std::int64_t>(m);
    return ((r % mm) + mm) % mm;
  }

  std::size_t m_;
  bool reflection_;
  std::int64_t rotation_;
};

// Homomorphism F_2 -> D_m with x -> t, y -> s.
inline DihedralElement psi_m(Word const& w, std::size_t m) {
  if (w.rank() != 2) throw RankMismatch(w.rank(), 2);
  DihedralElement acc = DihedralElement::identity(m);
  DihedralElement const gens[2] = {DihedralElement::t(m), DihedralElement::s(m)};
  for (int letter : w) {
    DihedralElement const& g = gens[std::abs(letter) - 1];
    acc = acc * (letter > 0 ? g : g.inverse());
  }
  return acc;
}

// The m-fold cover of the rose with vertices v_0..v_{m-1} (vertex i is v_i):
// e_i : v_i -> v_{-i mod m} labeled a, f_i : v_i -> v_{i+1 mod m} labeled b.
inline CoreGraph gamma_m(std::size_t m) {
  if (m < 2) throw InvalidArgument("gamma_m needs m >= 2");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i) {
    edges.push_back({i, (m - i) % m, 1});
    edges.push_back({i, (i + 1) % m, 2});
  }
  return CoreGraph::from_edges(2, m, std::move(edges));
}

// Tree made of the b-edges along the path v_0 -> v_1 -> ... starting at the
// base; requires that path to visit every vertex.
inline SpanningTree f_path_tree(CoreGraph const& g) {
  std::vector<Edge> tree;
  std::size_t v = g.base();
  for (std::size_t i = 0; i + 1 < g.vertex_count(); ++i) {
    std::size_t const e = g.out_edge(v, 2);
    if (e == npos) throw InvalidArgument("b-path does not span the graph");
    tree.push_back(g.edge(e));
    v = g.edge(e).to;
  }
  return spanning_tree(g, tree);
}

struct GraphWithTree {
  CoreGraph graph;
  SpanningTree tree;
};

// H_m = psi_m^-1(<t>) as Gamma_m with the tree {f_0, ..., f_{m-2}}.
inline GraphWithTree h_m_graph(std::size_t m) {
  CoreGraph g = gamma_m(m);
  SpanningTree t = f_path_tree(g);
  return {std::move(g), std::move(t)};
}

// t_i = y^i x y^-(m-i).
inline Word t_word(std::size_t m, std::size_t i) {
  Word const y = Word::generator(2, 2);
  return power(y, static_cast<std::int64_t>(i)) * Word::generator(2, 1) *
         power(y, -static_cast<std::int64_t>(m - i));
}

// w_k = x [x, y]^k.
inline Word w_k(std::int64_t k) {
  if (k < 1) throw InvalidArgument("w_k needs k >= 1");
  Word const x = Word::generator(2, 1);
  Word const y = Word::generator(2, 2);
  return x * power(commutator(x, y), k);
}

// L_m: H_{m-1} for even m; <x, t_1, ..., t_{m-1}> inside H_m for odd m.
inline CoreGraph l_m_graph(std::size_t m) {
  if (m < 3) throw InvalidArgument("L_m needs m >= 3");
  if (m % 2 == 0) return h_m_graph(m - 1).graph;
  std::vector<Word> gens{Word::generator(2, 1)};
  for (std::size_t i = 1; i < m; ++i) gens.push_back(t_word(m, i));
  return from_generators(2, gens);
}

// L_m with the b-path tree. For odd m the basis is x, t_1, ..., t_{m-1};
// for even m it is the H_{m-1} basis.
inline GraphWithTree l_m(std::size_t m) {
  CoreGraph g = l_m_graph(m);
  SpanningTree t = f_path_tree(g);
  return {std::move(g), std::move(t)};
}

// Expression of w_k^2 (m = 2k+1) over the basis x, t_1, ..., t_{m-1}, y^m of
// H_m; symbol 1 is x, symbol i+1 is t_i, symbol m+1 is y^m.
inline BasisWord lemma33_word(std::size_t m) {
  if (m < 3 || m % 2 == 0) throw InvalidArgument("lemma33_word needs odd m >= 3");
  std::vector<int> symbols{1, 1};
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t j = m - 1; j >= 1; --j) {
      bool const odd_step = (m - 1 - j) % 2 == 1;
      // first block starts t_{m-1}^-1, second block t_{m-1}
      bool const positive = pass == 0 ? odd_step : !odd_step;
      int const sym = static_cast<int>(j + 1);
      symbols.push_back(positive ? sym : -sym);
    }
  }
  return make_basis_word(m + 1, symbols);
}

// Schreier graph of D_m acting on the right cosets <t>g, built from the
// group law alone (used to cross-check gamma_m).
inline CoreGraph dihedral_coset_graph(std::size_t m) {
  std::vector<DihedralElement> elements;
  for (int r = 0; r < 2; ++r) {
    for (std::size_t a = 0; a < m; ++a) {
      elements.emplace_back(m, r == 1, static_cast<std::int64_t>(a));
    }
  }
  // coset of g = {g, t g}; label it by its smaller element
  auto coset_key = [m](DihedralElement const& g) {
    DihedralElement const other = DihedralElement::t(m) * g;
    return std::min(g, other);
  };
  std::map<DihedralElement, std::size_t> coset_id;
  coset_id.emplace(coset_key(DihedralElement::identity(m)), 0);
  for (auto const& g : elements) {
    coset_id.try_emplace(coset_key(g), coset_id.size());
  }
  std::vector<Permutation> perms;
  for (DihedralElement const& gen : {DihedralElement::t(m), DihedralElement::s(m)}) {
    std::vector<std::size_t> img(coset_id.size());
    for (auto const& g : elements) {
      img[coset_id.at(coset_key(g))] = coset_id.at(coset_key(g * gen));
    }
    perms.emplace_back(std::move(img));
  }
  return schreier_graph(2, perms, 0);
}

}  // namespace fgr

#endif  // FGR_CONSTRUCTIONS_HPP_
