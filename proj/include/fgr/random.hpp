#ifndef FGR_RANDOM_HPP_
#define FGR_RANDOM_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "fgr/core_graph.hpp"
#include "fgr/covering.hpp"
#include "fgr/error.hpp"
#include "fgr/permutation.hpp"
#include "fgr/word.hpp"

namespace fgr {

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31U);
}

// Independent generator for stream `stream` of a run seeded with `seed`.
inline Rng derive_rng(std::uint64_t seed, std::uint64_t stream) {
  return Rng(splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x5851f42d4c957f2dULL)));
}

inline std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng) { return uniform_index(rng, 0, 1) == 1; }

// Uniform among reduced words of exactly `length` letters.
inline Word random_reduced_word(Rng& rng, std::size_t rank, std::size_t length) {
  std::vector<int> letters;
  letters.reserve(length);
  while (letters.size() < length) {
    int l = static_cast<int>(uniform_index(rng, 1, rank));
    if (coin(rng)) l = -l;
    if (!letters.empty() && letters.back() == -l) continue;
    letters.push_back(l);
  }
  return Word(rank, std::move(letters));
}

inline Word random_word(Rng& rng, std::size_t rank, std::size_t max_length) {
  return random_reduced_word(rng, rank, uniform_index(rng, 1, max_length));
}

// Rejection-samples a nontrivial word with primitive exponent vector.
inline Word random_visible_word(Rng& rng, std::size_t rank, std::size_t max_length) {
  for (;;) {
    Word w = random_word(rng, rank, max_length);
    if (content(sigma(w)) == 1) return w;
  }
}

inline Permutation random_permutation(Rng& rng, std::size_t degree) {
  std::vector<std::size_t> img(degree);
  std::iota(img.begin(), img.end(), std::size_t{0});
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(std::move(img));
}

// Uniform tuple of permutations, rejection-sampled until transitive.
inline std::vector<Permutation> random_transitive_action(Rng& rng, std::size_t rank,
                                                         std::size_t degree) {
  for (;;) {
    std::vector<Permutation> perms;
    for (std::size_t i = 0; i < rank; ++i) perms.push_back(random_permutation(rng, degree));
    if (is_transitive(perms, degree)) return perms;
  }
}

// Point stabilizer of a random transitive action of degree 1..max_index.
inline CoreGraph random_finite_index_subgroup(Rng& rng, std::size_t rank,
                                              std::size_t max_index) {
  std::size_t const degree = uniform_index(rng, 1, max_index);
  return schreier_graph(rank, random_transitive_action(rng, rank, degree), 0);
}

namespace detail {

inline Permutation cycle_perm(std::size_t degree) {
  std::vector<std::size_t> img(degree);
  for (std::size_t i = 0; i < degree; ++i) img[i] = (i + 1) % degree;
  return Permutation(std::move(img));
}

inline Permutation reflection_perm(std::size_t degree) {
  std::vector<std::size_t> img(degree);
  for (std::size_t i = 0; i < degree; ++i) img[i] = (degree - i) % degree;
  return Permutation(std::move(img));
}

// All elements of the permutation group generated by `gens`.
inline std::vector<Permutation> closure(std::vector<Permutation> const& gens) {
  std::vector<Permutation> elems{Permutation::identity(gens.front().degree())};
  std::map<std::vector<std::size_t>, bool> seen{{elems.front().images(), true}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (auto const& g : gens) {
      Permutation p = elems[i].then(g);
      if (seen.emplace(p.images(), true).second) elems.push_back(std::move(p));
    }
  }
  return elems;
}

}  // namespace detail

// A small group (cyclic of order <= 12, dihedral of order <= 12, or S_3)
// given by its elements.
inline std::vector<Permutation> random_small_group(Rng& rng) {
  switch (uniform_index(rng, 0, 2)) {
    case 0: {
      std::size_t const k = uniform_index(rng, 1, 12);
      return detail::closure({detail::cycle_perm(k)});
    }
    case 1: {
      std::size_t const k = uniform_index(rng, 2, 6);
      return detail::closure({detail::cycle_perm(k), detail::reflection_perm(k)});
    }
    default:
      return detail::closure({Permutation({1, 0, 2}), Permutation({1, 2, 0})});
  }
}

// Kernel of F_rank -> G for a random small group G and random generator
// images; the graph is the right regular action of the image subgroup, so
// the subgroup is normal of index |image|.
inline CoreGraph random_normal_subgroup(Rng& rng, std::size_t rank) {
  std::vector<Permutation> const group = random_small_group(rng);
  std::vector<Permutation> images;
  for (std::size_t i = 0; i < rank; ++i) {
    images.push_back(group[uniform_index(rng, 0, group.size() - 1)]);
  }
  std::vector<Permutation> const elems = detail::closure(images);
  std::map<std::vector<std::size_t>, std::size_t> id;
  for (std::size_t i = 0; i < elems.size(); ++i) id.emplace(elems[i].images(), i);
  std::vector<Permutation> action;
  for (auto const& g : images) {
    std::vector<std::size_t> img(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) {
      img[i] = id.at(elems[i].then(g).images());
    }
    action.emplace_back(std::move(img));
  }
  return schreier_graph(rank, action, 0);
}

}  // namespace fgr

#endif  // FGR_RANDOM_HPP_
