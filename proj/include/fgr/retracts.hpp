#ifndef FGR_RETRACTS_HPP_
#define FGR_RETRACTS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fgr/abelian.hpp"
#include "fgr/basis.hpp"
#include "fgr/constructions.hpp"
#include "fgr/core_graph.hpp"
#include "fgr/covering.hpp"
#include "fgr/error.hpp"
#include "fgr/pullback.hpp"
#include "fgr/random.hpp"
#include "fgr/word.hpp"

namespace fgr {

// Retract R of F_n given by a section s: F_k -> F_n (the images s(x_i) form
// a basis of R) and a retraction rho: F_n -> F_k with rho(s(x_i)) = x_i.
class RetractPresentation {
 public:
  static RetractPresentation make(std::size_t n, std::vector<Word> section_images,
                                  std::vector<Word> retraction_images) {
    std::size_t const k = section_images.size();
    if (k == 0) throw InvalidArgument("retract needs at least one generator");
    if (retraction_images.size() != n) throw RankMismatch(retraction_images.size(), n);
    for (Word const& s : section_images) {
      if (s.rank() != n) throw RankMismatch(s.rank(), n);
    }
    for (Word const& r : retraction_images) {
      if (r.rank() != k) throw RankMismatch(r.rank(), k);
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (substitute(section_images[i], retraction_images, k) !=
          Word::generator(k, static_cast<int>(i + 1))) {
        throw InvalidArgument("retraction does not invert the section on generator " +
                              std::to_string(i + 1));
      }
    }
    return RetractPresentation(n, std::move(section_images), std::move(retraction_images));
  }

  std::size_t ambient_rank() const noexcept { return n_; }
  std::size_t rank() const noexcept { return section_.size(); }
  std::vector<Word> const& section_images() const noexcept { return section_; }
  std::vector<Word> const& retraction_images() const noexcept { return retraction_; }

  // rho as a map into R itself: s(rho(w)).
  Word retract(Word const& w) const {
    return substitute(substitute(w, retraction_, rank()), section_, n_);
  }

  CoreGraph graph() const { return from_generators(n_, section_); }

 private:
  RetractPresentation(std::size_t n, std::vector<Word> section, std::vector<Word> retraction)
      : n_(n), section_(std::move(section)), retraction_(std::move(retraction)) {}

  std::size_t n_;
  std::vector<Word> section_;
  std::vector<Word> retraction_;
};

enum class Verdict { yes, no, undecided };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    default: return "undecided";
  }
}

struct IntersectionReport {
  std::size_t rank_H = 0;
  std::size_t rank_R = 0;
  std::size_t rank_intersection = 0;
  std::vector<Word> intersection_basis;
  // Filled when R is cyclic: least m > 0 with (generator of R)^m in H.
  std::optional<std::int64_t> smallest_power;
  // Filled when the intersection is cyclic and nontrivial.
  std::optional<bool> intersection_visible_in_H;
  Verdict retract_verdict = Verdict::undecided;
};

// <w> is a retract of F_n iff w is visible.
inline bool cyclic_retract_check(Word const& w) { return is_visible_ambient(w); }

// Power word x_1^k_1 ... x_n^k_n is a test element iff every k_i != 0 and
// gcd(k_i) != 1.
inline bool turner_power_word(IntVector const& exponents) {
  if (exponents.empty()) return false;
  for (std::int64_t k : exponents) {
    if (k == 0) return false;
  }
  return content(exponents) != 1;
}

inline RetractPresentation random_retract(std::size_t n, std::size_t k, Rng& rng,
                                          std::size_t complexity) {
  if (k < 1 || k >= n) throw InvalidArgument("random_retract needs 1 <= k <= n-1");
  constexpr int kMaxAttempts = 32;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    // rho(x_j) = v_j, a word in x_1..x_k, for j > k
    std::vector<Word> v(n, Word::identity(n));
    std::vector<Word> kernel;  // x_j v_j^-1
    for (std::size_t j = k; j < n; ++j) {
      if (complexity > 0) {
        std::size_t const len = uniform_index(rng, 0, 2 * complexity);
        if (len > 0) v[j] = with_rank(random_reduced_word(rng, k, len), n);
      }
      kernel.push_back(Word::generator(n, static_cast<int>(j + 1)) * inverse(v[j]));
    }
    auto kernel_element = [&]() {
      Word c = Word::identity(n);
      if (complexity == 0) return c;
      std::size_t const factors = uniform_index(rng, 0, complexity);
      for (std::size_t f = 0; f < factors; ++f) {
        Word const& z = kernel[uniform_index(rng, 0, kernel.size() - 1)];
        std::size_t const glen = uniform_index(rng, 0, complexity);
        Word const g = glen == 0 ? Word::identity(n) : random_reduced_word(rng, n, glen);
        c = c * g * (coin(rng) ? z : inverse(z)) * inverse(g);
      }
      return c;
    };
    std::vector<Word> section;
    for (std::size_t i = 0; i < k; ++i) {
      Word const left = kernel_element();
      Word const right = kernel_element();
      section.push_back(left * Word::generator(n, static_cast<int>(i + 1)) * right);
    }
    std::vector<Word> retraction;
    for (std::size_t j = 0; j < n; ++j) {
      retraction.push_back(j < k ? Word::generator(k, static_cast<int>(j + 1))
                                 : with_rank(v[j], k));
    }
    auto r = RetractPresentation::make(n, std::move(section), std::move(retraction));
    if (fgr::rank(r.graph()) == k) return r;
  }
  throw Error("random_retract: rank collapsed after repeated draws");
}

inline RetractPresentation random_retract(std::size_t n, std::size_t k,
                                          std::uint64_t seed, std::size_t complexity) {
  Rng rng = derive_rng(seed, 0);
  return random_retract(n, k, rng, complexity);
}

// Least m > 0 with w^m in the subgroup, or nullopt if no power lies in it.
inline std::optional<std::int64_t> smallest_power_in(CoreGraph const& g, Word const& w) {
  if (w.empty()) throw InvalidArgument("smallest_power_in needs a nontrivial word");
  if (is_covering(g)) {
    return static_cast<std::int64_t>(coset_permutation(g, w).cycle_length_of(g.base()));
  }
  CoreGraph const meet = pullback(g, from_generators(g.ambient_rank(), {w}));
  if (fgr::rank(meet) == 0) return std::nullopt;
  Word const u = basis(meet).front();
  Word const w_inv = inverse(w);
  Word pos = w;
  Word neg = w_inv;
  // |w^m| >= m for nontrivial w, so m <= |u|
  for (std::int64_t m = 1; m <= static_cast<std::int64_t>(u.size()); ++m) {
    if (pos == u || neg == u) return m;
    pos = pos * w;
    neg = neg * w_inv;
  }
  throw Error("intersection with <w> is not generated by a power of w");
}

// Decides whether H n R is a retract of H where rank structure allows it:
// a cyclic intersection is a retract iff its generator is visible in H; an
// intersection equal to H is a retract; one of larger rank than H is not;
// for rank(H) <= 2 a proper intersection of rank rank(H) is not either.
inline IntersectionReport intersection_report(CoreGraph const& h, CoreGraph const& r) {
  if (h.ambient_rank() != r.ambient_rank()) {
    throw RankMismatch(h.ambient_rank(), r.ambient_rank());
  }
  IntersectionReport rep;
  CoreGraph const meet = pullback(h, r);
  rep.rank_H = fgr::rank(h);
  rep.rank_R = fgr::rank(r);
  rep.rank_intersection = fgr::rank(meet);
  rep.intersection_basis = basis(meet);
  if (rep.rank_R == 1) rep.smallest_power = smallest_power_in(h, basis(r).front());

  if (rep.rank_intersection == 0) {
    rep.retract_verdict = Verdict::yes;
  } else if (rep.rank_intersection == 1) {
    bool const visible =
        is_visible_in_subgroup(h, spanning_tree(h), rep.intersection_basis.front());
    rep.intersection_visible_in_H = visible;
    rep.retract_verdict = visible ? Verdict::yes : Verdict::no;
  } else if (same_subgroup(meet, h)) {
    rep.retract_verdict = Verdict::yes;
  } else if (rep.rank_intersection > rep.rank_H || rep.rank_H <= 2) {
    rep.retract_verdict = Verdict::no;
  } else {
    rep.retract_verdict = Verdict::undecided;
  }
  return rep;
}

inline IntersectionReport intersection_report(CoreGraph const& h,
                                              RetractPresentation const& r) {
  return intersection_report(h, r.graph());
}

// R = <w_j> * <x_3, ..., x_{k+1}> with j = floor((m-1)/2), a rank-k retract
// of F_n, against L_m placed on the first two letters.
struct BergmanInstance {
  CoreGraph h;
  RetractPresentation r;
};

inline BergmanInstance bergman_instance(std::size_t n, std::size_t m, std::size_t k) {
  if (n < 2 || n > kMaxRank) throw InvalidArgument("bergman needs 2 <= n <= 26");
  if (m < 3) throw InvalidArgument("bergman needs m >= 3");
  if (k < 1 || k >= n) throw InvalidArgument("bergman needs 1 <= k <= n-1");
  CoreGraph h = embed(l_m_graph(m), n);
  Word const w = with_rank(w_k(static_cast<std::int64_t>((m - 1) / 2)), n);
  std::vector<Word> section{w};
  for (std::size_t j = 3; j <= k + 1; ++j) {
    section.push_back(Word::generator(n, static_cast<int>(j)));
  }
  // x -> r_1, y -> 1 fixes w since sigma(w) = (1, 0); x_j -> r_{j-1}
  std::vector<Word> retraction;
  for (std::size_t i = 1; i <= n; ++i) {
    if (i == 1) {
      retraction.push_back(Word::generator(k, 1));
    } else if (i >= 3 && i <= k + 1) {
      retraction.push_back(Word::generator(k, static_cast<int>(i - 1)));
    } else {
      retraction.push_back(Word::identity(k));
    }
  }
  return {std::move(h),
          RetractPresentation::make(n, std::move(section), std::move(retraction))};
}

inline IntersectionReport bergman_counterexample(std::size_t n, std::size_t m,
                                                 std::size_t k) {
  BergmanInstance const inst = bergman_instance(n, m, k);
  return intersection_report(inst.h, inst.r);
}

}  // namespace fgr

#endif  // FGR_RETRACTS_HPP_
