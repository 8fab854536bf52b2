#ifndef FGR_PERMUTATION_HPP_
#define FGR_PERMUTATION_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <vector>

#include "fgr/error.hpp"

namespace fgr {

// Bijection of {0, ..., degree-1}; images()[p] is the image of p.
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> images)
      : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t img : images_) {
      if (img >= images_.size() || seen[img]) {
        throw InvalidArgument("not a permutation");
      }
      seen[img] = true;
    }
  }

  static Permutation identity(std::size_t degree) {
    std::vector<std::size_t> img(degree);
    std::iota(img.begin(), img.end(), std::size_t{0});
    return Permutation(std::move(img));
  }

  std::size_t degree() const noexcept { return images_.size(); }
  std::size_t operator()(std::size_t p) const { return images_.at(p); }
  std::vector<std::size_t> const& images() const noexcept { return images_; }

  // Left-to-right product: first *this, then `next`.
  Permutation then(Permutation const& next) const {
    if (next.degree() != degree()) throw RankMismatch(degree(), next.degree());
    std::vector<std::size_t> img(degree());
    for (std::size_t p = 0; p < degree(); ++p) img[p] = next.images_[images_[p]];
    return Permutation(std::move(img));
  }

  Permutation inverse() const {
    std::vector<std::size_t> img(degree());
    for (std::size_t p = 0; p < degree(); ++p) img[images_[p]] = p;
    return Permutation(std::move(img));
  }

  bool is_identity() const {
    for (std::size_t p = 0; p < degree(); ++p) {
      if (images_[p] != p) return false;
    }
    return true;
  }

  // Cycles (including fixed points), each starting at its smallest point,
  // ordered by that point.
  std::vector<std::vector<std::size_t>> cycles() const {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> done(degree(), false);
    for (std::size_t start = 0; start < degree(); ++start) {
      if (done[start]) continue;
      std::vector<std::size_t> cycle;
      for (std::size_t p = start; !done[p]; p = images_[p]) {
        done[p] = true;
        cycle.push_back(p);
      }
      out.push_back(std::move(cycle));
    }
    return out;
  }

  std::size_t cycle_length_of(std::size_t p) const {
    std::size_t len = 1;
    for (std::size_t q = (*this)(p); q != p; q = images_[q]) ++len;
    return len;
  }

  friend bool operator==(Permutation const&, Permutation const&) = default;

 private:
  std::vector<std::size_t> images_;
};

inline std::ostream& operator<<(std::ostream& os, Permutation const& p) {
  for (auto const& c : p.cycles()) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << ')';
  }
  return os;
}

// True iff the group generated by `perms` acts transitively.
inline bool is_transitive(std::vector<Permutation> const& perms,
                          std::size_t degree) {
  if (degree == 0) return false;
  std::vector<bool> seen(degree, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t const p = stack.back();
    stack.pop_back();
    for (auto const& g : perms) {
      // forward images suffice: orbits of a finite permutation group
      std::size_t const q = g(p);
      if (!seen[q]) {
        seen[q] = true;
        ++count;
        stack.push_back(q);
      }
    }
  }
  return count == degree;
}

}  // namespace fgr

#endif  // FGR_PERMUTATION_HPP_
