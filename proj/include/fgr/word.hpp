#ifndef FGR_WORD_HPP_
#define FGR_WORD_HPP_

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "fgr/error.hpp"

namespace fgr {

// Exponent vector over some free abelian basis (ambient generators or a
// subgroup basis).
using IntVector = std::vector<std::int64_t>;

inline constexpr std::size_t kMaxRank = 26;

namespace detail {

// Stack-based free reduction of a signed-letter sequence. Works for any
// alphabet size.
inline std::vector<int> free_reduce(std::vector<int> const& raw) {
  std::vector<int> out;
  out.reserve(raw.size());
  for (int letter : raw) {
    if (!out.empty() && out.back() == -letter) {
      out.pop_back();
    } else {
      out.push_back(letter);
    }
  }
  return out;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw OverflowError("64-bit exponent overflow");
  }
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw OverflowError("64-bit exponent overflow");
  }
  return r;
}

}  // namespace detail

// Freely reduced word in the free group of rank `rank`. Letter i > 0 is the
// i-th generator, -i its inverse.
class Word {
 public:
  Word(std::size_t rank, std::vector<int> letters) : rank_(rank) {
    if (rank == 0 || rank > kMaxRank) {
      throw InvalidAlphabet("rank must be in 1.." + std::to_string(kMaxRank) +
                            ", got " + std::to_string(rank));
    }
    for (int letter : letters) {
      if (letter == 0 || static_cast<std::size_t>(std::abs(letter)) > rank) {
        throw InvalidAlphabet("letter " + std::to_string(letter) +
                              " outside alphabet of rank " +
                              std::to_string(rank));
      }
    }
    letters_ = detail::free_reduce(letters);
  }

  static Word identity(std::size_t rank) { return Word(rank, {}); }
  static Word generator(std::size_t rank, int letter) {
    return Word(rank, {letter});
  }

  std::size_t rank() const noexcept { return rank_; }
  std::vector<int> const& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  int operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  friend bool operator==(Word const&, Word const&) = default;
  friend auto operator<=>(Word const& a, Word const& b) {
    if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
    if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
    return a.letters_ <=> b.letters_;
  }

 private:
  std::size_t rank_;
  std::vector<int> letters_;
};

inline Word reduce(std::vector<int> const& raw, std::size_t rank) {
  return Word(rank, raw);
}

inline void require_same_rank(Word const& u, Word const& v) {
  if (u.rank() != v.rank()) throw RankMismatch(u.rank(), v.rank());
}

inline Word multiply(Word const& u, Word const& v) {
  require_same_rank(u, v);
  std::vector<int> raw = u.letters();
  raw.insert(raw.end(), v.begin(), v.end());
  return Word(u.rank(), std::move(raw));
}

inline Word operator*(Word const& u, Word const& v) { return multiply(u, v); }

inline Word inverse(Word const& u) {
  std::vector<int> raw(u.letters().rbegin(), u.letters().rend());
  for (int& letter : raw) letter = -letter;
  return Word(u.rank(), std::move(raw));
}

inline Word power(Word const& u, std::int64_t k) {
  Word base = k < 0 ? inverse(u) : u;
  std::uint64_t n = k < 0 ? 0 - static_cast<std::uint64_t>(k)
                          : static_cast<std::uint64_t>(k);
  Word result = Word::identity(u.rank());
  // square-and-multiply; reduction handles the cancellation between copies
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

inline Word commutator(Word const& u, Word const& v) {
  require_same_rank(u, v);
  return u * v * inverse(u) * inverse(v);
}

// Same letters, different ambient rank. Throws if a letter does not fit.
inline Word with_rank(Word const& u, std::size_t rank) {
  return Word(rank, u.letters());
}

// Image of `w` under the homomorphism sending generator i to images[i-1].
inline Word substitute(Word const& w, std::span<Word const> images,
                       std::size_t target_rank) {
  if (images.size() != w.rank()) throw RankMismatch(images.size(), w.rank());
  std::vector<int> raw;
  for (int letter : w) {
    Word const& img = images[static_cast<std::size_t>(std::abs(letter)) - 1];
    if (img.rank() != target_rank) throw RankMismatch(img.rank(), target_rank);
    if (letter > 0) {
      raw.insert(raw.end(), img.begin(), img.end());
    } else {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) {
        raw.push_back(-*it);
      }
    }
  }
  return Word(target_rank, std::move(raw));
}

inline char letter_char(int letter) {
  char const c = static_cast<char>('a' + std::abs(letter) - 1);
  return letter > 0 ? c : static_cast<char>(c - 'a' + 'A');
}

// Canonical rendering: lowercase generators, uppercase inverses, empty
// string for the identity.
inline std::string render(Word const& w) {
  std::string s;
  s.reserve(w.size());
  for (int letter : w) s.push_back(letter_char(letter));
  return s;
}

inline std::ostream& operator<<(std::ostream& os, Word const& w) {
  return os << (w.empty() ? std::string("1") : render(w));
}

// Exponent sum of each generator.
inline IntVector sigma(Word const& w) {
  IntVector v(w.rank(), 0);
  for (int letter : w) {
    auto& slot = v[static_cast<std::size_t>(std::abs(letter)) - 1];
    slot = detail::checked_add(slot, letter > 0 ? 1 : -1);
  }
  return v;
}

inline IntVector add(IntVector const& a, IntVector const& b) {
  if (a.size() != b.size()) throw RankMismatch(a.size(), b.size());
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] = detail::checked_add(a[i], b[i]);
  }
  return r;
}

// gcd of the absolute values of the entries; the zero vector has content 0.
inline std::int64_t content(IntVector const& v) {
  std::int64_t g = 0;
  for (std::int64_t x : v) {
    if (x == INT64_MIN) throw OverflowError("cannot take |INT64_MIN|");
    g = std::gcd(g, x < 0 ? -x : x);
  }
  return g;
}

inline bool is_primitive(IntVector const& v) { return content(v) == 1; }

}  // namespace fgr

#endif  // FGR_WORD_HPP_
