#ifndef FGR_PARSE_HPP_
#define FGR_PARSE_HPP_

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "fgr/error.hpp"
#include "fgr/word.hpp"

namespace fgr {

namespace detail {

// Recursive-descent evaluator for
//   expr   := term { term }
//   term   := atom [ '^' int ]
//   atom   := letter | '[' expr ',' expr ']' | '(' expr ')'
// Whitespace between tokens is ignored.
class WordParser {
 public:
  WordParser(std::string_view text, std::size_t rank)
      : text_(text), rank_(rank) {}

  Word parse() {
    skip_space();
    if (at_end()) return Word::identity(rank_);
    Word w = expr();
    skip_space();
    if (!at_end()) fail("unexpected character '" + std::string(1, peek()) + "'");
    return w;
  }

 private:
  static constexpr std::size_t kMaxLength = std::size_t{1} << 24;

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  [[noreturn]] void fail(std::string const& what) const {
    throw ParseError(what, pos_);
  }

  void expect(char c) {
    skip_space();
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool starts_atom() {
    skip_space();
    if (at_end()) return false;
    char const c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) || c == '[' || c == '(';
  }

  Word expr() {
    if (!starts_atom()) fail("expected a letter, '[' or '('");
    Word w = term();
    while (starts_atom()) w = w * term();
    return w;
  }

  Word term() {
    Word a = atom();
    skip_space();
    if (!at_end() && peek() == '^') {
      ++pos_;
      std::int64_t const k = integer();
      std::uint64_t const mag = k < 0 ? 0 - static_cast<std::uint64_t>(k)
                                      : static_cast<std::uint64_t>(k);
      if (!a.empty() && mag > kMaxLength / a.size()) fail("power too large");
      a = power(a, k);
    }
    return a;
  }

  Word atom() {
    skip_space();
    char const c = peek();
    if (c == '[') {
      ++pos_;
      Word u = expr();
      expect(',');
      Word v = expr();
      expect(']');
      return commutator(u, v);
    }
    if (c == '(') {
      ++pos_;
      Word u = expr();
      expect(')');
      return u;
    }
    bool const upper = std::isupper(static_cast<unsigned char>(c)) != 0;
    int const index = (upper ? c - 'A' : c - 'a') + 1;
    if (static_cast<std::size_t>(index) > rank_) {
      throw InvalidAlphabet("letter '" + std::string(1, c) + "' at position " +
                            std::to_string(pos_) + " exceeds rank " +
                            std::to_string(rank_));
    }
    ++pos_;
    return Word::generator(rank_, upper ? -index : index);
  }

  std::int64_t integer() {
    skip_space();
    bool negative = false;
    if (!at_end() && peek() == '-') {
      negative = true;
      ++pos_;
    }
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      fail("expected an integer exponent");
    }
    std::int64_t value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      std::int64_t const digit = peek() - '0';
      if (__builtin_mul_overflow(value, 10, &value) ||
          __builtin_add_overflow(value, digit, &value)) {
        fail("exponent out of range");
      }
      ++pos_;
    }
    return negative ? -value : value;
  }

  std::string_view text_;
  std::size_t rank_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// Parses a word expression. The empty string denotes the identity.
inline Word parse_word(std::string_view text, std::size_t rank) {
  if (rank == 0 || rank > kMaxRank) {
    throw InvalidAlphabet("rank must be in 1.." + std::to_string(kMaxRank));
  }
  return detail::WordParser(text, rank).parse();
}

}  // namespace fgr

#endif  // FGR_PARSE_HPP_
