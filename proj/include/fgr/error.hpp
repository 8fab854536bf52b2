#ifndef FGR_ERROR_HPP_
#define FGR_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fgr {

// Base class for every domain error raised by the library. The CLI maps these
// to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidAlphabet : public Error {
 public:
  using Error::Error;
};

class RankMismatch : public Error {
 public:
  RankMismatch(std::size_t lhs, std::size_t rhs)
      : Error("rank mismatch: " + std::to_string(lhs) + " vs " +
              std::to_string(rhs)) {}
};

class ParseError : public Error {
 public:
  ParseError(std::string const& what, std::size_t position)
      : Error("parse error at position " + std::to_string(position) + ": " +
              what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

class NotAMember : public Error {
 public:
  NotAMember() : Error("word is not a member of the subgroup") {}
};

class NotACovering : public Error {
 public:
  NotACovering() : Error("subgroup has infinite index (graph is not a covering)") {}
};

class NotConnected : public Error {
 public:
  NotConnected() : Error("permutation action is not transitive") {}
};

class InvalidGraph : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace fgr

#endif  // FGR_ERROR_HPP_
