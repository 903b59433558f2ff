#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace snakes {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in polynomial rings with different numbers of variables.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An arc label is out of range or names a boundary arc where an interior one is required.
class LabelError : public Error {
 public:
  using Error::Error;
};

/// A crossing sequence is not a walk through the triangulation. `position()` is the
/// 1-based index k of the offending crossing (0 when the start triangle is at fault).
class ArcError : public Error {
 public:
  ArcError(std::size_t position, const std::string& what)
      : Error("arc error at crossing " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A structural identity that must hold by construction did not; signals a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// A triangulation failed its consistency checks; carries every violation found.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> violations)
      : Error(join(violations)), violations_(std::move(violations)) {}

  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string out = "invalid triangulation";
    for (const auto& s : v) out += "\n  " + s;
    return out;
  }

  std::vector<std::string> violations_;
};

/// Malformed input file.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Flip search exhausted its depth bound.
class NotFoundError : public Error {
 public:
  using Error::Error;
};

}  // namespace snakes
