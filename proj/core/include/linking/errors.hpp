#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace linking {

/// Shape, boundary or typing mismatch between values of the algebra.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A term whose boundary arities do not line up.
class TypeError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Malformed textual or JSON input. `position` is a byte offset when known.
class ParseError : public std::runtime_error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  explicit ParseError(const std::string& message, std::size_t position = npos)
      : std::runtime_error(position == npos
                               ? message
                               : message + " at offset " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace linking
