#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gea {

/// Malformed textual or JSON input. Maps to CLI exit code 1.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position = npos)
      : std::runtime_error(position == npos
                               ? what
                               : what + " at position " + std::to_string(position)),
        position_(position) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// Precondition violation on otherwise well-formed input. Exit code 2.
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// The linear system has a zero determinant.
class SingularMatrixError : public DomainError {
public:
  using DomainError::DomainError;
};

/// Broken algebra: an invariant that must hold by construction did not. Exit code 3.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace gea
