#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace treepoly {

/// Input text that does not conform to a grammar. Carries the byte offset
/// of the first offending position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A violated precondition on an otherwise well-formed call (size bounds,
/// invalid vertex handle, wrong invariant for the requested mode, ...).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace treepoly
