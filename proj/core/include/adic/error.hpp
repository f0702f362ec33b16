#pragma once

#include <stdexcept>
#include <string>

namespace adic {

// Mismatched ranks, malformed graphs, inconsistent references.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Arguments outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed textual or JSON input. `pointer` is a JSON pointer when known.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what, std::string pointer = {})
      : std::runtime_error(what), pointer_(std::move(pointer)) {}

  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

}  // namespace adic
