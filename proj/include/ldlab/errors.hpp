#pragma once

#include <stdexcept>
#include <string>

namespace ldlab {

// A precondition of an operation is violated by its arguments.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured size, memory or step bound would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input (braid words, colour lists, rack specifiers).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ldlab
