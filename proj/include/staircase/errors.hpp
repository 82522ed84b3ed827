#pragma once

#include <stdexcept>
#include <string>

namespace staircase {

// Malformed textual input (partitions, vectors, JSON payloads).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition of a mathematical operation does not hold
// (form not PSD, partition not wild, vertex outside the diagram, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal invariant was violated. Indicates a bug, not bad input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace staircase
