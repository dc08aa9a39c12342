#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fourcolor {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Precondition violation: unknown vertex, uncolored vertex, bad parameter.
struct DomainError : Error {
  using Error::Error;
};

// State mismatch: restoring into a graph that no longer matches the step,
// swapping a component that is stale against the current coloring.
struct ConsistencyError : Error {
  using Error::Error;
};

// Malformed representation: asymmetric adjacency, duplicate rotation entry,
// self loop.
struct StructureError : Error {
  using Error::Error;
};

// Raised when a computation finds a witness that the input cannot be a
// planar embedded graph: Euler's formula fails, no vertex of degree <= 5
// exists, or a <=5-vertex base admits no proper 4-coloring.
struct NonPlanarEvidence : Error {
  enum class Kind { euler_violation, no_low_degree_vertex, base_not_colorable };

  NonPlanarEvidence(Kind k, const std::string& msg) : Error(msg), kind(k) {}

  Kind kind;
};

// Text input error with position information.
struct ParseError : Error {
  ParseError(std::size_t line_, std::size_t column_, const std::string& msg)
      : Error("line " + std::to_string(line_) + ", column " +
              std::to_string(column_) + ": " + msg),
        line(line_),
        column(column_) {}

  std::size_t line;
  std::size_t column;
};

}  // namespace fourcolor
