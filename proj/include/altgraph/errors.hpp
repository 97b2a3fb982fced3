#pragma once

#include <stdexcept>
#include <string>

namespace altgraph {

// Thrown when a requested computation exceeds a configured ceiling
// (brute-force enumeration, element-level edge materialization, or
// partition enumeration). CLI maps this to exit code 3.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a built graph contradicts a structural guarantee it is
// required to satisfy (single main component, isolated vertices of
// prime order, ...). Treated as a verification failure, never caught
// internally.
class StructureViolation : public std::runtime_error {
 public:
  explicit StructureViolation(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace altgraph
