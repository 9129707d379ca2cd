#pragma once

#include <stdexcept>
#include <string>

namespace frustum {

/// Bad input: malformed files, invalid parameters, violated preconditions.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Vertex budget exceeded or a count overflowed its representation.
class ResourceError : public std::runtime_error {
 public:
  enum class Kind { kBudget, kOverflow };

  ResourceError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// A graph does not satisfy what a measurement needs (connected, no isolated vertices, ...).
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace frustum
