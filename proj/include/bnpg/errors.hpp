#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace bnpg {

/// Instance exceeds the exhaustive-enumeration limit.
struct InstanceTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A solver that requires a complete graph was handed something else.
struct GraphNotComplete : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The graph has a cycle or is disconnected where a tree is required.
struct NotATree : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The instance does not meet a solver's homogeneity requirement.
struct NotHomogeneous : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Externality differences are not strictly increasing.
struct NotStrictlyConvex : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Text input could not be parsed; `line` is 1-based, 0 if unknown.
struct ParseError : std::runtime_error {
  int line;
  explicit ParseError(const std::string& what, int line_no = 0)
      : std::runtime_error(what), line(line_no) {}
};

/// A loaded game violates one or more structural invariants.
struct ValidationError : std::runtime_error {
  std::vector<std::string> violations;
  explicit ValidationError(std::vector<std::string> v)
      : std::runtime_error(v.empty() ? "invalid game" : v.front()),
        violations(std::move(v)) {}
};

}  // namespace bnpg
