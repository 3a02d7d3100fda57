#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pdtool {

/// A caller-supplied value violates an operation's precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured resource limit (order cap, matrix budget, degree cap) was hit.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(const std::string& what, std::size_t required, std::size_t allowed)
      : std::runtime_error(what + " (required " + std::to_string(required) +
                           ", allowed " + std::to_string(allowed) + ")"),
        required_(required),
        allowed_(allowed) {}

  std::size_t required() const { return required_; }
  std::size_t allowed() const { return allowed_; }

 private:
  std::size_t required_;
  std::size_t allowed_;
};

/// Two routes that must agree by a theorem did not. Always a defect.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Resource limits shared by the group, resolution and cohomology layers.
struct Limits {
  std::size_t order_cap = 200;
  // Nonzero group-ring entries allowed in a single differential.
  std::size_t max_nonzeros = 5'000'000;
  int degree_cap = 8;

  /// Defaults, with PDTOOL_BUDGET (if set) overriding max_nonzeros.
  static Limits from_environment();
};

}  // namespace pdtool
