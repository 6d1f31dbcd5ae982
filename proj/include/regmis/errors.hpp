#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace regmis {

/// Malformed input, violated precondition or out-of-range identifier.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A solver ran out of its node/time/size budget. Carries the best
/// independent set size found so far, which is only a lower bound.
class ResourceLimitError : public std::runtime_error {
 public:
  ResourceLimitError(const std::string& what, std::size_t lower_bound)
      : std::runtime_error(what), lower_bound_(lower_bound) {}

  std::size_t lower_bound() const noexcept { return lower_bound_; }

 private:
  std::size_t lower_bound_;
};

}  // namespace regmis
