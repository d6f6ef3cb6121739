#pragma once

#include <stdexcept>
#include <string>

namespace fitset {

/// Malformed files, out-of-range arguments, size-guard violations.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A requested operation's mathematical hypothesis does not hold
/// (e.g. a non-constrained quotient where the theorem route needs one).
class HypothesisError : public std::runtime_error {
 public:
  explicit HypothesisError(const std::string& what) : std::runtime_error(what) {}
};

/// Internal invariant tripwire: indicates a bug, never bad input.
class ConsistencyError : public std::logic_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace fitset
