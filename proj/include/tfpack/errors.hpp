#pragma once

#include <stdexcept>
#include <string>

namespace tfpack {

/// Input rejected before any work is done (bad parameters, degenerate
/// vectors, coincident points).
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

/// A construction invariant failed (empty solve, zero root, a set that is
/// not a spread). Never recoverable.
class ConstructionError : public std::logic_error {
 public:
  explicit ConstructionError(const std::string& what) : std::logic_error(what) {}
};

/// Malformed or inconsistent packing file.
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tfpack
