#pragma once

#include <stdexcept>
#include <string>

namespace qho {

/// Argument outside the mathematical domain of an operation
/// (bad index range, dimension mismatch, unsupported rule kind).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Input that is well-formed but violates a type invariant or a
/// precondition checked at run time (non-normalized state, bad split sets).
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace qho
