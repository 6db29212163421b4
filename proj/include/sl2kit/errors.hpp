#pragma once

#include <stdexcept>
#include <string>

namespace sl2kit {

/// Operand shapes are incompatible (e.g. bracket of a 3x3 with a 4x4).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An argument lies outside the domain of the operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A computed object failed a structural property it must have.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Coset enumeration ran past its capacity; the subgroup may have infinite index.
class IndexBoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No congruence closure is known for the given subgroup.
class CongruenceClosureUnknown : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sl2kit
