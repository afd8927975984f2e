#pragma once

#include <stdexcept>
#include <string>

namespace hypermorse {

/// Malformed arguments: out-of-range ids, inconsistent lengths, bad parameters.
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A builder could not realize the requested object (size caps, unmet preconditions).
class ConstructionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A bound formula was evaluated outside the region where it is defined.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Randomized generation exhausted its retry budget.
class GenerationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace hypermorse
