#pragma once

#include <stdexcept>
#include <string>

namespace maxaccel {

/// Raised when arithmetic or a comparison mixes incompatible dimensions.
class DimensionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// An operation's precondition was violated (nonpositive mass, r > R, ...).
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Unknown constant, material, display unit or row id.
class LookupError : public std::out_of_range {
  public:
    using std::out_of_range::out_of_range;
};

/// Malformed input text (constants table, state file, CSV, config).
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace maxaccel
