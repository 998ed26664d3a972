#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

/// Malformed coweights, unsupported field sizes, rank mismatches. CLI exit code 3.
class InvalidInput : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// An enumeration exceeded its configured state ceiling. CLI exit code 2.
class BudgetExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Two computations that must agree did not. CLI exit code 1.
class ConsistencyError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class InterpolationInconsistency : public ConsistencyError {
   public:
    using ConsistencyError::ConsistencyError;
};

class MethodDisagreement : public ConsistencyError {
   public:
    using ConsistencyError::ConsistencyError;
};

}  // namespace hecke
