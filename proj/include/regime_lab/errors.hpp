#pragma once

#include <stdexcept>
#include <string>

namespace regime_lab {

/// A parameter or argument lies outside the region where the model is defined.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An iterative solver exhausted its iteration budget.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A derivative was requested exactly at a kink of a piecewise function.
class BoundaryError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace regime_lab
