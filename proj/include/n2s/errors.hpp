#pragma once

#include <stdexcept>
#include <string>

namespace n2s {

// Query outside the domain a table or grid was defined on.
class OutOfDomainError : public std::runtime_error {
public:
    explicit OutOfDomainError(const std::string& what) : std::runtime_error(what) {}
};

// A grid does not cover enough of the state for the requested operation
// (packet support, endpoint decay, ...).
class DomainTooSmallError : public std::runtime_error {
public:
    explicit DomainTooSmallError(const std::string& what) : std::runtime_error(what) {}
};

// An input that must be unit-normalized is not.
class NormalizationError : public std::runtime_error {
public:
    explicit NormalizationError(const std::string& what) : std::runtime_error(what) {}
};

// Iterative solver failed to converge; index identifies the offending item.
class SolverError : public std::runtime_error {
public:
    SolverError(const std::string& what, int index)
        : std::runtime_error(what), index(index) {}
    int index;
};

}  // namespace n2s
