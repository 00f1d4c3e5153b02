#pragma once

#include <stdexcept>
#include <string>

namespace qtorsion {

/// Unknown Cartan type, malformed flags, invalid weights.
class ConfigurationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input outside the domain of an operation (non-regular torus element, s too small, ...).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A size bound was exceeded (Weyl group too large, tensor model too big).
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A numerical target could not be reached.
class NumericError : public std::runtime_error {
public:
    NumericError(const std::string& what, double achieved)
        : std::runtime_error(what), achieved_(achieved) {}
    double achieved() const noexcept { return achieved_; }

private:
    double achieved_;
};

/// Internal invariant violated; always a bug in the construction.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace qtorsion
