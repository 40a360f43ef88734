#pragma once

#include <stdexcept>
#include <string>

namespace adams {

// Raised when an input violates a documented precondition of an operation
// (not a prime, wrong conductor, malformed action, ...).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when an input exceeds a documented desk-scale limit.
class SizeLimitError : public DomainError {
public:
    using DomainError::DomainError;
};

// Raised when an internal consistency check fails; indicates a bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw DomainError(msg);
}

inline void ensure(bool cond, const std::string& msg) {
    if (!cond) throw InternalError(msg);
}

}  // namespace adams
