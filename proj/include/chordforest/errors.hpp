#pragma once

#include <stdexcept>
#include <string>

namespace chordforest {

/// Input outside the documented domain of an operation (e.g. m > n).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A proven identity or divisibility fact failed at runtime. Always a bug.
class InconsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Malformed user-supplied data (diagram text, pair lists).
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An exhaustive enumeration was requested above its configured cap.
class ResourceGuardError : public std::length_error {
public:
    using std::length_error::length_error;
};

}  // namespace chordforest
