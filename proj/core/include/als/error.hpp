#pragma once

#include <stdexcept>
#include <string>

namespace als {

/// Raised when an input lies outside an operation's mathematical domain:
/// N < 2, a non-positive gap, an empty window where one is required, etc.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// File output failures (unwritable path, short write).
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace als
