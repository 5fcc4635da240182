#pragma once

#include <stdexcept>
#include <string>

namespace sepcx {

/// Raised when a requested size exceeds a configured enumeration cap.
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an operation's precondition on its arguments is violated.
class InvalidArgument : public std::invalid_argument {
public:
    explicit InvalidArgument(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace sepcx
