#pragma once

#include <stdexcept>
#include <string>

namespace apkit {

// Error taxonomy used across the toolkit. The CLI maps UsageError -> exit 2
// and ResourceError -> exit 3; everything else is a hard failure.

struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

// Translation or evaluation left the representable window. Carries enough
// context for the caller to shrink its analysis window and retry. A flavor of
// resource exhaustion, so the CLI maps it to exit 3 as well.
struct WindowingError : ResourceError {
    WindowingError(const std::string& msg, long long needed, long long available)
        : ResourceError(msg), neededRadius(needed), availableRadius(available) {}
    long long neededRadius;
    long long availableRadius;
};

struct ArithmeticError : std::runtime_error {
    explicit ArithmeticError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DataError : std::runtime_error {
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace apkit
