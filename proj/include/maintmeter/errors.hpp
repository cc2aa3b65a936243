#pragma once

#include <stdexcept>

namespace maintmeter {

/// Bad invocation or malformed request (CLI exit code 2).
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Unusable input: unreadable roots, fully degraded trees (CLI exit code 3).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace maintmeter
