#pragma once

#include <stdexcept>
#include <string>

namespace gldpc {

// Bad parameters or unsupported configurations (CLI maps these to exit 2).
class config_error : public std::invalid_argument {
public:
    explicit config_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// Internal consistency failures: probabilities out of range, broken brackets,
// non-monotone solver behavior (CLI maps these to exit 3).
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace gldpc
