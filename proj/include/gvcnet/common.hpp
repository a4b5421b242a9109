#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace gvc {

// Bad input or malformed file: CLI maps this to exit code 1.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Non-finite values, diverged iterations: CLI maps this to exit code 2.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw ValidationError(msg);
}

inline bool is_finite(double x) { return std::isfinite(x); }

}  // namespace gvc
