#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace abc {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid family / constructor parameters (names the violated constraint).
class parameter_error : public error {
public:
    using error::error;
};

/// Caller broke an operation precondition.
class contract_error : public error {
public:
    using error::error;
};

/// Input outside the mathematical domain (e.g. isolated vertex in an ABC matrix).
class domain_error : public error {
public:
    using error::error;
};

/// Size exceeds a supported limit.
class capacity_error : public error {
public:
    using error::error;
};

/// Malformed serialized input; carries the byte offset of the defect.
class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t offset)
        : error(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Iteration failed to converge; carries the residual that was achieved.
class numeric_error : public error {
public:
    numeric_error(const std::string& what, double achieved_residual)
        : error(what), residual_(achieved_residual) {}

    double achieved_residual() const noexcept { return residual_; }

private:
    double residual_;
};

}  // namespace abc
