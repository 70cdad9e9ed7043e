#pragma once

#include <stdexcept>
#include <string>

namespace batchq {

enum class ErrorCode {
    parse = 1,
    domain = 2,
    unsupported = 3,
    convergence = 4,
    resource = 5,
    internal = 6,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

struct ParseError : Error {
    explicit ParseError(std::string msg) : Error(ErrorCode::parse, std::move(msg)) {}
};

struct DomainError : Error {
    explicit DomainError(std::string msg) : Error(ErrorCode::domain, std::move(msg)) {}
};

struct UnsupportedError : Error {
    explicit UnsupportedError(std::string msg) : Error(ErrorCode::unsupported, std::move(msg)) {}
};

struct ResourceError : Error {
    explicit ResourceError(std::string msg) : Error(ErrorCode::resource, std::move(msg)) {}
};

// Carries the best available estimate so callers can decide whether to use it.
class ConvergenceError : public Error {
public:
    ConvergenceError(std::string msg, double best, double err_estimate)
        : Error(ErrorCode::convergence, std::move(msg)), best_(best), err_(err_estimate) {}
    double best_estimate() const noexcept { return best_; }
    double error_estimate() const noexcept { return err_; }

private:
    double best_;
    double err_;
};

} // namespace batchq
