#pragma once

#include <stdexcept>
#include <string>

namespace gbath {

enum class ErrorCode {
    invalid_parameter,
    invalid_state,
    numerical_domain,
    io,
};

// Base of all library errors; carries a stable code so callers (and the C API)
// can dispatch without RTTI.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

class InvalidParameter : public Error {
public:
    explicit InvalidParameter(const std::string& what) : Error(ErrorCode::invalid_parameter, what) {}
};

class InvalidState : public Error {
public:
    explicit InvalidState(const std::string& what) : Error(ErrorCode::invalid_state, what) {}
};

class NumericalDomainError : public Error {
public:
    explicit NumericalDomainError(const std::string& what) : Error(ErrorCode::numerical_domain, what) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(ErrorCode::io, what) {}
};

}  // namespace gbath
