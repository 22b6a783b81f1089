#pragma once

#include <stdexcept>
#include <string>

namespace nfx {

enum class ErrorCode {
    InvalidArgument = 1,
    Parse,
    Constraint,
    Domain,
    NonConvergence,
    RootNotFound,
    Pole,
    Io,
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Series that ran out of terms; carries what had been accumulated.
class NonConvergenceError : public Error {
public:
    NonConvergenceError(const std::string& what, double partial, double est_error)
        : Error(ErrorCode::NonConvergence, what), partial_(partial), est_error_(est_error) {}
    double partial_value() const noexcept { return partial_; }
    double est_error() const noexcept { return est_error_; }

private:
    double partial_;
    double est_error_;
};

}  // namespace nfx
