#ifndef CIEMO_CORE_ERRORS_HPP
#define CIEMO_CORE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ciemo {

enum class ErrorCode {
    InvalidArgument,
    DimensionMismatch,
    EmptyInput,
    BudgetExhausted,
    UnknownProblem,
    IllConditioned,
    ConfigError,
    Io,
    Internal,
};

/// Library-wide exception carrying a machine-readable code next to the message.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace ciemo

#endif
