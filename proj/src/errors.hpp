#ifndef SMOOTHROOTS_ERRORS_HPP
#define SMOOTHROOTS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace smoothroots {

// Error categories, aligned with the C API status codes.
enum class ErrorCode {
    invalid_argument,
    parse,        // malformed input / schema violation
    undecidable,  // truncation order too low to decide a valuation or limit
    numeric,      // clustering ambiguity, singular lift systems, ...
    unsupported,
    internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace smoothroots

#endif
