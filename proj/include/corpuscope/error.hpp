#ifndef CORPUSCOPE_ERROR_HPP
#define CORPUSCOPE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace corpuscope {

enum class ErrorCode {
    invalid_argument,  // bad parameter or precondition violation
    io,                // file could not be opened or read
    parse,             // malformed input file content
    data,              // semantically invalid data (duplicate id, unknown label, ...)
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace corpuscope

#endif
