#pragma once

#include <stdexcept>
#include <string>

namespace latentfit {

/// Failure categories. The CLI maps these to its machine-parsable
/// E_* prefixes and process exit codes.
enum class ErrorCode {
    Parse,           // malformed input text (CSV, model files)
    Data,            // numerically or structurally invalid data
    Identification,  // model cannot be estimated as specified
    Convergence,     // iterative procedure failed to converge
};

const char* error_code_name(ErrorCode code) noexcept;

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

inline const char* error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::Parse: return "E_PARSE";
        case ErrorCode::Data: return "E_DATA";
        case ErrorCode::Identification: return "E_IDENT";
        case ErrorCode::Convergence: return "E_CONV";
    }
    return "E_DATA";
}

}  // namespace latentfit
