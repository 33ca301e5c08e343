#ifndef SPEM_ERRORS_HPP
#define SPEM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace spem {

// One code per distinct failure class so callers (and the CLI exit-code
// mapping) can tell them apart without string matching.
enum class ErrorCode {
    domain,          // argument outside the operation's domain
    usage,           // bad flags / malformed request
    io,              // filesystem failure
    bad_magic,       // file does not start with the expected magic
    bad_version,     // unsupported format version
    truncated,       // file ends mid-record
    dim_mismatch,    // header dimensions disagree with payload or config
    singular,        // circuit solve has no unique solution
    non_finite,      // NaN/inf where a finite value is required
    validation,      // invariant or verification failure
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::domain: return "domain";
        case ErrorCode::usage: return "usage";
        case ErrorCode::io: return "io";
        case ErrorCode::bad_magic: return "bad_magic";
        case ErrorCode::bad_version: return "bad_version";
        case ErrorCode::truncated: return "truncated";
        case ErrorCode::dim_mismatch: return "dim_mismatch";
        case ErrorCode::singular: return "singular";
        case ErrorCode::non_finite: return "non_finite";
        case ErrorCode::validation: return "validation";
    }
    return "unknown";
}

}  // namespace spem

#endif
