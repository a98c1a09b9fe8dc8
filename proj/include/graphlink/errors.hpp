#ifndef GRAPHLINK_ERRORS_HPP
#define GRAPHLINK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace graphlink {

enum class ErrorCode {
    SingularMatrix,
    UnknownVertex,
    SameVertex,
    NotApplicable,
    SizeLimit,
    NotAKnot,
    NotOneComponent,
    NotTwoComponents,
    ZeroPolynomial,
    OrbitLimit,
    ParseError,
};

/// All library failures are reported through this type; `reason()` carries a
/// machine-readable code for NotApplicable and ParseError diagnostics.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message, std::string reason = "")
        : std::runtime_error(message), code_(code), reason_(std::move(reason)) {}

    ErrorCode code() const { return code_; }
    const std::string& reason() const { return reason_; }

  private:
    ErrorCode code_;
    std::string reason_;
};

// Process exit codes used by the CLI: 2 domain, 3 parse, 4 size limits.
inline int exit_code_for(ErrorCode code) {
    switch (code) {
    case ErrorCode::ParseError:
        return 3;
    case ErrorCode::SizeLimit:
    case ErrorCode::OrbitLimit:
        return 4;
    default:
        return 2;
    }
}

} // namespace graphlink

#endif
