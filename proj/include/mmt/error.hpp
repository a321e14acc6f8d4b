#pragma once

#include <stdexcept>
#include <string>

namespace mmt {

enum class ErrorKind {
    ParseError,
    TooLarge,
    LimitExceeded,
    AllCollinear,
    DuplicatePoints,
    InvalidFormula,
    NotPlanarWithHints,
    DegenerateDirections,
    CrossingAudit,
    CertificateMismatch,
    NotSatisfying,
    MixedParity,
    DegenerateCollinearity,
    AuditFailed,
    SectorDegeneracy,
    UnknownArtifact,
    InvalidInstance,
    Internal,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

} // namespace mmt
