/**
 * Error type shared by every dmorse module.
 */
#ifndef DMORSE_ERROR_HPP
#define DMORSE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace dmorse {

enum class ErrorKind
{
    SelfLoop,
    BadToken,
    EmptyGraph,
    ParseError,
    UnknownVertex,
    DuplicateVertex,
    MissingVertex,
    NegativeValue,
    DimensionBoundExceeded,
    IndexOutOfRange,
    DimensionMismatch,
    ConvergenceFailure,
    BasisExpressionFailure,
    TruncationUnsound,
    NotMorse,
    ExtensionNotMorse,
    NonUniqueTarget,
    StabilizationDiverged,
    NotTransitive,
    ScaleOverflow,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error
{
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind)
{
    switch (kind)
    {
        case ErrorKind::SelfLoop: return "SelfLoop";
        case ErrorKind::BadToken: return "BadToken";
        case ErrorKind::EmptyGraph: return "EmptyGraph";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::UnknownVertex: return "UnknownVertex";
        case ErrorKind::DuplicateVertex: return "DuplicateVertex";
        case ErrorKind::MissingVertex: return "MissingVertex";
        case ErrorKind::NegativeValue: return "NegativeValue";
        case ErrorKind::DimensionBoundExceeded: return "DimensionBoundExceeded";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
        case ErrorKind::BasisExpressionFailure: return "BasisExpressionFailure";
        case ErrorKind::TruncationUnsound: return "TruncationUnsound";
        case ErrorKind::NotMorse: return "NotMorse";
        case ErrorKind::ExtensionNotMorse: return "ExtensionNotMorse";
        case ErrorKind::NonUniqueTarget: return "NonUniqueTarget";
        case ErrorKind::StabilizationDiverged: return "StabilizationDiverged";
        case ErrorKind::NotTransitive: return "NotTransitive";
        case ErrorKind::ScaleOverflow: return "ScaleOverflow";
    }
    return "Unknown";
}

}   // namespace dmorse

#endif
