#pragma once

#include <stdexcept>
#include <string>

namespace fairaudit {

enum class ErrorKind {
    MissingColumn,
    NonNumericCell,
    EmptyDataset,
    DuplicateRole,
    InvalidDataset,
    RankDeficient,
    Underdetermined,
    ArityMismatch,
    SensitiveRequired,
    SensitiveForbidden,
    ZeroVariance,
    NotFullModel,
    EmptyGroup,
    InvalidGroupLabel,
    InvalidSpec,
    InvalidLambdas,
    IoError,
};

const char* to_string(ErrorKind kind);

/// Domain error with a machine-readable kind next to the human message.
/// The CLI maps kind() to the "error" field of its JSON error objects.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }
    const char* kind_name() const { return to_string(kind_); }

private:
    ErrorKind kind_;
};

} // namespace fairaudit
