#pragma once

#include <stdexcept>
#include <string>

namespace rootlat {

// Failure categories; the CLI maps these onto exit codes.
enum class ErrorKind {
    InvalidRank,
    DimensionMismatch,
    IndexOutOfRange,
    NotInDual,
    InLattice,
    OutOfScopeNorm,
    RankCap,
    KCap,
    CapExceeded,
    EmptySpec,
    Parse,
    InvalidTarget,
    CertificationFailure,
    Internal,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail);
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& detail);

} // namespace rootlat
