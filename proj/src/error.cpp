#include "rootlat/error.hpp"

namespace rootlat {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidRank: return "invalid-rank";
    case ErrorKind::DimensionMismatch: return "dimension-mismatch";
    case ErrorKind::IndexOutOfRange: return "index-out-of-range";
    case ErrorKind::NotInDual: return "not-in-dual";
    case ErrorKind::InLattice: return "in-lattice";
    case ErrorKind::OutOfScopeNorm: return "out-of-scope-norm";
    case ErrorKind::RankCap: return "rank-cap";
    case ErrorKind::KCap: return "k-cap";
    case ErrorKind::CapExceeded: return "cap-exceeded";
    case ErrorKind::EmptySpec: return "empty-spec";
    case ErrorKind::Parse: return "parse-error";
    case ErrorKind::InvalidTarget: return "invalid-target";
    case ErrorKind::CertificationFailure: return "certification-failure";
    case ErrorKind::Internal: return "internal";
    }
    return "unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

void fail(ErrorKind kind, const std::string& detail) { throw Error(kind, detail); }

} // namespace rootlat
