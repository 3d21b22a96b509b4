#ifndef FSE_ERRORS_HPP
#define FSE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fse {

enum class ErrorCode {
    InvalidArgument,
    InvalidOrder,
    NonConvergent,
    SectorUnsupported,
    SingularAtZero,
    QuadratureFailure,
    GridTooNarrow,
    EdgeDecayViolation,
    BoundaryViolation,
    OriginSingularity,
    UnsupportedLambda,
    NegativeTime,
    ZeroTimeSeparation,
};

/// Base of all library exceptions; carries a stable code for the C boundary.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

inline void require(bool cond, ErrorCode code, const std::string& what) {
    if (!cond) throw Error(code, what);
}

} // namespace fse

#endif
