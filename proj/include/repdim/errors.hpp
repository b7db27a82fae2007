#pragma once

#include <stdexcept>
#include <string>

namespace repdim {

enum class ErrorCode {
    ShapeMismatch,
    AlgebraMismatch,
    InvalidRelation,
    AdmissibilityViolated,
    UnknownArrow,
    NotStringAlgebra,
    NotSerialType,
    NotApplicable,
    SocleNotTwoSidedIdeal,
    CharacteristicTooSmall,
    DatumInvalid,
    VerificationFailed,
    SummandNotInAddM,
    CapExceeded,
    DecompositionUndecided,
    NotQuasiHereditaryForOrder,
    SyntaxError,
    UnknownSymbol,
    DuplicateLabel,
    RelationViolated,
    InvalidArgument,
    PathExplosion,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

inline void check(bool cond, ErrorCode code, const std::string& msg) {
    if (!cond)
        throw Error(code, msg);
}

// Internal consistency assertion: firing means a bug, not bad input.
inline void verify_internal(bool cond, const std::string& msg) {
    check(cond, ErrorCode::VerificationFailed, "internal verification failed: " + msg);
}

}  // namespace repdim
