#ifndef R2PENCIL_ERRORS_HPP
#define R2PENCIL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace r2pencil {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A denominator factor evaluated to zero (exact backend) or below the
// pole floor (float backend).
struct PoleHit : Error {
    explicit PoleHit(const std::string& what) : Error(what) {}
};

struct NotDivisible : Error {
    explicit NotDivisible(const std::string& what) : Error(what) {}
};

struct NotExpressible : Error {
    explicit NotExpressible(const std::string& what) : Error(what) {}
};

struct RegularityViolation : Error {
    explicit RegularityViolation(const std::string& what) : Error(what) {}
};

struct ZeroFreeVariable : Error {
    explicit ZeroFreeVariable(const std::string& what) : Error(what) {}
};

struct NoConvergence : Error {
    NoConvergence(const std::string& what, double worst) : Error(what), worst_residual(worst) {}
    double worst_residual;
};

struct ParamOutOfRange : Error {
    explicit ParamOutOfRange(const std::string& what) : Error(what) {}
};

struct DegenerateMoments : Error {
    explicit DegenerateMoments(const std::string& what) : Error(what) {}
};

struct SpecialCaseViolation : Error {
    explicit SpecialCaseViolation(const std::string& what) : Error(what) {}
};

// A shift point z_hat for which some theta_j vanishes (or an eta
// denominator vanishes); carries the offending index.
struct InadmissibleShift : Error {
    InadmissibleShift(const std::string& what, int index) : Error(what), offending_index(index) {}
    int offending_index;
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error(what) {}
};

struct GenerationFailed : Error {
    explicit GenerationFailed(const std::string& what) : Error(what) {}
};

struct IoError : Error {
    explicit IoError(const std::string& what) : Error(what) {}
};

} // namespace r2pencil

#endif
