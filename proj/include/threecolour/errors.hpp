#ifndef THREECOLOUR_ERRORS_HPP
#define THREECOLOUR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace threecolour {

// Base for all library errors so callers can catch one type at the CLI edge.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotDivisible : Error {
    explicit NotDivisible(const std::string& msg) : Error(msg) {}
};
// Refusal to run an exponential enumeration past the size guard without the
// explicit override flag.
struct SizeGuard : Error {
    explicit SizeGuard(const std::string& msg) : Error(msg) {}
};
struct Inconsistent : Error {
    explicit Inconsistent(const std::string& msg) : Error(msg) {}
};
struct ValuationMismatch : Error {
    explicit ValuationMismatch(const std::string& msg) : Error(msg) {}
};
struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& msg) : Error(msg) {}
};
struct DegenerateCoefficient : Error {
    explicit DegenerateCoefficient(const std::string& msg) : Error(msg) {}
};
struct AmbiguousNormalization : Error {
    explicit AmbiguousNormalization(const std::string& msg) : Error(msg) {}
};
struct NotMonic : Error {
    explicit NotMonic(const std::string& msg) : Error(msg) {}
};
struct NonIntegerCoefficient : Error {
    explicit NonIntegerCoefficient(const std::string& msg) : Error(msg) {}
};
struct NegativeCoefficient : Error {
    explicit NegativeCoefficient(const std::string& msg) : Error(msg) {}
};
struct NomeOutOfRange : Error {
    explicit NomeOutOfRange(const std::string& msg) : Error(msg) {}
};
struct ZeroArgument : Error {
    explicit ZeroArgument(const std::string& msg) : Error(msg) {}
};
struct PoleProximity : Error {
    explicit PoleProximity(const std::string& msg) : Error(msg) {}
};
// A cross-check between quantities that must agree exactly came out with a
// residual above tolerance; the message carries the residual.
struct IdentityViolation : Error {
    explicit IdentityViolation(const std::string& msg) : Error(msg) {}
};
struct NoPositiveRoot : Error {
    explicit NoPositiveRoot(const std::string& msg) : Error(msg) {}
};
struct NonPositiveEvaluation : Error {
    explicit NonPositiveEvaluation(const std::string& msg) : Error(msg) {}
};

} // namespace threecolour

#endif
