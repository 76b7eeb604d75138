#ifndef SRS_ERRORS_HPP
#define SRS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace srs {

// Base class for all engine errors. Anything derived from this is a
// *diagnosed* condition (bad input, unsatisfied precondition, refused
// operation) as opposed to an internal logic fault, which uses assert.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct VariableMismatch : Error {
    explicit VariableMismatch(const std::string& w) : Error(w) {}
};

struct PoleAtCompositionPoint : Error {
    explicit PoleAtCompositionPoint(const std::string& w) : Error(w) {}
};

struct DivisionByZeroExpression : Error {
    explicit DivisionByZeroExpression(const std::string& w) : Error(w) {}
};

// Parse errors carry a byte offset into the source text.
struct SyntaxError : Error {
    std::size_t position;
    SyntaxError(const std::string& w, std::size_t pos)
        : Error(w + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

struct ChartMismatch : Error {
    explicit ChartMismatch(const std::string& w) : Error(w) {}
};

struct NonNilpotentShift : Error {
    explicit NonNilpotentShift(const std::string& w) : Error(w) {}
};

struct NonInvertibleBody : Error {
    explicit NonInvertibleBody(const std::string& w) : Error(w) {}
};

struct VanishingZeta : Error {
    explicit VanishingZeta(const std::string& w) : Error(w) {}
};

struct NonTerminatingRuleSet : Error {
    explicit NonTerminatingRuleSet(const std::string& w) : Error(w) {}
};

struct UnknownSuite : Error {
    explicit UnknownSuite(const std::string& w) : Error(w) {}
};

struct DegreeOverflow : Error {
    explicit DegreeOverflow(const std::string& w) : Error(w) {}
};

struct NotACocycle : Error {
    explicit NotACocycle(const std::string& w) : Error(w) {}
};

struct BracketObstruction : Error {
    explicit BracketObstruction(const std::string& w) : Error(w) {}
};

struct SpinRelationViolated : Error {
    explicit SpinRelationViolated(const std::string& w) : Error(w) {}
};

struct UnsupportedOrder : Error {
    explicit UnsupportedOrder(const std::string& w) : Error(w) {}
};

// Raised when an exact solve is requested on a cover the solver does not
// model (the coboundary solver is defined on the standard two-chart cover).
struct UnsupportedCover : Error {
    explicit UnsupportedCover(const std::string& w) : Error(w) {}
};

} // namespace srs

#endif
