#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace catmate {

// Every failure carries a machine-readable kind and an optional witness
// (an object, morphism or tuple of ids) for reports.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg, std::string witness = {})
        : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)), witness_(std::move(witness)) {}

    const std::string& kind() const noexcept { return kind_; }
    const std::string& witness() const noexcept { return witness_; }

private:
    std::string kind_;
    std::string witness_;
};

#define CATMATE_DECLARE_ERROR(Name)                                          \
    class Name : public Error {                                              \
    public:                                                                  \
        explicit Name(const std::string& msg, std::string witness = {})      \
            : Error(#Name, msg, std::move(witness)) {}                       \
    };

// core
CATMATE_DECLARE_ERROR(SizeBudgetExceeded)
CATMATE_DECLARE_ERROR(MissingComposite)
CATMATE_DECLARE_ERROR(AssociativityViolation)
CATMATE_DECLARE_ERROR(IdentityViolation)
CATMATE_DECLARE_ERROR(DanglingId)
CATMATE_DECLARE_ERROR(DuplicateId)
CATMATE_DECLARE_ERROR(BadComposite)
CATMATE_DECLARE_ERROR(ShapeMismatch)
CATMATE_DECLARE_ERROR(NotAFunctor)
CATMATE_DECLARE_ERROR(NotNatural)

// adjunctions, mates, Beck-Chevalley
CATMATE_DECLARE_ERROR(TriangleFailure)
CATMATE_DECLARE_ERROR(NotMates)
CATMATE_DECLARE_ERROR(MissingAdjunction)

// localization
CATMATE_DECLARE_ERROR(NotHomotopical)
CATMATE_DECLARE_ERROR(UndecidedLocalization)
CATMATE_DECLARE_ERROR(NoInitialObject)

// derived functors
CATMATE_DECLARE_ERROR(QNotWeq)
CATMATE_DECLARE_ERROR(SquareFailure)
CATMATE_DECLARE_ERROR(HoQNotFunctorial)
CATMATE_DECLARE_ERROR(QNotFunctorial)
CATMATE_DECLARE_ERROR(PreconditionFailure)
CATMATE_DECLARE_ERROR(NoSolution)
CATMATE_DECLARE_ERROR(NoLeftAdjoint)
CATMATE_DECLARE_ERROR(CompositionHypothesisFailed)

// homotopy colimits
CATMATE_DECLARE_ERROR(MissingStructure)
CATMATE_DECLARE_ERROR(EndomorphismObstruction)
CATMATE_DECLARE_ERROR(NotFullyFaithful)
CATMATE_DECLARE_ERROR(NoObjectwiseIso)

// text format
CATMATE_DECLARE_ERROR(ValidationError)

#undef CATMATE_DECLARE_ERROR

class ParseError : public Error {
public:
    ParseError(int line, const std::string& msg)
        : Error("ParseError", "line " + std::to_string(line) + ": " + msg, std::to_string(line)), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

} // namespace catmate
