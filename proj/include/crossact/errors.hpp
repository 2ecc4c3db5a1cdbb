#pragma once

#include <stdexcept>
#include <string>

namespace crossact {

// Every library error carries a short kind tag and the first failing instance.
class Error : public std::runtime_error {
public:
    Error(std::string kind, std::string witness)
        : std::runtime_error(kind + ": " + witness), kind_(std::move(kind)), witness_(std::move(witness)) {}
    const std::string& kind() const { return kind_; }
    const std::string& witness() const { return witness_; }

private:
    std::string kind_;
    std::string witness_;
};

#define CROSSACT_ERROR(Name)                                                        \
    class Name : public Error {                                                     \
    public:                                                                         \
        explicit Name(std::string witness) : Error(#Name, std::move(witness)) {}    \
    }

CROSSACT_ERROR(DivisionByZero);
CROSSACT_ERROR(ConductorMismatch);
CROSSACT_ERROR(ParseError);
CROSSACT_ERROR(NotAGroup);
CROSSACT_ERROR(NotAHom);
CROSSACT_ERROR(SizeBound);
CROSSACT_ERROR(IndexOutOfRange);
CROSSACT_ERROR(NotAnAction);
CROSSACT_ERROR(MatchedPairViolation);
CROSSACT_ERROR(NotExactFactorization);
CROSSACT_ERROR(FactorizationFailure);
CROSSACT_ERROR(NotStable);
CROSSACT_ERROR(CocycleViolation);
CROSSACT_ERROR(ZeroValue);
CROSSACT_ERROR(SearchBudgetExceeded);
CROSSACT_ERROR(NoAntipode);
CROSSACT_ERROR(NotUnique);
CROSSACT_ERROR(NotAModule);
CROSSACT_ERROR(NotQuasitriangular);
CROSSACT_ERROR(NotEquivariant);
CROSSACT_ERROR(ShapeMismatch);
CROSSACT_ERROR(NotInvertible);
CROSSACT_ERROR(NotAMorphism);
CROSSACT_ERROR(HexagonViolation);
CROSSACT_ERROR(NaturalityViolation);
CROSSACT_ERROR(ConditionViolation);
CROSSACT_ERROR(ReformulationMismatch);
CROSSACT_ERROR(NotBijective);
CROSSACT_ERROR(InternalError);

#undef CROSSACT_ERROR

}  // namespace crossact
