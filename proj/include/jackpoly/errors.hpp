#pragma once

#include <stdexcept>
#include <string>

namespace jackpoly {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define JACKPOLY_ERROR(Name)                                        \
    struct Name : Error {                                           \
        explicit Name(const std::string& msg = #Name) : Error(msg) {} \
    }

JACKPOLY_ERROR(DivisionByZero);
JACKPOLY_ERROR(PoleAtTheta);
JACKPOLY_ERROR(InvalidInput);
JACKPOLY_ERROR(WeightMismatch);
JACKPOLY_ERROR(CellOutOfDiagram);
JACKPOLY_ERROR(NotInFatHook);
JACKPOLY_ERROR(UnsupportedHere);
JACKPOLY_ERROR(NotContained);
JACKPOLY_ERROR(NonGenericTheta);
JACKPOLY_ERROR(TooFewVariables);
JACKPOLY_ERROR(InvalidStep);
JACKPOLY_ERROR(InternalInconsistency);
JACKPOLY_ERROR(InvariantViolation);
JACKPOLY_ERROR(NotInAlgebra);

#undef JACKPOLY_ERROR

} // namespace jackpoly
