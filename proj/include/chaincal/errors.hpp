/**
 * Domain error types. Each operation documents which of these it can
 * raise; the CLI maps them to exit code 2 with the type name in the
 * message.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace chaincal {

struct DomainError : std::runtime_error {
    DomainError(const std::string& kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(kind) {}
    const std::string& kind() const { return kind_; }
private:
    std::string kind_;
};

#define CHAINCAL_ERROR(Name)                                             \
    struct Name : DomainError {                                          \
        explicit Name(const std::string& what = "")                      \
            : DomainError(#Name, what) {}                                \
    }

CHAINCAL_ERROR(ZeroDimBoundary);
CHAINCAL_ERROR(NonGenericRadius);
CHAINCAL_ERROR(NotACycle);
CHAINCAL_ERROR(NotCellular);
CHAINCAL_ERROR(DimensionOutOfRange);
CHAINCAL_ERROR(SubNotContained);
CHAINCAL_ERROR(ArityMismatch);
CHAINCAL_ERROR(EmptyBBox);
CHAINCAL_ERROR(BBoxOverflow);
CHAINCAL_ERROR(EmptySet);
CHAINCAL_ERROR(CenterSingularity);
CHAINCAL_ERROR(OffsetSearchExhausted);
CHAINCAL_ERROR(OffsetConflict);
CHAINCAL_ERROR(DimensionMismatch);
CHAINCAL_ERROR(NotSubcomplex);
CHAINCAL_ERROR(NotFull);
CHAINCAL_ERROR(OutsideNeighborhood);
CHAINCAL_ERROR(SupportEscapesNeighborhood);
CHAINCAL_ERROR(SolverLimit);
CHAINCAL_ERROR(NotInComplex);
CHAINCAL_ERROR(UnrepresentableWeight);
CHAINCAL_ERROR(ParseError);

#undef CHAINCAL_ERROR

}  // namespace chaincal
