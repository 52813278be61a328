#pragma once

#include <stdexcept>
#include <string>

namespace lieposet {

// Base for all validation and precondition failures. `kind()` is the stable
// machine-readable tag; what() carries the human-readable detail.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& detail)
        : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define LIEPOSET_DEFINE_ERROR(Name)                                  \
    class Name : public Error {                                      \
    public:                                                          \
        explicit Name(const std::string& detail) : Error(#Name, detail) {} \
    }

LIEPOSET_DEFINE_ERROR(NonSquare);
LIEPOSET_DEFINE_ERROR(OrderViolation);
LIEPOSET_DEFINE_ERROR(CoverViolation);
LIEPOSET_DEFINE_ERROR(ZeroRelation);
LIEPOSET_DEFINE_ERROR(GroundSetViolation);
LIEPOSET_DEFINE_ERROR(HeightError);
LIEPOSET_DEFINE_ERROR(SeparableInput);
LIEPOSET_DEFINE_ERROR(NotConnected);
LIEPOSET_DEFINE_ERROR(NoEvenCycle);
LIEPOSET_DEFINE_ERROR(EvenCycleObstruction);
LIEPOSET_DEFINE_ERROR(ClosureViolation);
LIEPOSET_DEFINE_ERROR(EvenDimension);
LIEPOSET_DEFINE_ERROR(NotTree);
LIEPOSET_DEFINE_ERROR(TrivialGraph);
LIEPOSET_DEFINE_ERROR(TooManyRows);
LIEPOSET_DEFINE_ERROR(InconsistencyError);

#undef LIEPOSET_DEFINE_ERROR

}  // namespace lieposet
