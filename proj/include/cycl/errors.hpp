// Error taxonomy shared across modules. The category drives CLI exit codes.

#pragma once

#include <stdexcept>
#include <string>

namespace cycl {

enum class ErrorClass { parse = 2, invariant = 3, axiom = 4, truncation = 5 };

struct Error : std::runtime_error {
    Error(ErrorClass cls, const std::string& what) : std::runtime_error(what), cls(cls) {}
    ErrorClass cls;
};

struct ParseError : Error {
    explicit ParseError(const std::string& w) : Error(ErrorClass::parse, w) {}
};

#define CYCL_INVARIANT_ERROR(NAME)                                         \
    struct NAME : Error {                                                  \
        explicit NAME(const std::string& w = #NAME)                        \
            : Error(ErrorClass::invariant, std::string(#NAME) + ": " + w) {} \
    }

CYCL_INVARIANT_ERROR(SingularMatrix);
CYCL_INVARIANT_ERROR(NotAComplex);
CYCL_INVARIANT_ERROR(DegreeMismatch);
CYCL_INVARIANT_ERROR(NotComposable);
CYCL_INVARIANT_ERROR(DegeneratePairing);
CYCL_INVARIANT_ERROR(MixedDegrees);
CYCL_INVARIANT_ERROR(NoSuchCoefficient);
CYCL_INVARIANT_ERROR(NotUpperTriangular);
CYCL_INVARIANT_ERROR(ViolatesExceptionality);
CYCL_INVARIANT_ERROR(NotWellDefinedOnClasses);
CYCL_INVARIANT_ERROR(MultiObjectUnsupported);
CYCL_INVARIANT_ERROR(NonConstantForm);

#undef CYCL_INVARIANT_ERROR

struct ExplosionGuard : Error {
    explicit ExplosionGuard(const std::string& w)
        : Error(ErrorClass::truncation, "ExplosionGuard: " + w) {}
};

}  // namespace cycl
