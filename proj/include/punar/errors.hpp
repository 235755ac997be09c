#pragma once

#include <stdexcept>
#include <string>

namespace punar {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define PUNAR_DEFINE_ERROR(Name)                                       \
    struct Name : Error {                                               \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

PUNAR_DEFINE_ERROR(NotTotallyReal);
PUNAR_DEFINE_ERROR(ReduciblePolynomial);
PUNAR_DEFINE_ERROR(BasisNotUnimodular);
PUNAR_DEFINE_ERROR(ZeroElement);
PUNAR_DEFINE_ERROR(NotTotallyPositive);
PUNAR_DEFINE_ERROR(PrecisionExhausted);
PUNAR_DEFINE_ERROR(DependentUnits);
PUNAR_DEFINE_ERROR(NotAUnit);
PUNAR_DEFINE_ERROR(WrongCount);
PUNAR_DEFINE_ERROR(DegenerateDirection);
PUNAR_DEFINE_ERROR(UnboundedDirection);
PUNAR_DEFINE_ERROR(NotFullDimensional);
PUNAR_DEFINE_ERROR(DomainTooSmall);
PUNAR_DEFINE_ERROR(LimitExceeded);
PUNAR_DEFINE_ERROR(SingularMatrix);
PUNAR_DEFINE_ERROR(InputError);

#undef PUNAR_DEFINE_ERROR

} // namespace punar
