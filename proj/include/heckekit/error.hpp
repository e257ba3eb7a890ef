#pragma once

#include <stdexcept>
#include <string>

namespace heckekit {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
    virtual const char* kind() const noexcept { return "Error"; }
};

#define HECKEKIT_ERROR(Name)                                               \
    class Name : public Error {                                            \
    public:                                                                \
        explicit Name(const std::string& what) : Error(what) {}            \
        const char* kind() const noexcept override { return #Name; }       \
    };

HECKEKIT_ERROR(NotInvertible)
HECKEKIT_ERROR(NotPrime)
HECKEKIT_ERROR(NotInCell)
HECKEKIT_ERROR(ConventionUnavailable)
HECKEKIT_ERROR(InvalidModulus)
HECKEKIT_ERROR(InvalidParameters)
HECKEKIT_ERROR(LengthMismatch)
HECKEKIT_ERROR(PoleError)
HECKEKIT_ERROR(FamilyError)
HECKEKIT_ERROR(DomainError)
HECKEKIT_ERROR(PathError)
HECKEKIT_ERROR(SingularParameter)
HECKEKIT_ERROR(TailError)
HECKEKIT_ERROR(UnknownIdentity)

#undef HECKEKIT_ERROR

} // namespace heckekit
