#pragma once

#include <stdexcept>

namespace slocc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error { using Error::Error; };
struct ZeroVector : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct SingularOperator : Error { using Error::Error; };
struct UnknownName : Error { using Error::Error; };
struct MissingParams : Error { using Error::Error; };
struct IdenticallyZero : Error { using Error::Error; };
struct DegenerateTriple : Error { using Error::Error; };
struct DegenerateConfiguration : Error { using Error::Error; };
struct DegenerateLambda : Error { using Error::Error; };
struct DegenerateRoots : Error { using Error::Error; };
struct FourthPointMismatch : Error { using Error::Error; };
struct NonGeneric : Error { using Error::Error; };
struct ZeroTuple : Error { using Error::Error; };

}  // namespace slocc
