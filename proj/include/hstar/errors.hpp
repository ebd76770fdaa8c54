#pragma once

#include <stdexcept>
#include <string>

namespace hstar {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularMatrixError : Error {
    SingularMatrixError() : Error("matrix is singular") {}
};

struct NotFullDimensionalError : Error {
    NotFullDimensionalError() : Error("polytope is not full-dimensional") {}
};

struct DegenerateInputError : Error {
    using Error::Error;
};

struct NonGenericError : Error {
    NonGenericError() : Error("point is not generic (zero coefficient)") {}
};

struct OutsideConeError : Error {
    OutsideConeError() : Error("point lies outside the cone") {}
};

struct WrongCorankError : Error {
    WrongCorankError() : Error("vector set does not have corank 1") {}
};

struct ExhaustedRetriesError : Error {
    using Error::Error;
};

struct GenericSearchFailedError : Error {
    using Error::Error;
};

struct InternalError : Error {
    using Error::Error;
};

struct InvalidInputError : Error {
    using Error::Error;
};

}  // namespace hstar
