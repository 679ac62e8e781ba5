#pragma once

#include <stdexcept>
#include <string>

namespace cstarinv {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ShapeMismatch : Error {
    explicit ShapeMismatch(const std::string& what) : Error("shape mismatch: " + what) {}
};

struct CornerSupportViolation : Error {
    explicit CornerSupportViolation(const std::string& what)
        : Error("corner support violation: " + what) {}
};

struct NotSolvable : Error {
    double residual;
    explicit NotSolvable(double r)
        : Error("Douglas equation not solvable: range-inclusion residual " + std::to_string(r)),
          residual(r) {}
};

struct NotInvariant : Error {
    double residual;
    explicit NotInvariant(double r)
        : Error("submodule is not invariant: residual " + std::to_string(r)), residual(r) {}
};

struct PreconditionFailed : Error {
    explicit PreconditionFailed(const std::string& what)
        : Error("precondition failed: " + what) {}
};

struct NotSpectral : Error {
    explicit NotSpectral(const std::string& what) : Error("not a spectral point: " + what) {}
};

struct NotUnitary : Error {
    explicit NotUnitary(const std::string& what) : Error("not unitary: " + what) {}
};

struct ScalarOperator : Error {
    ScalarOperator() : Error("operator is a scalar multiple of the identity") {}
};

struct ZeroOperator : Error {
    ZeroOperator() : Error("operator is zero") {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

struct ValidationError : Error {
    explicit ValidationError(const std::string& what) : Error("validation error: " + what) {}
};

struct UnknownName : Error {
    explicit UnknownName(const std::string& name) : Error("unknown name: " + name) {}
};

}  // namespace cstarinv
