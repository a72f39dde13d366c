#ifndef CURVEDIFF_ERRORS_HPP
#define CURVEDIFF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace curvediff {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// The tangent vector is isotropic everywhere: dx^2 + dy^2 vanishes identically.
struct IsotropicLineError : Error {
    IsotropicLineError() : Error("curve has identically isotropic tangent") {}
};

struct LineHasNoEvoluteError : Error {
    LineHasNoEvoluteError() : Error("a straight line has no evolute") {}
};

// Involutes requested for a curve whose arc-length integral is not algebraic.
struct NotRectifiableError : Error {
    explicit NotRectifiableError(const std::string& detail)
        : Error("curve is not algebraically rectifiable: " + detail) {}
};

struct ZeroCubicDifferentialError : Error {
    ZeroCubicDifferentialError() : Error("cubic differential vanishes identically (straight line)") {}
};

// Q(i) factor splitting beyond linear/quadratic classes is out of reach.
struct UnsupportedError : Error {
    explicit UnsupportedError(const std::string& detail) : Error("unsupported: " + detail) {}
};

struct DegenerateCurveError : Error {
    explicit DegenerateCurveError(const std::string& detail) : Error(detail) {}
};

} // namespace curvediff

#endif
