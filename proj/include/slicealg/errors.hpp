#pragma once

#include <stdexcept>
#include <string>

namespace slicealg {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Two elements belong to different algebra specs.
struct AlgebraMismatch : Error {
    explicit AlgebraMismatch(const std::string& msg = "elements belong to different algebras")
        : Error(msg) {}
};

/// An algebra table failed structural validation; the report lists every failure.
struct ValidationFailure : Error {
    explicit ValidationFailure(const std::string& msg) : Error(msg) {}
};

struct NotInQuadraticCone : Error {
    explicit NotInQuadraticCone(const std::string& msg = "element is not in the quadratic cone")
        : Error(msg) {}
};

struct NotSqrtMinusOne : Error {
    explicit NotSqrtMinusOne(const std::string& msg = "element is not a square root of -1")
        : Error(msg) {}
};

struct Singular : Error {
    explicit Singular(const std::string& msg = "element has no inverse within tolerance")
        : Error(msg) {}
};

struct NotAZeroDivisor : Error {
    explicit NotAZeroDivisor(const std::string& msg = "cn(w) does not vanish") : Error(msg) {}
};

struct DegenerateY : Error {
    explicit DegenerateY(const std::string& msg = "imaginary part has no real nonzero norm")
        : Error(msg) {}
};

struct OutOfDomain : Error {
    explicit OutOfDomain(const std::string& msg = "point lies outside the stem domain")
        : Error(msg) {}
};

struct RealPointForDerivative : Error {
    explicit RealPointForDerivative(
        const std::string& msg = "spherical derivative is undefined at real points")
        : Error(msg) {}
};

struct MissingDerivativeCallback : Error {
    explicit MissingDerivativeCallback(
        const std::string& msg = "stem closure does not provide the requested derivative")
        : Error(msg) {}
};

struct NonRealNormal : Error {
    explicit NonRealNormal(const std::string& msg = "normal polynomial has a non-real coefficient")
        : Error(msg) {}
};

struct NotAdmissible : Error {
    explicit NotAdmissible(const std::string& msg = "slice function is not admissible")
        : Error(msg) {}
};

struct NoConvergence : Error {
    explicit NoConvergence(const std::string& msg = "root iteration did not converge")
        : Error(msg) {}
};

struct NotARoot : Error {
    explicit NotARoot(const std::string& msg = "parameter is not a root of the normal polynomial")
        : Error(msg) {}
};

struct NonZeroRemainder : Error {
    explicit NonZeroRemainder(const std::string& msg = "division left a non-zero remainder")
        : Error(msg) {}
};

struct OddRealMultiplicity : Error {
    explicit OddRealMultiplicity(
        const std::string& msg = "real root of the normal polynomial has odd multiplicity")
        : Error(msg) {}
};

struct DegreeMismatch : Error {
    explicit DegreeMismatch(const std::string& msg = "multiplicities do not sum to the degree")
        : Error(msg) {}
};

struct OnSingularSphere : Error {
    explicit OnSingularSphere(const std::string& msg = "evaluation point lies on the kernel's singular sphere")
        : Error(msg) {}
};

struct NotSliceRegular : Error {
    explicit NotSliceRegular(const std::string& msg = "stem function is not holomorphic")
        : Error(msg) {}
};

struct OutsideDomain : Error {
    explicit OutsideDomain(const std::string& msg = "evaluation point is outside the contour domain")
        : Error(msg) {}
};

struct NonAssociativeOffSlice : Error {
    explicit NonAssociativeOffSlice(
        const std::string& msg =
            "off-slice evaluation requires an associative algebra or a real integrand")
        : Error(msg) {}
};

/// Internal consistency check failed (two algebraic routes disagreed).
struct NumericalError : Error {
    explicit NumericalError(const std::string& msg) : Error(msg) {}
};

}  // namespace slicealg
