#pragma once

#include <stdexcept>
#include <string>
#include <vector>

// Error taxonomy for the whole library. Everything numerical-failure-like
// derives from NumericalError so the CLI can map it to a distinct exit code;
// misuse of an API (bad dimensions, unknown ids) derives from UsageError.

namespace injcheck {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnknownId : UsageError {
    explicit UnknownId(const std::string& id)
        : UsageError("unknown builtin map id: " + id) {}
};

struct BadParams : UsageError {
    using UsageError::UsageError;
};

struct DimensionMismatch : UsageError {
    DimensionMismatch(std::size_t got, std::size_t want)
        : UsageError("dimension mismatch: got " + std::to_string(got) +
                     ", expected " + std::to_string(want)) {}
    explicit DimensionMismatch(const std::string& what) : UsageError(what) {}
};

struct SyntaxError : UsageError {
    std::size_t position;
    std::string expected;
    SyntaxError(std::size_t pos, const std::string& exp)
        : UsageError("syntax error at position " + std::to_string(pos) +
                     ": expected " + exp),
          position(pos),
          expected(exp) {}
};

struct UnknownIdentifier : UsageError {
    std::string name;
    explicit UnknownIdentifier(const std::string& n)
        : UsageError("unknown identifier: " + n), name(n) {}
};

struct NonFiniteValue : NumericalError {
    int component;
    explicit NonFiniteValue(int comp)
        : NumericalError("non-finite value in component " +
                         std::to_string(comp)),
          component(comp) {}
};

struct NoConvergence : NumericalError {
    double best_residual;
    explicit NoConvergence(const std::string& what, double best = -1.0)
        : NumericalError(what), best_residual(best) {}
};

struct NotSymmetric : UsageError {
    using UsageError::UsageError;
};

struct ZeroVector : UsageError {
    ZeroVector() : UsageError("Rayleigh quotient of the zero vector") {}
};

struct GridTooLarge : UsageError {
    explicit GridTooLarge(double points)
        : UsageError("grid would evaluate " + std::to_string(points) +
                     " points (cap 1e7)") {}
};

struct SingularAtZero : NumericalError {
    SingularAtZero()
        : NumericalError("I'(0) is numerically singular; the eigenvalue "
                         "hypothesis fails at x1") {}
};

struct RingNotSeparating : UsageError {
    RingNotSeparating()
        : UsageError("sphere radius does not separate 0 from x0") {}
};

struct NonPositiveAlpha : NumericalError {
    explicit NonPositiveAlpha(double j)
        : NumericalError("ring level is not positive: sampled J = " +
                         std::to_string(j)) {}
};

struct DegeneratePath : UsageError {
    DegeneratePath() : UsageError("path endpoints coincide") {}
};

struct EndpointNotLow : UsageError {
    EndpointNotLow(double j, double tol)
        : UsageError("endpoint merit value " + std::to_string(j) +
                     " exceeds endpoint tolerance " + std::to_string(tol)) {}
};

struct EmptyTrace : UsageError {
    EmptyTrace() : UsageError("PS trace is empty") {}
};

struct NotACriticalRing : UsageError {
    explicit NotACriticalRing(const std::string& what) : UsageError(what) {}
};

struct SingularJacobian : NumericalError {
    std::vector<double> at;
    explicit SingularJacobian(std::vector<double> x)
        : NumericalError("Jacobian numerically singular"), at(std::move(x)) {}
};

}  // namespace injcheck
