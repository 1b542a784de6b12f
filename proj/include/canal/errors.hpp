#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace canal {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain where an operation is defined
/// (wrong causal regime, vanishing denominator, parameter outside its interval).
class DomainError : public Error {
public:
    using Error::Error;
};

/// The first fundamental form is degenerate at a point.
class DegenerateError : public Error {
public:
    DegenerateError(const std::string& what, double u, double v)
        : Error(what), u_(u), v_(v) {}
    double u() const noexcept { return u_; }
    double v() const noexcept { return v_; }

private:
    double u_;
    double v_;
};

/// A supplied frame failed its orthonormality audit.
class FrameAuditError : public Error {
public:
    FrameAuditError(const std::string& what, double worst_u, double residual)
        : Error(what), worst_u_(worst_u), residual_(residual) {}
    double worst_u() const noexcept { return worst_u_; }
    double residual() const noexcept { return residual_; }

private:
    double worst_u_;
    double residual_;
};

/// Failures raised while assembling or integrating a loxodrome ODE.
/// Carries the parameter u at which the failure happened.
class LoxodromeError : public Error {
public:
    LoxodromeError(const std::string& what, double u) : Error(what), u_(u) {}
    double u() const noexcept { return u_; }

private:
    double u_;
};

/// The surface regime at a point differs from the regime the problem was set up for.
class RegimeMismatchError : public LoxodromeError {
public:
    using LoxodromeError::LoxodromeError;
};

/// The slope quadratic has negative discriminant.
class NoRealRootError : public LoxodromeError {
public:
    using LoxodromeError::LoxodromeError;
};

/// The loxodrome tangent is parallel to C_v; v cannot be written as a function of u.
class TangentToVError : public LoxodromeError {
public:
    using LoxodromeError::LoxodromeError;
};

/// The integrated curve left the admissible v interval.
class StepError : public LoxodromeError {
public:
    using LoxodromeError::LoxodromeError;
};

/// Invalid run configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace canal
