#pragma once

#include <functional>
#include <optional>
#include <vector>

namespace canal {

/// Smooth real function of one variable with first and second derivatives.
/// Derivatives not supplied analytically are filled by central differences.
class UnivariateFunction {
public:
    using Fn = std::function<double(double)>;

    UnivariateFunction() = default;
    explicit UnivariateFunction(Fn f, Fn d1 = {}, Fn d2 = {});

    double operator()(double u) const { return f_(u); }
    double d1(double u) const;
    double d2(double u) const;

    bool has_analytic_d1() const noexcept { return static_cast<bool>(d1_); }
    bool has_analytic_d2() const noexcept { return static_cast<bool>(d2_); }
    explicit operator bool() const noexcept { return static_cast<bool>(f_); }

private:
    Fn f_;
    Fn d1_;
    Fn d2_;
};

/// c[0] + c[1] u + c[2] u^2 + ...
UnivariateFunction polynomial(std::vector<double> coefficients);

/// Smooth real function b(u, v) with partials b_u and b_v.
class BivariateFunction {
public:
    using Fn = std::function<double(double, double)>;

    BivariateFunction() = default;
    explicit BivariateFunction(Fn f, Fn du = {}, Fn dv = {});

    double operator()(double u, double v) const { return f_(u, v); }
    double du(double u, double v) const;
    double dv(double u, double v) const;

    /// True when at least one partial comes from central differences.
    bool numeric_partials() const noexcept { return !du_ || !dv_; }
    explicit operator bool() const noexcept { return static_cast<bool>(f_); }

private:
    Fn f_;
    Fn du_;
    Fn dv_;
};

/// c * exp(lambda_u * u + mu_v * v). With lambda_u = 0, mu_v = 1 this is c e^v.
BivariateFunction exponential_field(double c, double lambda_u = 0.0, double mu_v = 1.0);

/// c + lambda_u * u + mu_v * v. With lambda_u = 0, mu_v = 1 this is v + c.
BivariateFunction affine_field(double c, double lambda_u = 0.0, double mu_v = 1.0);

/// Central-difference step used throughout: 1e-5 * max(1, |x|, |y|).
double fd_step(double x, double y = 0.0) noexcept;

}  // namespace canal
