#include "canal/functions.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "canal/errors.hpp"

namespace canal {

double fd_step(double x, double y) noexcept {
    return 1e-5 * std::max({1.0, std::abs(x), std::abs(y)});
}

UnivariateFunction::UnivariateFunction(Fn f, Fn d1, Fn d2)
    : f_(std::move(f)), d1_(std::move(d1)), d2_(std::move(d2)) {
    if (!f_) {
        throw DomainError("UnivariateFunction: value function is required");
    }
}

double UnivariateFunction::d1(double u) const {
    if (d1_) return d1_(u);
    const double h = fd_step(u);
    return (f_(u + h) - f_(u - h)) / (2.0 * h);
}

double UnivariateFunction::d2(double u) const {
    if (d2_) return d2_(u);
    if (d1_) {
        const double h = fd_step(u);
        return (d1_(u + h) - d1_(u - h)) / (2.0 * h);
    }
    // Second difference needs a larger step to keep round-off below truncation.
    const double h = 1e-4 * std::max(1.0, std::abs(u));
    return (f_(u + h) - 2.0 * f_(u) + f_(u - h)) / (h * h);
}

UnivariateFunction polynomial(std::vector<double> coefficients) {
    if (coefficients.empty()) {
        throw DomainError("polynomial: at least one coefficient is required");
    }
    auto eval = [](const std::vector<double>& c, double u) {
        double acc = 0.0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * u + *it;
        return acc;
    };
    std::vector<double> d1;
    for (std::size_t i = 1; i < coefficients.size(); ++i) {
        d1.push_back(static_cast<double>(i) * coefficients[i]);
    }
    std::vector<double> d2;
    for (std::size_t i = 1; i < d1.size(); ++i) {
        d2.push_back(static_cast<double>(i) * d1[i]);
    }
    return UnivariateFunction(
        [c = std::move(coefficients), eval](double u) { return eval(c, u); },
        [c = std::move(d1), eval](double u) { return eval(c, u); },
        [c = std::move(d2), eval](double u) { return eval(c, u); });
}

BivariateFunction::BivariateFunction(Fn f, Fn du, Fn dv)
    : f_(std::move(f)), du_(std::move(du)), dv_(std::move(dv)) {
    if (!f_) {
        throw DomainError("BivariateFunction: value function is required");
    }
}

double BivariateFunction::du(double u, double v) const {
    if (du_) return du_(u, v);
    const double h = fd_step(u, v);
    return (f_(u + h, v) - f_(u - h, v)) / (2.0 * h);
}

double BivariateFunction::dv(double u, double v) const {
    if (dv_) return dv_(u, v);
    const double h = fd_step(u, v);
    return (f_(u, v + h) - f_(u, v - h)) / (2.0 * h);
}

BivariateFunction exponential_field(double c, double lambda_u, double mu_v) {
    if (c == 0.0) {
        throw DomainError("exponential_field: c must be non-zero");
    }
    auto f = [=](double u, double v) { return c * std::exp(lambda_u * u + mu_v * v); };
    return BivariateFunction(
        f, [=](double u, double v) { return lambda_u * f(u, v); },
        [=](double u, double v) { return mu_v * f(u, v); });
}

BivariateFunction affine_field(double c, double lambda_u, double mu_v) {
    return BivariateFunction([=](double u, double v) { return c + lambda_u * u + mu_v * v; },
                             [=](double, double) { return lambda_u; },
                             [=](double, double) { return mu_v; });
}

}  // namespace canal
