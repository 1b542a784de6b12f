#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "canal/interval.hpp"
#include "canal/lorentz.hpp"
#include "canal/surface.hpp"

namespace canal {

/// Which root of the slope quadratic starts the integration. PlusRoot is the
/// larger root, MinusRoot the smaller; afterwards the root nearest the previous
/// slope is followed.
enum class Branch { PlusRoot, MinusRoot };

std::string_view to_string(Branch b) noexcept;
/// Accepts "plus"/"minus" and "PlusRoot"/"MinusRoot".
std::optional<Branch> parse_branch(std::string_view s) noexcept;

/// Angle kind measured in each regime: cos, cosh, sinh respectively.
AngleKind angle_kind_for(SurfaceRegime r) noexcept;

struct LoxodromeProblem {
    CanalSurface surface;
    SurfaceRegime regime;
    LorentzAngle angle;
    double u0 = 0.0;
    double v0 = 0.0;
    Interval u_span;
    Branch branch = Branch::PlusRoot;
    double step = 1e-4;
    FormVariant variant = FormVariant::Corrected;
};

/// The ODE reads A y^2 + B y - Cc = 0 with y = dv/du.
struct OdeCoefficients {
    double A = 0.0;
    double B = 0.0;
    double Cc = 0.0;

    double residual(double y) const noexcept { return A * y * y + B * y - Cc; }
};

/// Thresholds of the slope solver, relative to max(|A|, |B|, |Cc|).
inline constexpr double kLinearThreshold = 1e-12;
inline constexpr double kDoubleRootThreshold = 1e-14;

/// Regime-specific coefficients built from the closed-form E, F, G.
/// RegimeMismatchError when the form at (u, v) classifies differently from
/// p.regime (or is degenerate); DomainError when the angle kind does not suit the regime.
OdeCoefficients ode_coefficients(const LoxodromeProblem& p, double u, double v);

/// Real roots of A y^2 + B y - Cc = 0, ascending. One entry for the linear and
/// double-root cases. NoRealRootError / TangentToVError as for slope (u labels them).
std::vector<double> slope_roots(const OdeCoefficients& c, double u);

/// dv/du at (u, v): the root nearest y_prev when given, otherwise the root
/// picked by p.branch.
double slope(const LoxodromeProblem& p, double u, double v, std::optional<double> y_prev = {});

struct LoxodromeSample {
    double u = 0.0;
    double v = 0.0;
    double y = 0.0;  ///< dv/du
    MVec3 point;
    /// Angle between C_u and C_u + y C_v from the Lorentzian angle functions.
    double measured_angle = 0.0;
    /// Same angle from (E + F y) / sqrt|E (E + 2F y + G y^2)|.
    double formula_angle = 0.0;
};

struct LoxodromeSolution {
    std::vector<LoxodromeSample> samples;  ///< strictly increasing in u
    double arc_length = 0.0;
    double target_angle = 0.0;    ///< the angle measurements are compared with
    double max_angle_error = 0.0;
    double worst_u = 0.0;
    double max_route_gap = 0.0;   ///< max |measured_angle - formula_angle|
};

/// Parameter values visited by integrate: the step is shrunk to
/// width / ceil(width / step) on each side of u0 so both ends are hit exactly.
std::vector<double> integration_grid(const Interval& u_span, double u0, double step);

/// Classical RK4 from u0 outward to both ends of u_span. The arc length is
/// accumulated per step by Simpson's rule on sqrt|E + 2F y + G y^2|.
/// Throws RegimeMismatchError, NoRealRootError, TangentToVError (with the u of
/// failure), StepError when v leaves the v domain, DomainError for invalid input.
LoxodromeSolution integrate(const LoxodromeProblem& p);

/// Angle the measurements should reproduce. The space-like ODE cannot tell psi
/// from pi - psi, and the measurement orients the tangent along C_u, so it
/// compares against min(psi, pi - psi).
double effective_target(const LorentzAngle& target) noexcept;

struct AngleReport {
    bool passes = false;
    int samples = 0;
    double max_error = 0.0;
    double worst_u = 0.0;
    double worst_v = 0.0;
    double tolerance = 0.0;
};

AngleReport verify_constant_angle(const LoxodromeSolution& sol, const LorentzAngle& target,
                                  double tolerance);

/// Independent arc length: composite Simpson at 4x the sample density, with v
/// from Hermite interpolation of the samples, the slope re-solved and E, F, G
/// taken from finite differences of position.
double arc_length_oracle(const LoxodromeProblem& p, const LoxodromeSolution& sol);

}  // namespace canal
