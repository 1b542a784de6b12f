#pragma once

#include <optional>
#include <string_view>

#include "canal/frame.hpp"
#include "canal/functions.hpp"
#include "canal/interval.hpp"
#include "canal/lorentz.hpp"

namespace canal {

/// The seven non-degenerate canal-surface parametrizations.
///
///   F1  C = a + hT + g m1 sinh v N + g m2 cosh v B        g = r sqrt(1+r'^2), h = r r'
///   F2  C = a + hT + g m1 cosh v N + g m2 sinh v B
///   F3  C = a - hT + p m1 cos v N + p m2 sin v B          p = r sqrt(r'^2-1)
///   F4  C = a + hT + b N + t/(2b) B                       t = -r^2 (1+r'^2)
///   F5  C = a - (r^2+b^2)/(2h) T + b N + h B
///   F6  C = a - hT + b N + p/(2b) B                       p = r^2 (1-r'^2)
///   F7  C = a + (b^2-r^2)/(2h) T + b N - h B
enum class CanalFamily {
    SinhNormalCoshBinormal,  // F1
    CoshNormalSinhBinormal,  // F2
    Trigonometric,           // F3
    NullPairT,               // F4
    TangentShiftPlus,        // F5
    NullPairP,               // F6
    TangentShiftMinus        // F7
};

/// "F1_sinhN_coshB", "F2_coshN_sinhB", ...
std::string_view to_string(CanalFamily f) noexcept;
/// Accepts the full tag or the short "F1".."F7" form.
std::optional<CanalFamily> parse_family(std::string_view s) noexcept;

/// Families F1-F3 carry sign choices m1, m2; F4-F7 carry a free function b(u,v).
bool uses_signs(CanalFamily f) noexcept;
bool uses_field(CanalFamily f) noexcept;

/// Frenet convention under which the family's closed-form E, F, G hold.
FrenetConvention frenet_convention(CanalFamily f) noexcept;

/// Which closed form to evaluate: the coefficients as printed in the source
/// catalogue, or with misprints fixed so that they match the parametrization.
enum class FormVariant { Corrected, Printed };

/// Short description of how the corrected closed form differs from the printed
/// one (empty when they coincide).
std::string_view closed_form_correction(CanalFamily f) noexcept;

struct FundamentalForm {
    double E = 0.0;
    double F = 0.0;
    double G = 0.0;
    /// Set when the value came from a corrected closed form that differs from the printed one.
    bool corrected = false;

    double det() const noexcept { return E * G - F * F; }
};

enum class SurfaceRegime {
    SpacelikeSurfaceSpacelikeMeridians,  // EG - F^2 > 0, E > 0
    TimelikeSurfaceSpacelikeMeridians,   // EG - F^2 < 0, E > 0
    TimelikeSurfaceTimelikeMeridians     // EG - F^2 < 0, E < 0
};

std::string_view to_string(SurfaceRegime r) noexcept;
std::optional<SurfaceRegime> parse_regime(std::string_view s) noexcept;

/// Everything needed to build a CanalSurface.
struct CanalDefinition {
    CanalFamily family;
    FrameField frame;
    UnivariateFunction radius;
    int m1 = 1;
    int m2 = 1;
    BivariateFunction b;  ///< required for F4-F7, ignored otherwise
    Interval u_domain;
    /// Optional for F1/F2 (default unbounded); ignored for F3 (v is periodic);
    /// required and finite for F4-F7.
    std::optional<Interval> v_domain;
};

/// A canal surface from one of the seven families. Immutable after construction.
class CanalSurface {
public:
    explicit CanalSurface(CanalDefinition def);

    CanalFamily family() const noexcept { return def_.family; }
    const FrameField& frame() const noexcept { return def_.frame; }
    const UnivariateFunction& radius() const noexcept { return def_.radius; }
    const BivariateFunction& field() const noexcept { return def_.b; }
    int m1() const noexcept { return def_.m1; }
    int m2() const noexcept { return def_.m2; }
    const Interval& u_domain() const noexcept { return def_.u_domain; }
    const Interval& v_domain() const noexcept { return v_domain_; }
    bool v_periodic() const noexcept { return def_.family == CanalFamily::Trigonometric; }

private:
    CanalDefinition def_;
    Interval v_domain_;
};

/// Radius-derived scalars at one u. Quantities a family does not use may be NaN.
struct RadiusTerms {
    double r = 0, r1 = 0, r2 = 0;
    double h = 0, h1 = 0;          // r r'
    double g = 0, g1 = 0;          // r sqrt(1 + r'^2)
    double p_root = 0, p_root1 = 0;  // r sqrt(r'^2 - 1)
    double t = 0, t1 = 0;          // -r^2 (1 + r'^2)
    double p_sq = 0, p_sq1 = 0;    // r^2 (1 - r'^2)
};

RadiusTerms radius_terms(const UnivariateFunction& r, double u);

/// Thresholds for the family guards.
inline constexpr double kMinShift = 1e-8;  ///< |h| for F5/F7
inline constexpr double kMinField = 1e-8;  ///< |b| for F4/F6

/// Evaluates C(u, v). DomainError outside the domain or where the family's
/// guards fail (r <= 0, r'^2 <= 1 for F3, |h| < 1e-8 for F5/F7, |b| < 1e-8 for F4/F6).
MVec3 position(const CanalSurface& s, double u, double v);

/// Closed-form E, F, G of the family.
FundamentalForm fundamental_form_closed(const CanalSurface& s, double u, double v,
                                        FormVariant variant = FormVariant::Corrected);

/// Numerical partials C_u, C_v by central differences of position.
struct Partials {
    MVec3 cu;
    MVec3 cv;
};
/// step <= 0 selects the default 1e-5 * max(1, |u|, |v|).
Partials partials_numeric(const CanalSurface& s, double u, double v, double step = 0.0);

/// E, F, G as Minkowski products of central-difference partials. Ground truth
/// for the closed forms.
FundamentalForm fundamental_form_numeric(const CanalSurface& s, double u, double v,
                                         double step = 0.0);

/// Classifies a fundamental form. DegenerateError when |EG - F^2| <= tol (|EG| + F^2)
/// or |E| <= tol max(|E|,|F|,|G|); (u, v) only label the error.
SurfaceRegime classify_form(const FundamentalForm& form, double u, double v,
                            double tolerance = kCausalTolerance);

/// Regime at (u, v) from the numeric fundamental form.
SurfaceRegime detect_regime(const CanalSurface& s, double u, double v);

/// v window used for grids: the v domain when finite, otherwise [-2, 2].
Interval sampling_v_range(const CanalSurface& s);

struct CoefficientDeviation {
    double max_abs = 0.0;
    double max_rel = 0.0;  ///< |closed - numeric| / max(1, |numeric|)
    double worst_u = 0.0;
    double worst_v = 0.0;
};

struct ClosedFormAudit {
    int samples = 0;
    CoefficientDeviation e;
    CoefficientDeviation f;
    CoefficientDeviation g;

    /// Passes iff every deviation is within max(tol, tol * |value|).
    bool passes(double tolerance = 1e-6) const noexcept {
        return e.max_rel <= tolerance && f.max_rel <= tolerance && g.max_rel <= tolerance;
    }
};

/// Compares closed and numeric forms at nu x nv interior cell centres of
/// u_range x v_range (defaults: u domain and sampling_v_range).
ClosedFormAudit audit_closed_vs_numeric(const CanalSurface& s, int nu, int nv,
                                        FormVariant variant = FormVariant::Corrected,
                                        std::optional<Interval> u_range = std::nullopt,
                                        std::optional<Interval> v_range = std::nullopt);

/// Interior cell centre i of n over an interval.
double cell_centre(const Interval& range, int i, int n) noexcept;

}  // namespace canal
