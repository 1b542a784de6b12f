#include "canal/surface.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <utility>

#include "canal/errors.hpp"

namespace canal {

namespace {

constexpr std::array<std::string_view, 7> kFamilyTags{
    "F1_sinhN_coshB", "F2_coshN_sinhB",   "F3_trig",          "F4_nullpair_t",
    "F5_T_shift_plus", "F6_nullpair_p", "F7_T_shift_minus"};

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string at_point(double u, double v) {
    std::ostringstream os;
    os << " at (u, v) = (" << u << ", " << v << ")";
    return os.str();
}

}  // namespace

std::string_view to_string(CanalFamily f) noexcept {
    return kFamilyTags[static_cast<std::size_t>(f)];
}

std::optional<CanalFamily> parse_family(std::string_view s) noexcept {
    for (std::size_t i = 0; i < kFamilyTags.size(); ++i) {
        if (s == kFamilyTags[i] || s == kFamilyTags[i].substr(0, 2)) {
            return static_cast<CanalFamily>(i);
        }
    }
    return std::nullopt;
}

bool uses_signs(CanalFamily f) noexcept {
    return f == CanalFamily::SinhNormalCoshBinormal || f == CanalFamily::CoshNormalSinhBinormal ||
           f == CanalFamily::Trigonometric;
}

bool uses_field(CanalFamily f) noexcept { return !uses_signs(f); }

FrenetConvention frenet_convention(CanalFamily f) noexcept {
    switch (f) {
        case CanalFamily::SinhNormalCoshBinormal: return FrenetConvention::SpacelikeNormal;
        case CanalFamily::CoshNormalSinhBinormal: return FrenetConvention::TimelikeNormal;
        case CanalFamily::Trigonometric: return FrenetConvention::TimelikeTangent;
        case CanalFamily::NullPairT:
        case CanalFamily::NullPairP: return FrenetConvention::NullNormal;
        case CanalFamily::TangentShiftPlus:
        case CanalFamily::TangentShiftMinus: return FrenetConvention::NullTangent;
    }
    return FrenetConvention::SpacelikeNormal;
}

std::string_view closed_form_correction(CanalFamily f) noexcept {
    switch (f) {
        case CanalFamily::TangentShiftPlus:
            return "E: second term multiplied by (h' - k1 b); printed form omits the factor";
        case CanalFamily::TangentShiftMinus:
            return "F: last term uses (-k1 b - h'); printed form has +h'";
        default: return "";
    }
}

std::string_view to_string(SurfaceRegime r) noexcept {
    switch (r) {
        case SurfaceRegime::SpacelikeSurfaceSpacelikeMeridians:
            return "SpacelikeSurface_SpacelikeMeridians";
        case SurfaceRegime::TimelikeSurfaceSpacelikeMeridians:
            return "TimelikeSurface_SpacelikeMeridians";
        case SurfaceRegime::TimelikeSurfaceTimelikeMeridians:
            return "TimelikeSurface_TimelikeMeridians";
    }
    return "?";
}

std::optional<SurfaceRegime> parse_regime(std::string_view s) noexcept {
    for (auto r : {SurfaceRegime::SpacelikeSurfaceSpacelikeMeridians,
                   SurfaceRegime::TimelikeSurfaceSpacelikeMeridians,
                   SurfaceRegime::TimelikeSurfaceTimelikeMeridians}) {
        if (s == to_string(r)) return r;
    }
    return std::nullopt;
}

CanalSurface::CanalSurface(CanalDefinition def) : def_(std::move(def)) {
    if (!def_.radius) throw DomainError("CanalSurface: radius function is required");
    if (!def_.u_domain.is_finite() || !def_.u_domain.valid()) {
        throw DomainError("CanalSurface: u domain must be a finite closed interval");
    }
    const Interval& fd = def_.frame.domain();
    if (def_.u_domain.lo < fd.lo || def_.u_domain.hi > fd.hi) {
        throw DomainError("CanalSurface: u domain exceeds the frame domain");
    }
    if (uses_signs(def_.family)) {
        auto sign_ok = [](int m) { return m == 1 || m == -1; };
        if (!sign_ok(def_.m1) || !sign_ok(def_.m2)) {
            throw DomainError("CanalSurface: m1 and m2 must be +1 or -1");
        }
    } else if (!def_.b) {
        throw DomainError("CanalSurface: families F4-F7 need a field b(u, v)");
    }

    switch (def_.family) {
        case CanalFamily::SinhNormalCoshBinormal:
        case CanalFamily::CoshNormalSinhBinormal:
            v_domain_ = def_.v_domain.value_or(Interval::unbounded());
            break;
        case CanalFamily::Trigonometric:
            v_domain_ = def_.v_domain.value_or(Interval{0.0, 2.0 * std::numbers::pi});
            break;
        default:
            if (!def_.v_domain || !def_.v_domain->is_finite()) {
                throw DomainError("CanalSurface: families F4-F7 need a finite v domain");
            }
            v_domain_ = *def_.v_domain;
    }
    if (!v_domain_.valid()) throw DomainError("CanalSurface: empty v domain");
}

RadiusTerms radius_terms(const UnivariateFunction& radius, double u) {
    RadiusTerms k;
    k.r = radius(u);
    k.r1 = radius.d1(u);
    k.r2 = radius.d2(u);
    const double r = k.r, r1 = k.r1, r2 = k.r2;
    k.h = r * r1;
    k.h1 = r1 * r1 + r * r2;
    const double q = std::sqrt(1.0 + r1 * r1);
    k.g = r * q;
    k.g1 = r1 * q + r * r1 * r2 / q;
    if (r1 * r1 > 1.0) {
        const double w = std::sqrt(r1 * r1 - 1.0);
        k.p_root = r * w;
        k.p_root1 = r1 * w + r * r1 * r2 / w;
    } else {
        k.p_root = kNaN;
        k.p_root1 = kNaN;
    }
    k.t = -r * r * (1.0 + r1 * r1);
    k.t1 = -2.0 * r * r1 * (1.0 + r1 * r1) - 2.0 * r * r * r1 * r2;
    k.p_sq = r * r * (1.0 - r1 * r1);
    k.p_sq1 = 2.0 * r * r1 * (1.0 - r1 * r1) - 2.0 * r * r * r1 * r2;
    return k;
}

namespace {

// Family guards shared by position and the closed forms.
void check_guards(const CanalSurface& s, const RadiusTerms& k, double b, double u, double v) {
    if (!(k.r > 0.0)) throw DomainError("radius must be positive" + at_point(u, v));
    switch (s.family()) {
        case CanalFamily::Trigonometric:
            if (!(k.r1 * k.r1 > 1.0)) {
                throw DomainError("F3 needs r'^2 > 1" + at_point(u, v));
            }
            break;
        case CanalFamily::TangentShiftPlus:
        case CanalFamily::TangentShiftMinus:
            if (!(std::abs(k.h) >= kMinShift)) {
                throw DomainError("h = r r' vanishes" + at_point(u, v));
            }
            break;
        case CanalFamily::NullPairT:
        case CanalFamily::NullPairP:
            if (!(std::abs(b) >= kMinField)) throw DomainError("b vanishes" + at_point(u, v));
            break;
        default: break;
    }
}

void check_domain(const CanalSurface& s, double u, double v) {
    if (!s.u_domain().contains(u)) throw DomainError("u outside domain" + at_point(u, v));
    if (!s.v_periodic() && !s.v_domain().contains(v)) {
        throw DomainError("v outside domain" + at_point(u, v));
    }
}

// Position without the domain check, for finite-difference stencils that
// straddle the domain boundary.
MVec3 position_unchecked(const CanalSurface& s, double u, double v) {
    const FrameSample fr = s.frame().at(u);
    const RadiusTerms k = radius_terms(s.radius(), u);
    const double b = uses_field(s.family()) ? s.field()(u, v) : 0.0;
    check_guards(s, k, b, u, v);
    const double m1 = s.m1(), m2 = s.m2();
    switch (s.family()) {
        case CanalFamily::SinhNormalCoshBinormal:
            return fr.alpha + k.h * fr.t + (k.g * m1 * std::sinh(v)) * fr.n +
                   (k.g * m2 * std::cosh(v)) * fr.b;
        case CanalFamily::CoshNormalSinhBinormal:
            return fr.alpha + k.h * fr.t + (k.g * m1 * std::cosh(v)) * fr.n +
                   (k.g * m2 * std::sinh(v)) * fr.b;
        case CanalFamily::Trigonometric:
            return fr.alpha - k.h * fr.t + (k.p_root * m1 * std::cos(v)) * fr.n +
                   (k.p_root * m2 * std::sin(v)) * fr.b;
        case CanalFamily::NullPairT:
            return fr.alpha + k.h * fr.t + b * fr.n + (k.t / (2.0 * b)) * fr.b;
        case CanalFamily::TangentShiftPlus:
            return fr.alpha - ((k.r * k.r + b * b) / (2.0 * k.h)) * fr.t + b * fr.n + k.h * fr.b;
        case CanalFamily::NullPairP:
            return fr.alpha - k.h * fr.t + b * fr.n + (k.p_sq / (2.0 * b)) * fr.b;
        case CanalFamily::TangentShiftMinus:
            return fr.alpha + ((b * b - k.r * k.r) / (2.0 * k.h)) * fr.t + b * fr.n - k.h * fr.b;
    }
    return {};
}

}  // namespace

MVec3 position(const CanalSurface& s, double u, double v) {
    check_domain(s, u, v);
    return position_unchecked(s, u, v);
}

FundamentalForm fundamental_form_closed(const CanalSurface& s, double u, double v,
                                        FormVariant variant) {
    check_domain(s, u, v);
    const FrameSample fr = s.frame().at(u);
    const RadiusTerms k = radius_terms(s.radius(), u);
    const double k1 = fr.k1, k2 = fr.k2;
    const bool printed = variant == FormVariant::Printed;
    FundamentalForm out;

    if (uses_signs(s.family())) {
        check_guards(s, k, 0.0, u, v);
        const double m1 = s.m1(), m2 = s.m2();
        const double msq = m1 * m1 - m2 * m2;
        switch (s.family()) {
            case CanalFamily::SinhNormalCoshBinormal: {
                const double ch = std::cosh(v), sh = std::sinh(v);
                const double g = k.g, g1 = k.g1;
                const double cn = k1 * k.h - k2 * m2 * g * ch + m1 * g1 * sh;
                const double cb = k2 * m1 * g * sh - m2 * g1 * ch;
                const double ct = 1.0 - k1 * m1 * g * sh + k.h1;
                out.E = cn * cn - cb * cb + ct * ct;
                out.F = g * (k1 * m1 * k.h * ch - k2 * m1 * m2 * g + msq * g1 * ch * sh);
                out.G = g * g * (m1 * m1 * ch * ch - m2 * m2 * sh * sh);
                break;
            }
            case CanalFamily::CoshNormalSinhBinormal: {
                const double ch = std::cosh(v), sh = std::sinh(v);
                const double g = k.g, g1 = k.g1;
                const double cn = -k1 * k.h + k2 * m2 * g * sh + m1 * g1 * ch;
                const double cb = k2 * m1 * g * ch + m2 * g1 * sh;
                const double ct = 1.0 - k1 * m1 * g * ch + k.h1;
                out.E = -cn * cn + cb * cb + ct * ct;
                out.F = g * (k1 * m1 * k.h * sh + k2 * m1 * m2 * g - msq * g1 * ch * sh);
                out.G = g * g * (-m1 * m1 * sh * sh + m2 * m2 * ch * ch);
                break;
            }
            default: {  // Trigonometric
                const double c = std::cos(v), sn = std::sin(v);
                const double p = k.p_root, p1 = k.p_root1;
                const double ct = 1.0 + k1 * m1 * p * c - k.h1;
                const double cn = k1 * k.h + k2 * m2 * p * sn - m1 * p1 * c;
                const double cb = k2 * m1 * p * c + m2 * p1 * sn;
                out.E = -ct * ct + cn * cn + cb * cb;
                out.F = p * (k1 * m1 * k.h * sn + k2 * m1 * m2 * p - msq * p1 * c * sn);
                out.G = p * p * (m1 * m1 * sn * sn + m2 * m2 * c * c);
                break;
            }
        }
        return out;
    }

    const BivariateFunction& field = s.field();
    const double b = field(u, v);
    check_guards(s, k, b, u, v);
    const double bu = field.du(u, v);
    const double bv = field.dv(u, v);
    const double r2 = k.r * k.r;
    const double h = k.h, h1 = k.h1;

    switch (s.family()) {
        case CanalFamily::NullPairT: {
            const double t = k.t, t1 = k.t1;
            const double ct = 1.0 - k1 * t / (2.0 * b) + h1;
            // The printed E joins its two terms with "_", read as a minus sign.
            out.E = ct * ct - (bu + k2 * b + k1 * h) * (bu * t + k2 * b * t - b * t1) / (b * b);
            out.F = -bv * (2.0 * bu * t + k2 * b * t + k1 * h * t + k2 * b * t - b * t1) /
                    (2.0 * b * b);
            out.G = -bv * bv * t / (b * b);
            break;
        }
        case CanalFamily::TangentShiftPlus: {
            const double x = bu - (b * b + r2) * k1 / (2.0 * h) - k2 * h;
            const double y = 1.0 + k2 * b - (2.0 * h * (h + bu * b) - (b * b + r2) * h1) / (2.0 * h * h);
            out.E = x * x + 2.0 * y * (printed ? 1.0 : (h1 - k1 * b));
            out.F = bv * x + bv * b * (b * k1 - h1) / h;
            out.G = bv * bv;
            out.corrected = !printed;
            break;
        }
        case CanalFamily::NullPairP: {
            const double p = k.p_sq, p1 = k.p_sq1;
            const double ct = -1.0 + k1 * p / (2.0 * b) + h1;
            out.E = ct * ct - (bu + k2 * b - k1 * h) * (p * (bu + k2 * b) - p1 * b) / (b * b);
            out.F = -bv * (p * (2.0 * bu + k2 * b - k1 * h + k2 * b) - p1 * b) / (2.0 * b * b);
            out.G = -p * bv * bv / (b * b);
            break;
        }
        default: {  // TangentShiftMinus
            const double x = bu + k1 * (b * b - r2) / (2.0 * h) + k2 * h;
            out.E = x * x + (k1 * b + h1) *
                                (2.0 * h * h - 2.0 * bu * b * h - 2.0 * h * h * (1.0 + k2 * b) +
                                 (b * b - r2) * h1) /
                                (h * h);
            out.F = bv * x + bv * b * (-k1 * b + (printed ? h1 : -h1)) / h;
            out.G = bv * bv;
            out.corrected = !printed;
            break;
        }
    }
    return out;
}

Partials partials_numeric(const CanalSurface& s, double u, double v, double step) {
    check_domain(s, u, v);
    const double d = step > 0.0 ? step : fd_step(u, v);
    const MVec3 cu = (position_unchecked(s, u + d, v) - position_unchecked(s, u - d, v)) / (2.0 * d);
    const MVec3 cv = (position_unchecked(s, u, v + d) - position_unchecked(s, u, v - d)) / (2.0 * d);
    return {cu, cv};
}

FundamentalForm fundamental_form_numeric(const CanalSurface& s, double u, double v, double step) {
    const Partials p = partials_numeric(s, u, v, step);
    return {minkowski_dot(p.cu, p.cu), minkowski_dot(p.cu, p.cv), minkowski_dot(p.cv, p.cv)};
}

SurfaceRegime classify_form(const FundamentalForm& form, double u, double v, double tolerance) {
    const double det = form.det();
    const double scale = std::abs(form.E * form.G) + form.F * form.F;
    if (!(scale > 0.0) || std::abs(det) <= tolerance * scale) {
        throw DegenerateError("degenerate first fundamental form (EG - F^2 ~ 0)" + at_point(u, v), u,
                              v);
    }
    const double emax = std::max({std::abs(form.E), std::abs(form.F), std::abs(form.G)});
    if (std::abs(form.E) <= tolerance * emax) {
        throw DegenerateError("light-like meridian (E ~ 0)" + at_point(u, v), u, v);
    }
    if (det > 0.0) {
        if (form.E < 0.0) {
            throw DegenerateError("negative-definite form cannot arise on a surface" + at_point(u, v),
                                  u, v);
        }
        return SurfaceRegime::SpacelikeSurfaceSpacelikeMeridians;
    }
    return form.E > 0.0 ? SurfaceRegime::TimelikeSurfaceSpacelikeMeridians
                        : SurfaceRegime::TimelikeSurfaceTimelikeMeridians;
}

SurfaceRegime detect_regime(const CanalSurface& s, double u, double v) {
    return classify_form(fundamental_form_numeric(s, u, v), u, v);
}

Interval sampling_v_range(const CanalSurface& s) {
    if (s.v_domain().is_finite()) return s.v_domain();
    return Interval{-2.0, 2.0};
}

double cell_centre(const Interval& range, int i, int n) noexcept {
    return range.lo + range.width() * (static_cast<double>(i) + 0.5) / static_cast<double>(n);
}

ClosedFormAudit audit_closed_vs_numeric(const CanalSurface& s, int nu, int nv, FormVariant variant,
                                        std::optional<Interval> u_range,
                                        std::optional<Interval> v_range) {
    if (nu < 2 || nv < 2) throw DomainError("audit_closed_vs_numeric: grid must be at least 2x2");
    const Interval ur = u_range.value_or(s.u_domain());
    const Interval vr = v_range.value_or(sampling_v_range(s));
    ClosedFormAudit audit;
    auto track = [](CoefficientDeviation& dev, double closed, double numeric, double u, double v) {
        const double d = std::abs(closed - numeric);
        const double rel = d / std::max(1.0, std::abs(numeric));
        dev.max_abs = std::max(dev.max_abs, d);
        if (!(rel <= dev.max_rel)) {
            dev.max_rel = std::isnan(rel) ? INFINITY : rel;
            dev.worst_u = u;
            dev.worst_v = v;
        }
    };
    for (int i = 0; i < nu; ++i) {
        const double u = cell_centre(ur, i, nu);
        for (int j = 0; j < nv; ++j) {
            const double v = cell_centre(vr, j, nv);
            const FundamentalForm c = fundamental_form_closed(s, u, v, variant);
            const FundamentalForm n = fundamental_form_numeric(s, u, v);
            track(audit.e, c.E, n.E, u, v);
            track(audit.f, c.F, n.F, u, v);
            track(audit.g, c.G, n.G, u, v);
            ++audit.samples;
        }
    }
    return audit;
}

}  // namespace canal
