#include "canal/loxodrome.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "canal/errors.hpp"

namespace canal {

std::string_view to_string(Branch b) noexcept {
    return b == Branch::PlusRoot ? "PlusRoot" : "MinusRoot";
}

std::optional<Branch> parse_branch(std::string_view s) noexcept {
    if (s == "plus" || s == "PlusRoot") return Branch::PlusRoot;
    if (s == "minus" || s == "MinusRoot") return Branch::MinusRoot;
    return std::nullopt;
}

AngleKind angle_kind_for(SurfaceRegime r) noexcept {
    switch (r) {
        case SurfaceRegime::SpacelikeSurfaceSpacelikeMeridians: return AngleKind::SpaceSpace;
        case SurfaceRegime::TimelikeSurfaceSpacelikeMeridians:
            return AngleKind::SpaceSpaceTimelikePlane;
        case SurfaceRegime::TimelikeSurfaceTimelikeMeridians: return AngleKind::SpaceTime;
    }
    return AngleKind::SpaceSpace;
}

namespace {

std::string at_u(double u) {
    std::ostringstream os;
    os << " at u = " << u;
    return os.str();
}

void check_angle_kind(const LoxodromeProblem& p) {
    if (p.angle.kind != angle_kind_for(p.regime)) {
        throw DomainError(std::string("regime ") + std::string(to_string(p.regime)) +
                          " needs a " + std::string(to_string(angle_kind_for(p.regime))) +
                          " angle, got " + std::string(to_string(p.angle.kind)));
    }
}

}  // namespace

OdeCoefficients ode_coefficients(const LoxodromeProblem& p, double u, double v) {
    check_angle_kind(p);
    const FundamentalForm f = fundamental_form_closed(p.surface, u, v, p.variant);
    SurfaceRegime found;
    try {
        found = classify_form(f, u, v);
    } catch (const DegenerateError& e) {
        throw RegimeMismatchError(e.what(), u);
    }
    if (found != p.regime) {
        throw RegimeMismatchError("surface is " + std::string(to_string(found)) + ", problem expects " +
                                      std::string(to_string(p.regime)) + at_u(u),
                                  u);
    }
    const double a = p.angle.value;
    const double eg = f.E * f.G;
    const double ef = f.E * f.F;
    const double ff = f.F * f.F;
    const double ee = f.E * f.E;
    switch (p.regime) {
        case SurfaceRegime::SpacelikeSurfaceSpacelikeMeridians: {
            const double c2 = std::cos(a) * std::cos(a);
            const double s2 = std::sin(a) * std::sin(a);
            return {c2 * eg - ff, -2.0 * s2 * ef, s2 * ee};
        }
        case SurfaceRegime::TimelikeSurfaceSpacelikeMeridians: {
            const double c2 = std::cosh(a) * std::cosh(a);
            const double s2 = std::sinh(a) * std::sinh(a);
            return {-c2 * eg + ff, -2.0 * s2 * ef, s2 * ee};
        }
        case SurfaceRegime::TimelikeSurfaceTimelikeMeridians: {
            const double c2 = std::cosh(a) * std::cosh(a);
            const double s2 = std::sinh(a) * std::sinh(a);
            return {s2 * eg + ff, 2.0 * c2 * ef, -c2 * ee};
        }
    }
    return {};
}

std::vector<double> slope_roots(const OdeCoefficients& c, double u) {
    const double scale = std::max({std::abs(c.A), std::abs(c.B), std::abs(c.Cc)});
    if (!(scale > 0.0)) {
        throw TangentToVError("slope equation vanishes identically" + at_u(u), u);
    }
    if (std::abs(c.A) <= kLinearThreshold * scale) {
        if (std::abs(c.B) <= kLinearThreshold * scale) {
            throw TangentToVError("loxodrome tangent is parallel to C_v" + at_u(u), u);
        }
        return {c.Cc / c.B};
    }
    const double disc = c.B * c.B + 4.0 * c.A * c.Cc;
    if (std::abs(disc) <= kDoubleRootThreshold * scale * scale) {
        return {-c.B / (2.0 * c.A)};
    }
    if (disc < 0.0) {
        throw NoRealRootError("no real slope (negative discriminant)" + at_u(u), u);
    }
    // Cancellation-free pair: q / A and -Cc / q.
    const double q = -0.5 * (c.B + std::copysign(std::sqrt(disc), c.B));
    double y1 = q / c.A;
    double y2 = -c.Cc / q;
    if (y1 > y2) std::swap(y1, y2);
    return {y1, y2};
}

double slope(const LoxodromeProblem& p, double u, double v, std::optional<double> y_prev) {
    const std::vector<double> roots = slope_roots(ode_coefficients(p, u, v), u);
    if (roots.size() == 1) return roots.front();
    if (y_prev) {
        return std::abs(roots[0] - *y_prev) <= std::abs(roots[1] - *y_prev) ? roots[0] : roots[1];
    }
    return p.branch == Branch::PlusRoot ? roots[1] : roots[0];
}

std::vector<double> integration_grid(const Interval& u_span, double u0, double step) {
    if (!(step > 0.0) || !std::isfinite(step)) throw DomainError("step must be positive");
    if (!u_span.is_finite() || !u_span.valid() || !u_span.contains(u0)) {
        throw DomainError("u_span must be a finite interval containing u0");
    }
    auto side = [step](double from, double to) {
        std::vector<double> out;
        const double width = std::abs(to - from);
        if (width == 0.0) return out;
        const auto n = static_cast<long>(std::ceil(width / step - 1e-9));
        const double h = (to - from) / static_cast<double>(n);
        for (long i = 1; i < n; ++i) out.push_back(from + static_cast<double>(i) * h);
        out.push_back(to);
        return out;
    };
    std::vector<double> below = side(u0, u_span.lo);
    std::vector<double> grid(below.rbegin(), below.rend());
    grid.push_back(u0);
    for (double u : side(u0, u_span.hi)) grid.push_back(u);
    return grid;
}

double effective_target(const LorentzAngle& target) noexcept {
    if (target.kind == AngleKind::SpaceSpace) {
        return std::min(target.value, std::numbers::pi - target.value);
    }
    return target.value;
}

namespace {

struct Measurement {
    double vector_route = 0.0;
    double formula_route = 0.0;
};

Measurement measure(const LoxodromeProblem& p, double u, double v, double y) {
    const Partials d = partials_numeric(p.surface, u, v);
    MVec3 dc = d.cu + y * d.cv;
    const FundamentalForm f = fundamental_form_closed(p.surface, u, v, p.variant);
    const double num = std::abs(f.E + f.F * y);
    const double ratio = num / std::sqrt(std::abs(f.E * (f.E + 2.0 * f.F * y + f.G * y * y)));
    Measurement m;
    switch (p.regime) {
        case SurfaceRegime::SpacelikeSurfaceSpacelikeMeridians:
            if (minkowski_dot(d.cu, dc) < 0.0) dc = -dc;
            m.vector_route = angle_spacelike_plane(d.cu, dc).value;
            m.formula_route = std::acos(std::min(ratio, 1.0));
            break;
        case SurfaceRegime::TimelikeSurfaceSpacelikeMeridians:
            m.vector_route = angle_timelike_plane(d.cu, dc).value;
            m.formula_route = std::acosh(std::max(ratio, 1.0));
            break;
        case SurfaceRegime::TimelikeSurfaceTimelikeMeridians:
            m.vector_route = angle_space_time(d.cu, dc).value;
            m.formula_route = std::asinh(ratio);
            break;
    }
    return m;
}

double speed(const LoxodromeProblem& p, double u, double v, double y) {
    const FundamentalForm f = fundamental_form_closed(p.surface, u, v, p.variant);
    return std::sqrt(std::abs(f.E + 2.0 * f.F * y + f.G * y * y));
}

void scan_regime(const LoxodromeProblem& p) {
    constexpr int kScanU = 9;
    constexpr double kScanMargin = 0.1;
    const CanalSurface& s = p.surface;
    std::vector<double> vs{p.v0 - kScanMargin, p.v0, p.v0 + kScanMargin};
    if (!s.v_periodic()) {
        std::erase_if(vs, [&](double v) { return !s.v_domain().contains(v); });
    }
    for (int i = 0; i < kScanU; ++i) {
        const double u = p.u_span.lo + p.u_span.width() * i / (kScanU - 1);
        for (double v : vs) {
            SurfaceRegime found;
            try {
                found = detect_regime(s, u, v);
            } catch (const DegenerateError& e) {
                throw RegimeMismatchError(std::string("regime scan: ") + e.what(), u);
            }
            if (found != p.regime) {
                throw RegimeMismatchError("regime scan found " + std::string(to_string(found)) +
                                              " where the problem expects " +
                                              std::string(to_string(p.regime)) + at_u(u),
                                          u);
            }
        }
    }
}

// Largest turn of the direction (1, y) allowed in one step. Root-following across a
// point where the curve is tangent to C_v jumps to the other root and turns by far more.
constexpr double kMaxTurn = 0.7853981633974483;

struct Stepper {
    const LoxodromeProblem& p;
    double arc = 0.0;

    // One RK4 step from (u, v) with slope y there; returns (v1, y1).
    std::pair<double, double> step(double u, double v, double y, double h) {
        const double k1 = y;
        const double k2 = slope(p, u + 0.5 * h, v + 0.5 * h * k1, y);
        const double k3 = slope(p, u + 0.5 * h, v + 0.5 * h * k2, y);
        const double k4 = slope(p, u + h, v + h * k3, y);
        const double v1 = v + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        const double u1 = u + h;
        const CanalSurface& s = p.surface;
        if (!s.v_periodic() && !s.v_domain().contains(v1)) {
            std::ostringstream os;
            os << "v = " << v1 << " left the v domain" << at_u(u1);
            throw StepError(os.str(), u1);
        }
        const double y1 = slope(p, u1, v1, y);
        if (std::abs(std::atan(y1) - std::atan(y)) > kMaxTurn) {
            std::ostringstream os;
            os << "slope jumped from " << y << " to " << y1 << " within one step; the curve turns tangent to C_v"
               << at_u(u1);
            throw TangentToVError(os.str(), u1);
        }
        // Simpson on the step, midpoint v from the cubic Hermite interpolant.
        const double um = u + 0.5 * h;
        const double vm = 0.5 * (v + v1) + h * (y - y1) / 8.0;
        const double ym = slope(p, um, vm, y);
        arc += std::abs(h) / 6.0 * (speed(p, u, v, y) + 4.0 * speed(p, um, vm, ym) + speed(p, u1, v1, y1));
        return {v1, y1};
    }
};

}  // namespace

LoxodromeSolution integrate(const LoxodromeProblem& p) {
    check_angle_kind(p);
    const std::vector<double> grid = integration_grid(p.u_span, p.u0, p.step);
    scan_regime(p);

    const auto it0 = std::find(grid.begin(), grid.end(), p.u0);
    const auto i0 = static_cast<std::size_t>(it0 - grid.begin());
    std::vector<double> vs(grid.size());
    std::vector<double> ys(grid.size());
    Stepper stepper{p};
    double u_current = p.u0;
    try {
        vs[i0] = p.v0;
        ys[i0] = slope(p, p.u0, p.v0);
        for (std::size_t i = i0; i + 1 < grid.size(); ++i) {
            u_current = grid[i];
            std::tie(vs[i + 1], ys[i + 1]) = stepper.step(grid[i], vs[i], ys[i], grid[i + 1] - grid[i]);
        }
        for (std::size_t i = i0; i > 0; --i) {
            u_current = grid[i];
            std::tie(vs[i - 1], ys[i - 1]) = stepper.step(grid[i], vs[i], ys[i], grid[i - 1] - grid[i]);
        }
    } catch (const LoxodromeError&) {
        throw;
    } catch (const DomainError& e) {
        throw StepError(std::string(e.what()) + " (integrating" + at_u(u_current) + ")", u_current);
    }

    LoxodromeSolution sol;
    sol.arc_length = stepper.arc;
    sol.target_angle = effective_target(p.angle);
    sol.samples.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        LoxodromeSample smp;
        smp.u = grid[i];
        smp.v = vs[i];
        smp.y = ys[i];
        smp.point = position(p.surface, smp.u, smp.v);
        const Measurement m = measure(p, smp.u, smp.v, smp.y);
        smp.measured_angle = m.vector_route;
        smp.formula_angle = m.formula_route;
        const double err = std::abs(m.vector_route - sol.target_angle);
        if (i == 0 || err > sol.max_angle_error) {
            sol.max_angle_error = err;
            sol.worst_u = smp.u;
        }
        sol.max_route_gap = std::max(sol.max_route_gap, std::abs(m.vector_route - m.formula_route));
        sol.samples.push_back(smp);
    }
    return sol;
}

AngleReport verify_constant_angle(const LoxodromeSolution& sol, const LorentzAngle& target,
                                  double tolerance) {
    if (sol.samples.empty()) throw DomainError("verify_constant_angle: empty solution");
    const double t = effective_target(target);
    AngleReport r;
    r.tolerance = tolerance;
    for (const auto& s : sol.samples) {
        const double err = std::abs(s.measured_angle - t);
        if (r.samples == 0 || !(err <= r.max_error)) {
            r.max_error = std::isnan(err) ? INFINITY : err;
            r.worst_u = s.u;
            r.worst_v = s.v;
        }
        ++r.samples;
    }
    r.passes = r.max_error <= tolerance;
    return r;
}

double arc_length_oracle(const LoxodromeProblem& p, const LoxodromeSolution& sol) {
    if (sol.samples.empty()) throw DomainError("arc_length_oracle: empty solution");
    constexpr int kSub = 4;
    auto integrand = [&p](double u, double v, double y_guess) {
        const double y = slope(p, u, v, y_guess);
        const FundamentalForm f = fundamental_form_numeric(p.surface, u, v);
        return std::sqrt(std::abs(f.E + 2.0 * f.F * y + f.G * y * y));
    };
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < sol.samples.size(); ++i) {
        const LoxodromeSample& a = sol.samples[i];
        const LoxodromeSample& b = sol.samples[i + 1];
        const double h = b.u - a.u;
        double panel = 0.0;
        for (int k = 0; k <= kSub; ++k) {
            const double t = static_cast<double>(k) / kSub;
            // Cubic Hermite basis and its derivative.
            const double t2 = t * t, t3 = t2 * t;
            const double v = (2 * t3 - 3 * t2 + 1) * a.v + (t3 - 2 * t2 + t) * h * a.y +
                             (-2 * t3 + 3 * t2) * b.v + (t3 - t2) * h * b.y;
            const double dv = ((6 * t2 - 6 * t) * a.v + (3 * t2 - 4 * t + 1) * h * a.y +
                               (-6 * t2 + 6 * t) * b.v + (3 * t2 - 2 * t) * h * b.y) /
                              h;
            const double w = (k == 0 || k == kSub) ? 1.0 : (k % 2 == 1 ? 4.0 : 2.0);
            panel += w * integrand(a.u + t * h, v, dv);
        }
        total += panel * h / (3.0 * kSub);
    }
    return total;
}

}  // namespace canal
