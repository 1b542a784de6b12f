#include "canal/frame.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "canal/errors.hpp"

namespace canal {

namespace {

using Gram = std::array<std::array<double, 3>, 3>;

double euclid_max(const MVec3& a) {
    return std::max({std::abs(a.x0), std::abs(a.x1), std::abs(a.x2)});
}

// Audit grid points: grid_points samples from lo to hi inclusive.
double grid_point(const Interval& d, int i, int n) {
    if (n == 1) return 0.5 * (d.lo + d.hi);
    return d.lo + d.width() * static_cast<double>(i) / static_cast<double>(n - 1);
}

}  // namespace

Gram frame_gram(const FrameSignature& sig) {
    int space = 0;
    int time = 0;
    int light = 0;
    for (auto c : sig) {
        space += c == CausalCharacter::SpaceLike;
        time += c == CausalCharacter::TimeLike;
        light += c == CausalCharacter::LightLike;
    }
    Gram g{};
    if (time == 1 && space == 2) {
        for (int i = 0; i < 3; ++i) g[i][i] = sig[i] == CausalCharacter::TimeLike ? -1.0 : 1.0;
        return g;
    }
    if (light == 2 && space == 1) {
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                if (i == j && sig[i] == CausalCharacter::SpaceLike) g[i][j] = 1.0;
                if (i != j && sig[i] == CausalCharacter::LightLike &&
                    sig[j] == CausalCharacter::LightLike) {
                    g[i][j] = 1.0;
                }
            }
        }
        return g;
    }
    throw DomainError("frame signature must be one time-like + two space-like legs, "
                      "or one space-like + two light-like legs");
}

FrameField::FrameField(Evaluator eval, Interval domain, FrameSignature signature)
    : eval_(std::move(eval)), domain_(domain), signature_(signature) {
    if (!eval_) throw DomainError("FrameField: evaluator is required");
    if (!domain_.is_finite() || !domain_.valid()) {
        throw DomainError("FrameField: domain must be a finite closed interval");
    }
    (void)frame_gram(signature_);
}

FrameAuditReport audit_frame(const FrameField& frame, int grid_points) {
    if (grid_points < 2) throw DomainError("audit_frame: grid_points must be >= 2");
    const Gram g = frame_gram(frame.signature());
    FrameAuditReport report;
    for (int i = 0; i < grid_points; ++i) {
        const double u = grid_point(frame.domain(), i, grid_points);
        const FrameSample s = frame.at(u);
        const std::array<MVec3, 3> legs{s.t, s.n, s.b};
        for (int a = 0; a < 3; ++a) {
            for (int b = a; b < 3; ++b) {
                const double r = std::abs(minkowski_dot(legs[a], legs[b]) - g[a][b]);
                if (!(r <= report.max_residual)) {  // also catches NaN
                    report.max_residual = std::isnan(r) ? INFINITY : r;
                    report.worst_u = u;
                }
            }
        }
        bool violated = false;
        for (int a = 0; a < 3; ++a) {
            violated |= causal_character(legs[a]) != frame.signature()[a];
        }
        report.signature_violations += violated;
        ++report.samples;
    }
    return report;
}

FrameField make_frame(FrameField::Evaluator eval, Interval domain, FrameSignature signature,
                      double tolerance) {
    FrameField frame(std::move(eval), domain, signature);
    const FrameAuditReport report = audit_frame(frame, kFrameAuditGrid);
    if (!report.passes(tolerance)) {
        std::ostringstream msg;
        msg << "frame audit failed: residual " << report.max_residual << " at u=" << report.worst_u
            << ", " << report.signature_violations << " signature violation(s)";
        throw FrameAuditError(msg.str(), report.worst_u, report.max_residual);
    }
    return frame;
}

FrameField make_frame(std::function<MVec3(double)> alpha, std::function<MVec3(double)> t,
                      std::function<MVec3(double)> n, std::function<MVec3(double)> b,
                      std::function<double(double)> k1, std::function<double(double)> k2,
                      Interval domain, FrameSignature signature, double tolerance) {
    if (!alpha || !t || !n || !b || !k1 || !k2) {
        throw DomainError("make_frame: all frame functions are required");
    }
    auto eval = [=](double u) { return FrameSample{alpha(u), t(u), n(u), b(u), k1(u), k2(u)}; };
    return make_frame(std::move(eval), domain, signature, tolerance);
}

std::string_view to_string(FrenetConvention c) noexcept {
    switch (c) {
        case FrenetConvention::SpacelikeNormal: return "spacelike_normal";
        case FrenetConvention::TimelikeNormal: return "timelike_normal";
        case FrenetConvention::TimelikeTangent: return "timelike_tangent";
        case FrenetConvention::NullNormal: return "null_normal";
        case FrenetConvention::NullTangent: return "null_tangent";
    }
    return "?";
}

FrameSignature signature_of(FrenetConvention c) noexcept {
    using enum CausalCharacter;
    switch (c) {
        case FrenetConvention::SpacelikeNormal: return {SpaceLike, SpaceLike, TimeLike};
        case FrenetConvention::TimelikeNormal: return {SpaceLike, TimeLike, SpaceLike};
        case FrenetConvention::TimelikeTangent: return {TimeLike, SpaceLike, SpaceLike};
        case FrenetConvention::NullNormal: return {SpaceLike, LightLike, LightLike};
        case FrenetConvention::NullTangent: return {LightLike, SpaceLike, LightLike};
    }
    return {SpaceLike, SpaceLike, TimeLike};
}

Gram frenet_matrix(FrenetConvention c, double k1, double k2) noexcept {
    switch (c) {
        case FrenetConvention::SpacelikeNormal: return {{{0, k1, 0}, {-k1, 0, -k2}, {0, -k2, 0}}};
        case FrenetConvention::TimelikeNormal: return {{{0, -k1, 0}, {-k1, 0, k2}, {0, k2, 0}}};
        case FrenetConvention::TimelikeTangent: return {{{0, k1, 0}, {k1, 0, k2}, {0, -k2, 0}}};
        case FrenetConvention::NullNormal: return {{{0, k1, 0}, {0, k2, 0}, {-k1, 0, -k2}}};
        case FrenetConvention::NullTangent: return {{{0, k1, 0}, {k2, 0, -k1}, {0, -k2, 0}}};
    }
    return {};
}

namespace {

std::array<MVec3, 3> straight_legs(FrenetConvention c) {
    const double s = std::numbers::sqrt2 / 2.0;
    switch (c) {
        case FrenetConvention::SpacelikeNormal: return {MVec3{0, 0, 1}, MVec3{0, 1, 0}, MVec3{1, 0, 0}};
        case FrenetConvention::TimelikeNormal: return {MVec3{0, 0, 1}, MVec3{1, 0, 0}, MVec3{0, 1, 0}};
        case FrenetConvention::TimelikeTangent: return {MVec3{1, 0, 0}, MVec3{0, 1, 0}, MVec3{0, 0, 1}};
        case FrenetConvention::NullNormal: return {MVec3{0, 0, 1}, MVec3{s, s, 0}, MVec3{-s, s, 0}};
        case FrenetConvention::NullTangent: return {MVec3{s, s, 0}, MVec3{0, 0, 1}, MVec3{-s, s, 0}};
    }
    return {};
}

}  // namespace

FrameField straight_frame(FrenetConvention c, Interval domain) {
    const auto legs = straight_legs(c);
    return make_frame(
        [legs](double u) { return FrameSample{u * legs[0], legs[0], legs[1], legs[2], 0.0, 0.0}; },
        domain, signature_of(c));
}

FrameField constant_curvature_frame(FrenetConvention c, double k1, double k2, Interval domain) {
    if (k1 == 0.0 && k2 == 0.0) return straight_frame(c, domain);
    const auto legs = straight_legs(c);
    const auto k = frenet_matrix(c, k1, k2);
    // State rows (T, N, B, alpha); alpha' = T closes the linear system.
    Eigen::Matrix4d gen = Eigen::Matrix4d::Zero();
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) gen(i, j) = k[i][j];
    }
    gen(3, 0) = 1.0;
    Eigen::Matrix<double, 4, 3> initial;
    for (int i = 0; i < 3; ++i) initial.row(i) << legs[i].x0, legs[i].x1, legs[i].x2;
    initial.row(3).setZero();
    auto eval = [gen, initial, k1, k2](double u) {
        const Eigen::Matrix4d flow = (u * gen).exp();
        const Eigen::Matrix<double, 4, 3> y = flow * initial;
        auto row = [&y](int i) { return MVec3{y(i, 0), y(i, 1), y(i, 2)}; };
        return FrameSample{row(3), row(0), row(1), row(2), k1, k2};
    };
    return make_frame(std::move(eval), domain, signature_of(c));
}

FrameField circle_frame(Interval domain) {
    return make_frame(
        [](double u) {
            const double cu = std::cos(u);
            const double su = std::sin(u);
            return FrameSample{MVec3{0, cu, su}, MVec3{0, -su, cu}, MVec3{0, -cu, -su},
                               MVec3{1, 0, 0}, 1.0, 0.0};
        },
        domain, signature_of(FrenetConvention::SpacelikeNormal));
}

FrenetAuditReport audit_frenet(const FrameField& frame, FrenetConvention c, int grid_points) {
    if (grid_points < 2) throw DomainError("audit_frenet: grid_points must be >= 2");
    const Interval& d = frame.domain();
    const double h = 1e-5 * std::max(d.width(), 1e-12);
    // Keep the stencil inside the domain.
    const Interval inner{d.lo + h, d.hi - h};
    FrenetAuditReport report;
    for (int i = 0; i < grid_points; ++i) {
        const double u = grid_point(inner, i, grid_points);
        const FrameSample s = frame.at(u);
        const FrameSample fwd = frame.at(u + h);
        const FrameSample bwd = frame.at(u - h);
        const auto k = frenet_matrix(c, s.k1, s.k2);
        const std::array<MVec3, 3> legs{s.t, s.n, s.b};
        const std::array<MVec3, 3> dlegs{(fwd.t - bwd.t) / (2 * h), (fwd.n - bwd.n) / (2 * h),
                                         (fwd.b - bwd.b) / (2 * h)};
        double worst = euclid_max((fwd.alpha - bwd.alpha) / (2 * h) - s.t);
        for (int a = 0; a < 3; ++a) {
            const MVec3 expected = k[a][0] * legs[0] + k[a][1] * legs[1] + k[a][2] * legs[2];
            worst = std::max(worst, euclid_max(dlegs[a] - expected));
        }
        if (worst > report.max_residual) {
            report.max_residual = worst;
            report.worst_u = u;
        }
        ++report.samples;
    }
    return report;
}

}  // namespace canal
