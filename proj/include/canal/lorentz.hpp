#pragma once

#include <string_view>

namespace canal {

/// Vector in Minkowski 3-space. x0 is the time-like coordinate; the metric
/// has signature (-,+,+).
struct MVec3 {
    double x0 = 0.0;
    double x1 = 0.0;
    double x2 = 0.0;

    /// Builds a vector, throwing DomainError on NaN or infinite components.
    static MVec3 checked(double x0, double x1, double x2);

    bool is_finite() const noexcept;

    constexpr MVec3& operator+=(const MVec3& o) noexcept {
        x0 += o.x0;
        x1 += o.x1;
        x2 += o.x2;
        return *this;
    }
    constexpr MVec3& operator-=(const MVec3& o) noexcept {
        x0 -= o.x0;
        x1 -= o.x1;
        x2 -= o.x2;
        return *this;
    }
    constexpr MVec3& operator*=(double s) noexcept {
        x0 *= s;
        x1 *= s;
        x2 *= s;
        return *this;
    }

    friend constexpr MVec3 operator+(MVec3 a, const MVec3& b) noexcept { return a += b; }
    friend constexpr MVec3 operator-(MVec3 a, const MVec3& b) noexcept { return a -= b; }
    friend constexpr MVec3 operator-(MVec3 a) noexcept { return a *= -1.0; }
    friend constexpr MVec3 operator*(double s, MVec3 a) noexcept { return a *= s; }
    friend constexpr MVec3 operator*(MVec3 a, double s) noexcept { return a *= s; }
    friend constexpr MVec3 operator/(MVec3 a, double s) noexcept { return a *= 1.0 / s; }
    friend constexpr bool operator==(const MVec3&, const MVec3&) = default;
};

enum class CausalCharacter { SpaceLike, TimeLike, LightLike };

std::string_view to_string(CausalCharacter c) noexcept;

/// Band around zero inside which <u,u> counts as light-like.
inline constexpr double kCausalTolerance = 1e-10;

/// Round-off band for the cos / cosh arguments of the angle functions. Inside it
/// the argument is clamped; beyond it the call is a regime mismatch.
inline constexpr double kAngleClampBand = 1e-9;

/// -u0 v0 + u1 v1 + u2 v2
constexpr double minkowski_dot(const MVec3& u, const MVec3& v) noexcept {
    return -u.x0 * v.x0 + u.x1 * v.x1 + u.x2 * v.x2;
}

/// sqrt(|<u,u>|)
double pseudo_norm(const MVec3& u) noexcept;

CausalCharacter causal_character(const MVec3& u, double tolerance = kCausalTolerance);

enum class AngleKind {
    SpaceSpace,                // cos psi, space-like plane
    SpaceSpaceTimelikePlane,   // cosh eta, two space-like vectors spanning a time-like plane
    SpaceTime                  // sinh phi, space-like against time-like
};

std::string_view to_string(AngleKind k) noexcept;

struct LorentzAngle {
    AngleKind kind = AngleKind::SpaceSpace;
    double value = 0.0;

    /// Throws DomainError when value is negative, not finite, or (for SpaceSpace) above pi.
    static LorentzAngle make(AngleKind kind, double value);
};

/// psi in [0, pi] with <u,v> = |u||v| cos psi. Both vectors space-like and the
/// plane they span space-like; otherwise DomainError.
LorentzAngle angle_spacelike_plane(const MVec3& u, const MVec3& v);

/// eta >= 0 with |<u,v>| = |u||v| cosh eta. Both vectors space-like, spanning a
/// time-like plane; otherwise DomainError.
LorentzAngle angle_timelike_plane(const MVec3& u, const MVec3& v);

/// phi >= 0 with |<u,v>| = |u||v| sinh phi. One vector space-like, the other
/// time-like (either order); otherwise DomainError.
LorentzAngle angle_space_time(const MVec3& u, const MVec3& v);

}  // namespace canal
