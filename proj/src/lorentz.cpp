#include "canal/lorentz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "canal/errors.hpp"

namespace canal {

MVec3 MVec3::checked(double x0, double x1, double x2) {
    MVec3 v{x0, x1, x2};
    if (!v.is_finite()) {
        throw DomainError("MVec3: non-finite component");
    }
    return v;
}

bool MVec3::is_finite() const noexcept {
    return std::isfinite(x0) && std::isfinite(x1) && std::isfinite(x2);
}

std::string_view to_string(CausalCharacter c) noexcept {
    switch (c) {
        case CausalCharacter::SpaceLike: return "SpaceLike";
        case CausalCharacter::TimeLike: return "TimeLike";
        case CausalCharacter::LightLike: return "LightLike";
    }
    return "?";
}

std::string_view to_string(AngleKind k) noexcept {
    switch (k) {
        case AngleKind::SpaceSpace: return "SpaceSpace_cos";
        case AngleKind::SpaceSpaceTimelikePlane: return "SpaceSpaceTimelikePlane_cosh";
        case AngleKind::SpaceTime: return "SpaceTime_sinh";
    }
    return "?";
}

double pseudo_norm(const MVec3& u) noexcept {
    return std::sqrt(std::abs(minkowski_dot(u, u)));
}

CausalCharacter causal_character(const MVec3& u, double tolerance) {
    if (!(tolerance > 0.0)) {
        throw DomainError("causal_character: tolerance must be positive");
    }
    if (u == MVec3{}) {
        return CausalCharacter::SpaceLike;
    }
    const double q = minkowski_dot(u, u);
    if (q > tolerance) return CausalCharacter::SpaceLike;
    if (q < -tolerance) return CausalCharacter::TimeLike;
    return CausalCharacter::LightLike;
}

LorentzAngle LorentzAngle::make(AngleKind kind, double value) {
    if (!std::isfinite(value) || value < 0.0) {
        throw DomainError("LorentzAngle: value must be finite and non-negative");
    }
    if (kind == AngleKind::SpaceSpace && value > std::numbers::pi) {
        throw DomainError("LorentzAngle: space-like angle must lie in [0, pi]");
    }
    return LorentzAngle{kind, value};
}

namespace {

void require_finite(const MVec3& u, const MVec3& v, const char* op) {
    if (!u.is_finite() || !v.is_finite()) {
        throw DomainError(std::string(op) + ": non-finite input");
    }
}

// Both vectors must be space-like with non-zero norm.
void require_spacelike_pair(const MVec3& u, const MVec3& v, const char* op) {
    if (causal_character(u) != CausalCharacter::SpaceLike ||
        causal_character(v) != CausalCharacter::SpaceLike) {
        throw DomainError(std::string(op) + ": both vectors must be space-like");
    }
    if (u == MVec3{} || v == MVec3{}) {
        throw DomainError(std::string(op) + ": zero vector has no angle");
    }
}

}  // namespace

LorentzAngle angle_spacelike_plane(const MVec3& u, const MVec3& v) {
    require_finite(u, v, "angle_spacelike_plane");
    require_spacelike_pair(u, v, "angle_spacelike_plane");
    const double c = minkowski_dot(u, v) / (pseudo_norm(u) * pseudo_norm(v));
    // |c| > 1 is equivalent to a negative Gram determinant: the plane is time-like.
    if (std::abs(c) > 1.0 + kAngleClampBand) {
        throw DomainError("angle_spacelike_plane: vectors span a time-like plane");
    }
    // atan2 of the Gram determinant keeps full precision near 0 and pi, where acos does not.
    const double uv = minkowski_dot(u, v);
    const double gram = minkowski_dot(u, u) * minkowski_dot(v, v) - uv * uv;
    return LorentzAngle{AngleKind::SpaceSpace, std::atan2(std::sqrt(std::max(gram, 0.0)), uv)};
}

LorentzAngle angle_timelike_plane(const MVec3& u, const MVec3& v) {
    require_finite(u, v, "angle_timelike_plane");
    require_spacelike_pair(u, v, "angle_timelike_plane");
    const double c = std::abs(minkowski_dot(u, v)) / (pseudo_norm(u) * pseudo_norm(v));
    if (c < 1.0 - kAngleClampBand) {
        throw DomainError("angle_timelike_plane: vectors span a space-like plane");
    }
    const double uv = minkowski_dot(u, v);
    const double gram = uv * uv - minkowski_dot(u, u) * minkowski_dot(v, v);
    const double s = std::sqrt(std::max(gram, 0.0)) / (pseudo_norm(u) * pseudo_norm(v));
    return LorentzAngle{AngleKind::SpaceSpaceTimelikePlane, std::asinh(s)};
}

LorentzAngle angle_space_time(const MVec3& u, const MVec3& v) {
    require_finite(u, v, "angle_space_time");
    const auto cu = causal_character(u);
    const auto cv = causal_character(v);
    const bool ordered = cu == CausalCharacter::SpaceLike && cv == CausalCharacter::TimeLike;
    const bool swapped = cu == CausalCharacter::TimeLike && cv == CausalCharacter::SpaceLike;
    if (!(ordered || swapped) || u == MVec3{} || v == MVec3{}) {
        throw DomainError("angle_space_time: need one space-like and one time-like vector");
    }
    const double s = std::abs(minkowski_dot(u, v)) / (pseudo_norm(u) * pseudo_norm(v));
    return LorentzAngle{AngleKind::SpaceTime, std::asinh(s)};
}

}  // namespace canal
