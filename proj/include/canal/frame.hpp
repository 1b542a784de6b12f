#pragma once

#include <array>
#include <functional>
#include <string_view>

#include "canal/interval.hpp"
#include "canal/lorentz.hpp"

namespace canal {

/// Causal characters of (T, N, B). Two accepted shapes:
///  - one TimeLike leg and two SpaceLike legs (orthonormal frame), or
///  - one SpaceLike leg and two LightLike legs whose mutual product is +1
///    (pseudo-orthonormal null frame).
using FrameSignature = std::array<CausalCharacter, 3>;

/// Expected Gram matrix <X_i, X_j> for a signature; DomainError if the
/// signature is not one of the accepted shapes.
std::array<std::array<double, 3>, 3> frame_gram(const FrameSignature& sig);

/// Spine point, frame legs and curvatures at one parameter value.
struct FrameSample {
    MVec3 alpha;
    MVec3 t;
    MVec3 n;
    MVec3 b;
    double k1 = 0.0;
    double k2 = 0.0;
};

inline constexpr double kFrameTolerance = 1e-8;
inline constexpr int kFrameAuditGrid = 64;

/// Spine curve with its frame and curvature functions over a closed domain.
/// Immutable; the evaluator must be safe to call concurrently.
class FrameField {
public:
    using Evaluator = std::function<FrameSample(double)>;

    FrameField(Evaluator eval, Interval domain, FrameSignature signature);

    FrameSample at(double u) const { return eval_(u); }
    const Interval& domain() const noexcept { return domain_; }
    const FrameSignature& signature() const noexcept { return signature_; }

private:
    Evaluator eval_;
    Interval domain_;
    FrameSignature signature_;
};

struct FrameAuditReport {
    int samples = 0;
    double max_residual = 0.0;   ///< max |<X_i,X_j> - gram_ij| over legs and grid
    double worst_u = 0.0;
    int signature_violations = 0;  ///< samples where a leg's causal character differs

    bool passes(double tolerance = kFrameTolerance) const noexcept {
        return max_residual <= tolerance && signature_violations == 0;
    }
};

/// Samples the frame at grid_points equally spaced parameters (ends included).
FrameAuditReport audit_frame(const FrameField& frame, int grid_points);

/// Builds a frame and runs the orthonormality audit on kFrameAuditGrid points.
/// Throws FrameAuditError naming the worst u and residual on violation.
FrameField make_frame(std::function<MVec3(double)> alpha, std::function<MVec3(double)> t,
                      std::function<MVec3(double)> n, std::function<MVec3(double)> b,
                      std::function<double(double)> k1, std::function<double(double)> k2,
                      Interval domain, FrameSignature signature,
                      double tolerance = kFrameTolerance);

/// Same audit, for an evaluator returning all legs at once.
FrameField make_frame(FrameField::Evaluator eval, Interval domain, FrameSignature signature,
                      double tolerance = kFrameTolerance);

/// Frenet-type derivative rules assumed by the canal families' printed
/// fundamental forms (X' = K X with X = (T, N, B)).
enum class FrenetConvention {
    SpacelikeNormal,   // (S,S,T): T'=k1 N, N'=-k1 T - k2 B, B'=-k2 N
    TimelikeNormal,    // (S,T,S): T'=-k1 N, N'=-k1 T + k2 B, B'=k2 N
    TimelikeTangent,   // (T,S,S): T'=k1 N, N'=k1 T + k2 B, B'=-k2 N
    NullNormal,        // (S,L,L), <N,B>=1: T'=k1 N, N'=k2 N, B'=-k1 T - k2 B
    NullTangent        // (L,S,L), <T,B>=1: T'=k1 N, N'=k2 T - k1 B, B'=-k2 N
};

std::string_view to_string(FrenetConvention c) noexcept;
FrameSignature signature_of(FrenetConvention c) noexcept;

/// Row i holds the (T,N,B) coefficients of the derivative of leg i.
std::array<std::array<double, 3>, 3> frenet_matrix(FrenetConvention c, double k1, double k2) noexcept;

/// Straight spine alpha(u) = u T with constant legs and k1 = k2 = 0.
/// For SpacelikeNormal this is alpha = (0,0,u), T=(0,0,1), N=(0,1,0), B=(1,0,0).
FrameField straight_frame(FrenetConvention c, Interval domain);

/// Spine and frame solving the Frenet system exactly for constant k1, k2,
/// starting from the straight_frame legs at u = 0 with alpha(0) = 0.
FrameField constant_curvature_frame(FrenetConvention c, double k1, double k2, Interval domain);

/// alpha(u) = (0, cos u, sin u) with T=(0,-sin u,cos u), N=(0,-cos u,-sin u), B=(1,0,0),
/// k1 = 1, k2 = 0 (SpacelikeNormal convention).
FrameField circle_frame(Interval domain);

struct FrenetAuditReport {
    int samples = 0;
    double max_residual = 0.0;  ///< max over legs of |X' - (K X)| (Euclidean components), and |alpha' - T|
    double worst_u = 0.0;
};

/// Report-only consistency check of a frame against a Frenet convention,
/// differentiating with central differences of step 1e-5 * domain width.
FrenetAuditReport audit_frenet(const FrameField& frame, FrenetConvention c, int grid_points);

}  // namespace canal
