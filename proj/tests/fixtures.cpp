#include "fixtures.hpp"

#include <numbers>

namespace canal::test {

namespace {

constexpr double kPi = std::numbers::pi;

struct Spec {
    std::string name;
    CanalFamily family;
    double k1, k2;
    std::vector<double> radius;
    int m1, m2;
    double b_scale;  // b = b_scale * e^v for F4-F7
    double angle;
    double u0, v0;
    Interval span;
};

LoxodromeProblem make_problem(const Spec& s, double step) {
    const FrenetConvention conv = frenet_convention(s.family);
    FrameField frame = (s.k1 == 0.0 && s.k2 == 0.0)
                           ? straight_frame(conv, s.span)
                           : constant_curvature_frame(conv, s.k1, s.k2, s.span);
    const bool field = uses_field(s.family);
    CanalSurface surface(CanalDefinition{s.family, std::move(frame), polynomial(s.radius), s.m1, s.m2,
                                         field ? exponential_field(s.b_scale) : BivariateFunction{},
                                         s.span,
                                         field ? std::optional<Interval>(Interval{-2.0, 2.0}) : std::nullopt});
    const SurfaceRegime regime = detect_regime(surface, s.u0, s.v0);
    return LoxodromeProblem{std::move(surface), regime,
                            LorentzAngle::make(angle_kind_for(regime), s.angle),
                            s.u0, s.v0, s.span, Branch::PlusRoot, step};
}

}  // namespace

CanalSurface worked_example_surface() {
    const Interval d{0.4, 2.0};
    return CanalSurface(CanalDefinition{CanalFamily::SinhNormalCoshBinormal,
                                        straight_frame(FrenetConvention::SpacelikeNormal, d),
                                        polynomial({0.0, 1.0}), 1, 1, {}, d, std::nullopt});
}

LoxodromeProblem worked_example_problem(double step, double psi, Branch branch) {
    return LoxodromeProblem{worked_example_surface(), SurfaceRegime::SpacelikeSurfaceSpacelikeMeridians,
                            LorentzAngle::make(AngleKind::SpaceSpace, psi),
                            1.0, 0.0, Interval{0.4, 2.0}, branch, step};
}

std::vector<NamedProblem> constant_angle_fixtures(double step) {
    const Interval mid{0.5, 1.5};
    const Interval wide{0.5, 2.0};
    const std::vector<Spec> specs{
        {"F1 curved r=0.2+0.5u psi=pi/6", CanalFamily::SinhNormalCoshBinormal, 0.3, 0.2, {0.2, 0.5}, 1, 1, 0, kPi / 6, 1, 0, mid},
        {"F1 straight r=u m=(-1,1) psi=2pi/5", CanalFamily::SinhNormalCoshBinormal, 0, 0, {0, 1}, -1, 1, 0, 2 * kPi / 5, 1, 0, wide},
        {"F2 curved r=0.3+0.6u psi=pi/3", CanalFamily::CoshNormalSinhBinormal, 0.2, 0.1, {0.3, 0.6}, 1, 1, 0, kPi / 3, 1, 0, mid},
        {"F2 curved m=(-1,1) psi=2pi/5", CanalFamily::CoshNormalSinhBinormal, 0.2, -0.1, {0.3, 0.6}, -1, 1, 0, 2 * kPi / 5, 1, 0, Interval{0.85, 1.5}},
        {"F2 straight r=0.5+u m=(1,-1) psi=pi/6", CanalFamily::CoshNormalSinhBinormal, 0, 0, {0.5, 1}, 1, -1, 0, kPi / 6, 1, 0, wide},
        {"F3 curved r=2u psi=pi/6", CanalFamily::Trigonometric, 0.2, 0.1, {0, 2}, 1, 1, 0, kPi / 6, 1, 0, mid},
        {"F3 curved r=0.2+2u m=(1,-1) psi=pi/3", CanalFamily::Trigonometric, 0.2, 0.1, {0.2, 2}, 1, -1, 0, kPi / 3, 1, 0.5, mid},
        {"F3 straight r=2u m=(-1,-1) psi=2pi/5", CanalFamily::Trigonometric, 0, 0, {0, 2}, -1, -1, 0, 2 * kPi / 5, 1, 0, wide},
        {"F6 straight r=u/2 b=e^v eta=0.5", CanalFamily::NullPairP, 0, 0, {0, 0.5}, 1, 1, 1.0, 0.5, 1, 0, wide},
        {"F7 straight r=1+u/2 b=e^v phi=0.5", CanalFamily::TangentShiftMinus, 0, 0, {1, 0.5}, 1, 1, 1.0, 0.5, 1.5, 0, Interval{1, 2}},
    };
    std::vector<NamedProblem> out;
    out.push_back({"worked example psi=pi/3", worked_example_problem(step)});
    for (const Spec& s : specs) out.push_back({s.name, make_problem(s, step)});
    return out;
}

CanalSurface random_surface(CanalFamily family, std::mt19937_64& rng, int m1_fixed, int m2_fixed) {
    auto uni = [&rng](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };
    auto sign = [&rng]() { return std::bernoulli_distribution(0.5)(rng) ? 1 : -1; };
    const Interval ud{0.6, 1.4};
    const double k1 = uni(-0.8, 0.8);
    const double k2 = uni(-0.8, 0.8);
    // Quadratic radius: positive on the domain, with r'^2 > 1 for F3.
    const std::vector<double> r = family == CanalFamily::Trigonometric
                                      ? std::vector<double>{uni(0.5, 1.0), uni(1.5, 2.5), uni(0.0, 0.2)}
                                      : std::vector<double>{uni(0.5, 1.0), uni(0.2, 0.6), uni(0.0, 0.2)};
    const int m1 = m1_fixed != 0 ? m1_fixed : sign();
    const int m2 = m2_fixed != 0 ? m2_fixed : sign();
    const bool field = uses_field(family);
    const double bc = uni(0.5, 2.0);
    const double bl = uni(-0.5, 0.5);
    const double bm = uni(0.5, 1.5);
    return CanalSurface(CanalDefinition{
        family, constant_curvature_frame(frenet_convention(family), k1, k2, ud), polynomial(r), m1, m2,
        field ? exponential_field(bc, bl, bm) : BivariateFunction{}, ud,
        field ? std::optional<Interval>(Interval{-0.5, 0.5}) : std::nullopt});
}

}  // namespace canal::test
