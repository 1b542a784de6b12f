#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "canal/errors.hpp"
#include "canal/surface.hpp"
#include "fixtures.hpp"

using namespace canal;
using canal::test::kAllFamilies;

namespace {

const double kSqrt2 = std::numbers::sqrt2;

CanalSurface family_surface(CanalFamily fam, std::vector<double> r, BivariateFunction b = {},
                            Interval ud = {0.5, 2.0}, int m1 = 1, int m2 = 1,
                            std::optional<Interval> vd = std::nullopt) {
    if (uses_field(fam) && !vd) vd = Interval{-2.0, 2.0};
    return CanalSurface(CanalDefinition{fam, straight_frame(frenet_convention(fam), ud), polynomial(std::move(r)),
                                        m1, m2, std::move(b), ud, vd});
}

bool near(const MVec3& a, const MVec3& b, double tol) {
    return std::abs(a.x0 - b.x0) <= tol && std::abs(a.x1 - b.x1) <= tol && std::abs(a.x2 - b.x2) <= tol;
}

}  // namespace

TEST_CASE("family tags round-trip") {
    for (auto f : kAllFamilies) {
        CHECK(parse_family(to_string(f)) == f);
        CHECK(parse_family(to_string(f).substr(0, 2)) == f);
    }
    CHECK_FALSE(parse_family("F8").has_value());
    CHECK(to_string(CanalFamily::NullPairP) == "F6_nullpair_p");
    CHECK(parse_regime("TimelikeSurface_TimelikeMeridians") == SurfaceRegime::TimelikeSurfaceTimelikeMeridians);
}

TEST_CASE("worked-example position") {
    const CanalSurface s = canal::test::worked_example_surface();
    CHECK(near(position(s, 1.0, 0.0), MVec3{kSqrt2, 0.0, 2.0}, 1e-15));
    // At v = 0 the N coefficient g m1 sinh 0 vanishes: no x1 component.
    for (double u : {0.4, 0.9, 1.7, 2.0}) CHECK(position(s, u, 0.0).x1 == 0.0);
    CHECK_THROWS_AS(position(s, 2.1, 0.0), DomainError);
}

TEST_CASE("F3 position with r = 2u") {
    const CanalSurface s = family_surface(CanalFamily::Trigonometric, {0.0, 2.0});
    // alpha = (u,0,0), T = (1,0,0), N = (0,1,0); h(1) = 4 and p(1) = 2 sqrt 3.
    CHECK(near(position(s, 1.0, 0.0), MVec3{1.0 - 4.0, 2.0 * std::sqrt(3.0), 0.0}, 1e-14));
    // v is periodic for F3.
    CHECK(near(position(s, 1.0, 0.3), position(s, 1.0, 0.3 + 2.0 * std::numbers::pi), 1e-12));
}

TEST_CASE("worked-example closed and numeric fundamental forms") {
    const CanalSurface s = canal::test::worked_example_surface();
    for (double u : {0.5, 1.0, 1.9}) {
        for (double v : {-1.0, 0.0, 0.3, 1.2}) {
            const FundamentalForm c = fundamental_form_closed(s, u, v);
            CHECK(c.E == doctest::Approx(2.0).epsilon(1e-13));
            CHECK(std::abs(c.F) <= 1e-13);
            CHECK(c.G == doctest::Approx(2.0 * u * u).epsilon(1e-13));
            CHECK_FALSE(c.corrected);
        }
    }
    const FundamentalForm n = fundamental_form_numeric(s, 1.0, 0.3);
    CHECK(std::abs(n.E - 2.0) < 1e-6);
    CHECK(std::abs(n.F) < 1e-6);
    CHECK(std::abs(n.G - 2.0) < 1e-6);
}

TEST_CASE("numeric form converges at second order in the step") {
    std::mt19937_64 rng(3);
    for (auto fam : kAllFamilies) {
        const CanalSurface s = canal::test::random_surface(fam, rng);
        const FundamentalForm a = fundamental_form_numeric(s, 1.0, 0.2, 1e-3);
        const FundamentalForm b = fundamental_form_numeric(s, 1.0, 0.2, 5e-4);
        const FundamentalForm c = fundamental_form_numeric(s, 1.0, 0.2, 2.5e-4);
        // Successive differences shrink by about 4 under halving.
        const double d1 = std::abs(a.E - b.E) + std::abs(a.F - b.F) + std::abs(a.G - b.G);
        const double d2 = std::abs(b.E - c.E) + std::abs(b.F - c.F) + std::abs(b.G - c.G);
        CAPTURE(to_string(fam));
        CHECK(d2 < 0.3 * d1);
        CHECK(d1 < 1e-4);
    }
}

TEST_CASE("F7 numeric F is symmetric in the partials") {
    const CanalSurface s = family_surface(CanalFamily::TangentShiftMinus, {1.0, 0.5}, exponential_field(1.0));
    const Partials p = partials_numeric(s, 1.5, 0.1);
    CHECK(minkowski_dot(p.cu, p.cv) == minkowski_dot(p.cv, p.cu));
}

TEST_CASE("F6 closed form matches the numeric oracle at (1, 0)") {
    const CanalSurface s = family_surface(CanalFamily::NullPairP, {0.0, 0.5}, exponential_field(1.0));
    const FundamentalForm c = fundamental_form_closed(s, 1.0, 0.0);
    const FundamentalForm n = fundamental_form_numeric(s, 1.0, 0.0);
    CHECK(std::abs(c.E - n.E) <= 1e-6 * std::max(1.0, std::abs(n.E)));
    CHECK(std::abs(c.F - n.F) <= 1e-6 * std::max(1.0, std::abs(n.F)));
    CHECK(std::abs(c.G - n.G) <= 1e-6 * std::max(1.0, std::abs(n.G)));
    CHECK(detect_regime(s, 1.0, 0.0) == SurfaceRegime::TimelikeSurfaceSpacelikeMeridians);
}

TEST_CASE("regime classification") {
    CHECK(detect_regime(canal::test::worked_example_surface(), 1.2, 0.4) ==
          SurfaceRegime::SpacelikeSurfaceSpacelikeMeridians);
    CHECK_THROWS_AS(classify_form({1.0, 0.0, 0.0}, 0, 0), DegenerateError);
    CHECK_THROWS_AS(classify_form({0.0, 1.0, 1.0}, 0, 0), DegenerateError);
    CHECK(classify_form({1.0, 2.0, 1.0}, 0, 0) == SurfaceRegime::TimelikeSurfaceSpacelikeMeridians);
    CHECK(classify_form({-1.0, 0.0, 1.0}, 0, 0) == SurfaceRegime::TimelikeSurfaceTimelikeMeridians);
    try {
        classify_form({1.0, 1.0, 1.0}, 0.7, 0.2);
        FAIL("expected DegenerateError");
    } catch (const DegenerateError& e) {
        CHECK(e.u() == 0.7);
        CHECK(e.v() == 0.2);
    }
}

TEST_CASE("family guards raise DomainError at evaluation") {
    // F3 needs r'^2 > 1.
    const CanalSurface f3 = family_surface(CanalFamily::Trigonometric, {1.0, 1.0});
    CHECK_THROWS_AS(position(f3, 1.0, 0.0), DomainError);
    CHECK_THROWS_AS(fundamental_form_closed(f3, 1.0, 0.0), DomainError);
    // F5 needs h = r r' away from zero; a constant radius gives h = 0.
    const CanalSurface f5 = family_surface(CanalFamily::TangentShiftPlus, {1.0}, exponential_field(1.0));
    CHECK_THROWS_AS(position(f5, 1.0, 0.0), DomainError);
    // F4 needs b away from zero; b = v vanishes at v = 0 only.
    const CanalSurface f4 = family_surface(CanalFamily::NullPairT, {0.0, 0.5}, affine_field(0.0));
    CHECK_THROWS_AS(position(f4, 1.0, 0.0), DomainError);
    CHECK_NOTHROW(position(f4, 1.0, 0.5));
    CHECK_THROWS_AS(position(f4, 1.0, 2.5), DomainError);
    // Radius must be positive.
    const CanalSurface neg = family_surface(CanalFamily::SinhNormalCoshBinormal, {-1.0, 0.5});
    CHECK_THROWS_AS(position(neg, 1.0, 0.0), DomainError);
}

TEST_CASE("construction checks") {
    const Interval ud{0.5, 2.0};
    auto def = [&](CanalFamily fam) {
        return CanalDefinition{fam, straight_frame(frenet_convention(fam), ud), polynomial({0, 1}), 1, 1, {}, ud,
                               std::nullopt};
    };
    CHECK_THROWS_AS(CanalSurface(def(CanalFamily::NullPairT)), DomainError);
    auto with_b = def(CanalFamily::NullPairT);
    with_b.b = exponential_field(1.0);
    CHECK_THROWS_AS(CanalSurface{with_b}, DomainError);  // v domain missing
    auto bad_sign = def(CanalFamily::SinhNormalCoshBinormal);
    bad_sign.m1 = 2;
    CHECK_THROWS_AS(CanalSurface{bad_sign}, DomainError);
    auto wide = def(CanalFamily::SinhNormalCoshBinormal);
    wide.u_domain = Interval{0.0, 3.0};
    CHECK_THROWS_AS(CanalSurface{wide}, DomainError);
    CHECK(CanalSurface(def(CanalFamily::Trigonometric)).v_domain().hi == doctest::Approx(2 * std::numbers::pi));
}

TEST_CASE("radius terms") {
    const RadiusTerms k = radius_terms(polynomial({0.5, 0.3, 0.2}), 1.0);
    const double r = 1.0, r1 = 0.7, r2 = 0.4;
    CHECK(k.r == doctest::Approx(r));
    CHECK(k.h == doctest::Approx(r * r1));
    CHECK(k.h1 == doctest::Approx(r1 * r1 + r * r2));
    CHECK(k.g == doctest::Approx(r * std::sqrt(1 + r1 * r1)));
    CHECK(std::isnan(k.p_root));
    CHECK(k.t == doctest::Approx(-r * r * (1 + r1 * r1)));
    CHECK(k.p_sq == doctest::Approx(r * r * (1 - r1 * r1)));
    // Derivatives against central differences of the scalars themselves.
    const auto at = [](double u) { return radius_terms(polynomial({0.5, 0.3, 0.2}), u); };
    const double d = 1e-6;
    CHECK(k.g1 == doctest::Approx((at(1 + d).g - at(1 - d).g) / (2 * d)).epsilon(1e-8));
    CHECK(k.t1 == doctest::Approx((at(1 + d).t - at(1 - d).t) / (2 * d)).epsilon(1e-8));
    CHECK(k.p_sq1 == doctest::Approx((at(1 + d).p_sq - at(1 - d).p_sq) / (2 * d)).epsilon(1e-8));
    const auto steep = [](double u) { return radius_terms(polynomial({0.5, 2.0, 0.2}), u); };
    CHECK(steep(1.0).p_root1 == doctest::Approx((steep(1 + d).p_root - steep(1 - d).p_root) / (2 * d)).epsilon(1e-8));
}

TEST_CASE("audit on the worked example") {
    const CanalSurface s = canal::test::worked_example_surface();
    const ClosedFormAudit a = audit_closed_vs_numeric(s, 16, 16);
    CHECK(a.samples == 256);
    CHECK(a.passes(1e-6));
    CHECK(audit_closed_vs_numeric(s, 2, 2).samples == 4);
    CHECK_THROWS_AS(audit_closed_vs_numeric(s, 1, 4), DomainError);
}

TEST_CASE("property: corrected closed forms agree with the numeric oracle for every family") {
    std::mt19937_64 rng(20240611);
    const int signs[][2] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    for (auto fam : kAllFamilies) {
        const int sets = uses_signs(fam) ? 8 : 5;
        for (int i = 0; i < sets; ++i) {
            const int m1 = uses_signs(fam) ? signs[i % 4][0] : 0;
            const int m2 = uses_signs(fam) ? signs[i % 4][1] : 0;
            const CanalSurface s = canal::test::random_surface(fam, rng, m1, m2);
            const ClosedFormAudit a = audit_closed_vs_numeric(s, 16, 16);
            CAPTURE(to_string(fam));
            CAPTURE(i);
            CAPTURE(a.e.max_rel);
            CAPTURE(a.f.max_rel);
            CAPTURE(a.g.max_rel);
            CHECK(a.passes(1e-6));
        }
    }
}

TEST_CASE("printed forms: identical where correct, rejected by the oracle for F5 and F7") {
    std::mt19937_64 rng(99);
    for (auto fam : kAllFamilies) {
        const CanalSurface s = canal::test::random_surface(fam, rng);
        const FundamentalForm c = fundamental_form_closed(s, 1.1, 0.2, FormVariant::Corrected);
        const FundamentalForm p = fundamental_form_closed(s, 1.1, 0.2, FormVariant::Printed);
        const bool differs = fam == CanalFamily::TangentShiftPlus || fam == CanalFamily::TangentShiftMinus;
        CAPTURE(to_string(fam));
        CHECK(closed_form_correction(fam).empty() == !differs);
        CHECK(c.corrected == differs);
        CHECK_FALSE(p.corrected);
        if (differs) {
            CHECK_FALSE(audit_closed_vs_numeric(s, 16, 16, FormVariant::Printed).passes(1e-6));
        } else {
            CHECK(c.E == p.E);
            CHECK(c.F == p.F);
            CHECK(c.G == p.G);
        }
    }
}

TEST_CASE("property: F1 and F2 coincide on straight frames with m1 = m2") {
    for (int m : {1, -1}) {
        const CanalSurface f1 = family_surface(CanalFamily::SinhNormalCoshBinormal, {0.3, 0.7, 0.1}, {}, {0.5, 2.0}, m, m);
        const CanalSurface f2 = family_surface(CanalFamily::CoshNormalSinhBinormal, {0.3, 0.7, 0.1}, {}, {0.5, 2.0}, m, m);
        for (double u : {0.6, 1.0, 1.8}) {
            for (double v : {-1.5, 0.0, 0.7}) {
                const FundamentalForm a = fundamental_form_closed(f1, u, v);
                const FundamentalForm b = fundamental_form_closed(f2, u, v);
                CHECK(a.E == doctest::Approx(b.E).epsilon(1e-13));
                CHECK(a.G == doctest::Approx(b.G).epsilon(1e-13));
                CHECK(std::abs(a.F) <= 1e-13);
                CHECK(std::abs(b.F) <= 1e-13);
            }
        }
    }
}

TEST_CASE("property: flipping N together with m1 leaves the position unchanged") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> k(-0.8, 0.8);
    for (auto fam : {CanalFamily::SinhNormalCoshBinormal, CanalFamily::CoshNormalSinhBinormal,
                     CanalFamily::Trigonometric}) {
        const Interval ud{0.6, 1.4};
        const FrameField base = constant_curvature_frame(frenet_convention(fam), k(rng), k(rng), ud);
        const FrameField flipped(
            [base](double u) {
                FrameSample s = base.at(u);
                s.n = -s.n;
                return s;
            },
            ud, base.signature());
        const std::vector<double> r = fam == CanalFamily::Trigonometric ? std::vector<double>{0.5, 2.0}
                                                                        : std::vector<double>{0.5, 0.4};
        for (int m1 : {1, -1}) {
            const CanalSurface a(CanalDefinition{fam, base, polynomial(r), m1, 1, {}, ud, std::nullopt});
            const CanalSurface b(CanalDefinition{fam, flipped, polynomial(r), -m1, 1, {}, ud, std::nullopt});
            for (double u : {0.6, 1.0, 1.4}) {
                for (double v : {-0.8, 0.0, 0.5}) CHECK(near(position(a, u, v), position(b, u, v), 1e-14));
            }
        }
    }
}
