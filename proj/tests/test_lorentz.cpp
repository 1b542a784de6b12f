#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "canal/errors.hpp"
#include "canal/lorentz.hpp"

using namespace canal;

namespace {

MVec3 random_vec(std::mt19937_64& rng, double scale = 10.0) {
    std::uniform_real_distribution<double> d(-scale, scale);
    return {d(rng), d(rng), d(rng)};
}

bool succeeds(LorentzAngle (*fn)(const MVec3&, const MVec3&), const MVec3& u, const MVec3& v) {
    try {
        fn(u, v);
        return true;
    } catch (const DomainError&) {
        return false;
    }
}

}  // namespace

TEST_CASE("minkowski_dot examples") {
    CHECK(minkowski_dot({1, 0, 0}, {1, 0, 0}) == -1.0);
    CHECK(minkowski_dot({0, 1, 0}, {0, 0, 1}) == 0.0);
    CHECK(minkowski_dot({1, 2, 3}, {4, 5, 6}) == 24.0);
}

TEST_CASE("pseudo_norm examples") {
    CHECK(pseudo_norm({1, 0, 0}) == 1.0);
    CHECK(pseudo_norm({1, 1, 0}) == 0.0);
    CHECK(pseudo_norm({3, 4, 0}) == doctest::Approx(std::sqrt(7.0)).epsilon(1e-15));
}

TEST_CASE("causal_character examples and tolerance") {
    CHECK(causal_character({1, 0, 0}) == CausalCharacter::TimeLike);
    CHECK(causal_character({0, 1, 0}) == CausalCharacter::SpaceLike);
    CHECK(causal_character({1, 1, 0}) == CausalCharacter::LightLike);
    CHECK(causal_character({0, 0, 0}) == CausalCharacter::SpaceLike);
    CHECK_THROWS_AS(causal_character({0, 1, 0}, 0.0), DomainError);
    CHECK(to_string(CausalCharacter::LightLike) == "LightLike");
}

TEST_CASE("MVec3::checked rejects non-finite components") {
    CHECK_THROWS_AS(MVec3::checked(NAN, 0, 0), DomainError);
    CHECK_THROWS_AS(MVec3::checked(0, INFINITY, 0), DomainError);
    CHECK(MVec3::checked(1, 2, 3) == MVec3{1, 2, 3});
}

TEST_CASE("angle_spacelike_plane examples") {
    CHECK(angle_spacelike_plane({0, 1, 0}, {0, 1, 0}).value == 0.0);
    CHECK(angle_spacelike_plane({0, 1, 0}, {0, 0, 1}).value ==
          doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));
    CHECK(angle_spacelike_plane({0, 1, 0}, {0, -1, 0}).value ==
          doctest::Approx(std::numbers::pi).epsilon(1e-15));
    // (1,0,1) is light-like.
    CHECK_THROWS_AS(angle_spacelike_plane({0, 2, 0}, {1, 0, 1}), DomainError);
    // Both space-like but spanning a time-like plane.
    CHECK_THROWS_AS(angle_spacelike_plane({0, 0, 1}, {std::sinh(1.0), 0, std::cosh(1.0)}), DomainError);
    CHECK_THROWS_AS(angle_spacelike_plane({1, 0, 0}, {0, 1, 0}), DomainError);
}

TEST_CASE("angle_timelike_plane examples") {
    CHECK(angle_timelike_plane({0, 0, 1}, {0, 0, 1}).value == 0.0);
    CHECK(angle_timelike_plane({0, 0, 1}, {std::sinh(1.0), 0, std::cosh(1.0)}).value ==
          doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(angle_timelike_plane({0, 1, 0}, {0, 0, 1}), DomainError);
}

TEST_CASE("angle_space_time examples") {
    CHECK(angle_space_time({0, 1, 0}, {1, 0, 0}).value == 0.0);
    CHECK(angle_space_time({0, 0, 1}, {std::cosh(1.0), 0, std::sinh(1.0)}).value ==
          doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(angle_space_time({1, 0, 0}, {1, 0, 0}), DomainError);
    CHECK(angle_space_time({1, 0, 0}, {0, 1, 0}).kind == AngleKind::SpaceTime);
}

TEST_CASE("LorentzAngle::make validates the value") {
    CHECK_THROWS_AS(LorentzAngle::make(AngleKind::SpaceSpace, -0.1), DomainError);
    CHECK_THROWS_AS(LorentzAngle::make(AngleKind::SpaceSpace, 4.0), DomainError);
    CHECK_THROWS_AS(LorentzAngle::make(AngleKind::SpaceTime, NAN), DomainError);
    CHECK(LorentzAngle::make(AngleKind::SpaceTime, 4.0).value == 4.0);
}

TEST_CASE("property: bilinearity, symmetry and norm scaling") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> coef(-10.0, 10.0);
    for (int i = 0; i < 1000; ++i) {
        const MVec3 u = random_vec(rng), v = random_vec(rng), w = random_vec(rng);
        const double a = coef(rng), b = coef(rng);
        const double lhs = minkowski_dot(a * u + b * v, w);
        const double rhs = a * minkowski_dot(u, w) + b * minkowski_dot(v, w);
        const double scale = std::abs(a * minkowski_dot(u, w)) + std::abs(b * minkowski_dot(v, w)) + 1.0;
        CHECK(std::abs(lhs - rhs) <= 1e-12 * scale);
        CHECK(minkowski_dot(u, v) == minkowski_dot(v, u));
        const double n = pseudo_norm(u);
        CHECK(std::abs(pseudo_norm(a * u) - std::abs(a) * n) <= 1e-12 * (std::abs(a) * n + 1e-300));
    }
}

TEST_CASE("property: causal character is invariant under positive scaling") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> lambda(0.1, 10.0);
    int tested = 0;
    for (int i = 0; i < 2000; ++i) {
        const MVec3 u = random_vec(rng);
        const double l = lambda(rng);
        const double q = minkowski_dot(u, u);
        if (std::min(std::abs(q), std::abs(l * l * q)) < 10 * kCausalTolerance) continue;
        CHECK(causal_character(l * u) == causal_character(u));
        ++tested;
    }
    CHECK(tested > 1000);
}

TEST_CASE("property: angles are symmetric and exactly one regime applies") {
    std::mt19937_64 rng(13);
    int pairs = 0;
    for (int i = 0; i < 5000; ++i) {
        const MVec3 u = random_vec(rng), v = random_vec(rng);
        const auto cu = causal_character(u), cv = causal_character(v);
        if (cu == CausalCharacter::LightLike || cv == CausalCharacter::LightLike) continue;
        if (cu == CausalCharacter::TimeLike && cv == CausalCharacter::TimeLike) continue;
        const double uv = minkowski_dot(u, v);
        const double gram = minkowski_dot(u, u) * minkowski_dot(v, v) - uv * uv;
        if (std::abs(gram) < 1e-6 * (std::abs(minkowski_dot(u, u) * minkowski_dot(v, v)) + uv * uv)) continue;
        const int ok = succeeds(angle_spacelike_plane, u, v) + succeeds(angle_timelike_plane, u, v) +
                       succeeds(angle_space_time, u, v);
        CHECK(ok == 1);
        if (succeeds(angle_spacelike_plane, u, v)) {
            CHECK(angle_spacelike_plane(u, v).value == doctest::Approx(angle_spacelike_plane(v, u).value));
            CHECK(angle_spacelike_plane(u, u).value == 0.0);
        }
        if (succeeds(angle_timelike_plane, u, v)) {
            CHECK(angle_timelike_plane(u, v).value == doctest::Approx(angle_timelike_plane(v, u).value));
        }
        if (succeeds(angle_space_time, u, v)) {
            CHECK(angle_space_time(u, v).value == doctest::Approx(angle_space_time(v, u).value));
        }
        ++pairs;
    }
    CHECK(pairs > 1000);
}
