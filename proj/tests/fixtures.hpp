#pragma once

#include <random>
#include <string>
#include <vector>

#include "canal/loxodrome.hpp"
#include "canal/surface.hpp"

namespace canal::test {

/// r(u) = u on the straight spine (0,0,u), m1 = m2 = 1, u in [0.4, 2].
CanalSurface worked_example_surface();

/// The worked example problem: psi = pi/3, u0 = 1, v0 = 0.
LoxodromeProblem worked_example_problem(double step = 1e-4, double psi = 1.0471975511965976,
                                        Branch branch = Branch::PlusRoot);

struct NamedProblem {
    std::string name;
    LoxodromeProblem problem;
};

/// Constant-angle fixtures: nine space-like cases over F1-F3 (including the
/// worked example), one F6 case with time-like surface and space-like
/// meridians, one F7 case with time-like meridians.
std::vector<NamedProblem> constant_angle_fixtures(double step = 1e-4);

/// A surface of the family with random constant curvatures, random smooth
/// radius, random signs and random exponential b, admissible on
/// u in [0.6, 1.4] (v in [-0.5, 0.5] for F4-F7). Non-zero m1, m2 override the
/// random signs.
CanalSurface random_surface(CanalFamily family, std::mt19937_64& rng, int m1 = 0, int m2 = 0);

inline constexpr CanalFamily kAllFamilies[] = {
    CanalFamily::SinhNormalCoshBinormal, CanalFamily::CoshNormalSinhBinormal,
    CanalFamily::Trigonometric,          CanalFamily::NullPairT,
    CanalFamily::TangentShiftPlus,       CanalFamily::NullPairP,
    CanalFamily::TangentShiftMinus};

}  // namespace canal::test
