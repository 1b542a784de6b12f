#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "canal/frame.hpp"
#include "canal/loxodrome.hpp"
#include "canal/surface.hpp"

namespace canal {

enum class RadiusKind { Linear, Constant, Polynomial };

/// linear: r = a u + c; constant: r = c; polynomial: sum coefficients[i] u^i.
struct RadiusSpec {
    RadiusKind kind = RadiusKind::Linear;
    double a = 1.0;
    double c = 0.0;
    std::vector<double> coefficients;

    friend bool operator==(const RadiusSpec&, const RadiusSpec&) = default;
};

enum class FrameKind { Straight, ConstantCurvature, Circle };

struct FrameSpec {
    FrameKind kind = FrameKind::Straight;
    /// Defaults to the family's convention.
    std::optional<FrenetConvention> convention;
    double k1 = 0.0;
    double k2 = 0.0;

    friend bool operator==(const FrameSpec&, const FrameSpec&) = default;
};

enum class FieldKind { Exp, Shift };

/// exp: b = c exp(lambda_u u + mu_v v); shift: b = c + lambda_u u + mu_v v.
struct FieldSpec {
    FieldKind kind = FieldKind::Exp;
    double c = 1.0;
    double lambda_u = 0.0;
    double mu_v = 1.0;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

struct SurfaceSpec {
    CanalFamily family = CanalFamily::SinhNormalCoshBinormal;
    RadiusSpec radius;
    FrameSpec frame;
    int m1 = 1;
    int m2 = 1;
    std::optional<FieldSpec> b;
    Interval u_domain{0.0, 1.0};
    std::optional<Interval> v_domain;

    friend bool operator==(const SurfaceSpec&, const SurfaceSpec&) = default;
};

struct ProblemSpec {
    /// Detected at (u0, v0) when absent.
    std::optional<SurfaceRegime> regime;
    /// Follows from the regime when absent.
    std::optional<AngleKind> angle_kind;
    double angle = 0.0;
    double u0 = 0.0;
    double v0 = 0.0;
    /// Defaults to the u domain.
    std::optional<Interval> u_span;
    Branch branch = Branch::PlusRoot;
    double step = 1e-4;

    friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;
};

struct OutputSpec {
    std::string csv = "loxodrome.csv";
    std::string obj = "surface.obj";
    std::string json = "report.json";
    int nu = 32;
    int nv = 32;
    std::vector<double> meridians;

    friend bool operator==(const OutputSpec&, const OutputSpec&) = default;
};

inline const std::vector<std::string> kAllChecks{"closed_vs_numeric", "constant_angle",
                                                 "arc_length_oracle", "route_agreement"};

struct VerifySpec {
    std::vector<std::string> checks = kAllChecks;
    int form_grid = 16;
    double form_tolerance = 1e-6;
    double angle_tolerance = 1e-6;
    double arc_tolerance = 1e-5;
    double route_tolerance = 1e-8;

    friend bool operator==(const VerifySpec&, const VerifySpec&) = default;
};

struct RunConfig {
    SurfaceSpec surface;
    std::optional<ProblemSpec> problem;
    OutputSpec output;
    VerifySpec verify;

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// ConfigError on missing keys, wrong types or invalid values.
RunConfig parse_config(const nlohmann::json& j);
RunConfig parse_config_text(const std::string& text);
RunConfig load_config(const std::filesystem::path& path);

/// Numbers rounded to 12 significant digits; keys in sorted order.
nlohmann::json to_json(const RunConfig& config);
std::string serialize_config(const RunConfig& config);

UnivariateFunction build_radius(const RadiusSpec& spec);
BivariateFunction build_field(const FieldSpec& spec);
FrameField build_frame(const FrameSpec& spec, CanalFamily family, const Interval& domain);
CanalSurface build_surface(const SurfaceSpec& spec);

/// ConfigError when the config has no problem section.
LoxodromeProblem build_problem(const RunConfig& config, FormVariant variant = FormVariant::Corrected);

}  // namespace canal
