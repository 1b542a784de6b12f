#include "canal/config.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "canal/errors.hpp"
#include "canal/output.hpp"

namespace canal {

using nlohmann::json;

namespace {

void allow_keys(const json& j, const std::string& where, std::initializer_list<const char*> keys) {
    if (!j.is_object()) throw ConfigError(where + ": expected an object");
    const std::set<std::string> allowed(keys.begin(), keys.end());
    for (const auto& [k, _] : j.items()) {
        if (!allowed.contains(k)) throw ConfigError(where + ": unknown key \"" + k + "\"");
    }
}

double number(const json& j, const std::string& where) {
    if (!j.is_number()) throw ConfigError(where + ": expected a number");
    const double x = j.get<double>();
    if (!std::isfinite(x)) throw ConfigError(where + ": expected a finite number");
    return x;
}

double number_or(const json& j, const char* key, double fallback, const std::string& where) {
    return j.contains(key) ? number(j.at(key), where + "." + key) : fallback;
}

int integer(const json& j, const std::string& where) {
    if (!j.is_number_integer()) throw ConfigError(where + ": expected an integer");
    return j.get<int>();
}

std::string text(const json& j, const std::string& where) {
    if (!j.is_string()) throw ConfigError(where + ": expected a string");
    return j.get<std::string>();
}

const json& required(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key)) throw ConfigError(where + ": missing \"" + key + "\"");
    return j.at(key);
}

Interval interval(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2) throw ConfigError(where + ": expected [lo, hi]");
    Interval out{number(j[0], where + "[0]"), number(j[1], where + "[1]")};
    if (!(out.lo < out.hi)) throw ConfigError(where + ": need lo < hi");
    return out;
}

json interval_json(const Interval& i) { return json::array({i.lo, i.hi}); }

template <typename E, std::size_t N>
E lookup(const std::array<std::pair<const char*, E>, N>& table, const std::string& name,
         const std::string& where) {
    for (const auto& [n, e] : table) {
        if (name == n) return e;
    }
    throw ConfigError(where + ": unknown value \"" + name + "\"");
}

template <typename E, std::size_t N>
const char* name_of(const std::array<std::pair<const char*, E>, N>& table, E e) {
    for (const auto& [n, v] : table) {
        if (v == e) return n;
    }
    return "?";
}

constexpr std::array<std::pair<const char*, RadiusKind>, 3> kRadiusKinds{
    {{"linear", RadiusKind::Linear},
     {"constant", RadiusKind::Constant},
     {"polynomial", RadiusKind::Polynomial}}};

constexpr std::array<std::pair<const char*, FrameKind>, 3> kFrameKinds{
    {{"straight", FrameKind::Straight},
     {"constant_curvature", FrameKind::ConstantCurvature},
     {"circle", FrameKind::Circle}}};

constexpr std::array<std::pair<const char*, FieldKind>, 2> kFieldKinds{
    {{"exp", FieldKind::Exp}, {"shift", FieldKind::Shift}}};

constexpr std::array<std::pair<const char*, FrenetConvention>, 5> kConventions{
    {{"spacelike_normal", FrenetConvention::SpacelikeNormal},
     {"timelike_normal", FrenetConvention::TimelikeNormal},
     {"timelike_tangent", FrenetConvention::TimelikeTangent},
     {"null_normal", FrenetConvention::NullNormal},
     {"null_tangent", FrenetConvention::NullTangent}}};

constexpr std::array<std::pair<const char*, AngleKind>, 3> kAngleKinds{
    {{"SpaceSpace_cos", AngleKind::SpaceSpace},
     {"SpaceSpaceTimelikePlane_cosh", AngleKind::SpaceSpaceTimelikePlane},
     {"SpaceTime_sinh", AngleKind::SpaceTime}}};

RadiusSpec parse_radius(const json& j) {
    const std::string w = "surface.radius";
    allow_keys(j, w, {"kind", "a", "c", "coefficients"});
    RadiusSpec r;
    r.kind = lookup(kRadiusKinds, text(required(j, "kind", w), w + ".kind"), w + ".kind");
    switch (r.kind) {
        case RadiusKind::Linear:
            r.a = number_or(j, "a", 1.0, w);
            r.c = number_or(j, "c", 0.0, w);
            break;
        case RadiusKind::Constant:
            r.c = number(required(j, "c", w), w + ".c");
            break;
        case RadiusKind::Polynomial: {
            const json& cs = required(j, "coefficients", w);
            if (!cs.is_array() || cs.empty()) throw ConfigError(w + ".coefficients: expected a non-empty array");
            for (std::size_t i = 0; i < cs.size(); ++i) {
                r.coefficients.push_back(number(cs[i], w + ".coefficients"));
            }
            break;
        }
    }
    return r;
}

FrameSpec parse_frame(const json& j) {
    const std::string w = "surface.frame";
    allow_keys(j, w, {"kind", "convention", "k1", "k2"});
    FrameSpec f;
    f.kind = lookup(kFrameKinds, text(required(j, "kind", w), w + ".kind"), w + ".kind");
    if (j.contains("convention")) {
        f.convention = lookup(kConventions, text(j.at("convention"), w + ".convention"), w + ".convention");
    }
    if (f.kind == FrameKind::ConstantCurvature) {
        f.k1 = number_or(j, "k1", 0.0, w);
        f.k2 = number_or(j, "k2", 0.0, w);
    }
    return f;
}

FieldSpec parse_field(const json& j) {
    const std::string w = "surface.b";
    allow_keys(j, w, {"kind", "c", "lambda_u", "mu_v"});
    FieldSpec b;
    b.kind = lookup(kFieldKinds, text(required(j, "kind", w), w + ".kind"), w + ".kind");
    b.c = number(required(j, "c", w), w + ".c");
    b.lambda_u = number_or(j, "lambda_u", 0.0, w);
    b.mu_v = number_or(j, "mu_v", 1.0, w);
    return b;
}

SurfaceSpec parse_surface(const json& j) {
    const std::string w = "surface";
    allow_keys(j, w, {"family", "radius", "frame", "m1", "m2", "b", "u_domain", "v_domain"});
    SurfaceSpec s;
    const std::string fam = text(required(j, "family", w), w + ".family");
    const auto family = parse_family(fam);
    if (!family) throw ConfigError(w + ".family: unknown family \"" + fam + "\"");
    s.family = *family;
    s.radius = parse_radius(required(j, "radius", w));
    s.frame = j.contains("frame") ? parse_frame(j.at("frame")) : FrameSpec{};
    s.m1 = j.contains("m1") ? integer(j.at("m1"), w + ".m1") : 1;
    s.m2 = j.contains("m2") ? integer(j.at("m2"), w + ".m2") : 1;
    if ((s.m1 != 1 && s.m1 != -1) || (s.m2 != 1 && s.m2 != -1)) {
        throw ConfigError(w + ": m1 and m2 must be +1 or -1");
    }
    if (j.contains("b")) s.b = parse_field(j.at("b"));
    if (uses_field(s.family) && !s.b) throw ConfigError(w + ": families F4-F7 need \"b\"");
    s.u_domain = interval(required(j, "u_domain", w), w + ".u_domain");
    if (j.contains("v_domain")) s.v_domain = interval(j.at("v_domain"), w + ".v_domain");
    if (uses_field(s.family) && !s.v_domain) throw ConfigError(w + ": families F4-F7 need \"v_domain\"");
    return s;
}

ProblemSpec parse_problem(const json& j) {
    const std::string w = "problem";
    allow_keys(j, w, {"regime", "angle", "u0", "v0", "u_span", "branch", "step"});
    ProblemSpec p;
    if (j.contains("regime")) {
        const std::string r = text(j.at("regime"), w + ".regime");
        p.regime = parse_regime(r);
        if (!p.regime) throw ConfigError(w + ".regime: unknown regime \"" + r + "\"");
    }
    const json& a = required(j, "angle", w);
    if (a.is_object()) {
        allow_keys(a, w + ".angle", {"kind", "value"});
        if (a.contains("kind")) {
            p.angle_kind = lookup(kAngleKinds, text(a.at("kind"), w + ".angle.kind"), w + ".angle.kind");
        }
        p.angle = number(required(a, "value", w + ".angle"), w + ".angle.value");
    } else {
        p.angle = number(a, w + ".angle");
    }
    p.u0 = number(required(j, "u0", w), w + ".u0");
    p.v0 = number_or(j, "v0", 0.0, w);
    if (j.contains("u_span")) p.u_span = interval(j.at("u_span"), w + ".u_span");
    if (j.contains("branch")) {
        const std::string b = text(j.at("branch"), w + ".branch");
        const auto br = parse_branch(b);
        if (!br) throw ConfigError(w + ".branch: expected plus or minus");
        p.branch = *br;
    }
    p.step = number_or(j, "step", 1e-4, w);
    if (!(p.step > 0.0)) throw ConfigError(w + ".step: must be positive");
    return p;
}

OutputSpec parse_output(const json& j) {
    const std::string w = "output";
    allow_keys(j, w, {"csv", "obj", "json", "grid", "meridians"});
    OutputSpec o;
    if (j.contains("csv")) o.csv = text(j.at("csv"), w + ".csv");
    if (j.contains("obj")) o.obj = text(j.at("obj"), w + ".obj");
    if (j.contains("json")) o.json = text(j.at("json"), w + ".json");
    if (j.contains("grid")) {
        const json& g = j.at("grid");
        if (!g.is_array() || g.size() != 2) throw ConfigError(w + ".grid: expected [nu, nv]");
        o.nu = integer(g[0], w + ".grid[0]");
        o.nv = integer(g[1], w + ".grid[1]");
    }
    if (o.nu < 2 || o.nv < 2) throw ConfigError(w + ".grid: nu and nv must be at least 2");
    if (j.contains("meridians")) {
        const json& m = j.at("meridians");
        if (!m.is_array()) throw ConfigError(w + ".meridians: expected an array");
        for (const auto& v : m) o.meridians.push_back(number(v, w + ".meridians"));
    }
    return o;
}

VerifySpec parse_verify(const json& j) {
    const std::string w = "verify";
    allow_keys(j, w, {"checks", "form_grid", "form_tolerance", "angle_tolerance", "arc_tolerance",
                      "route_tolerance"});
    VerifySpec v;
    if (j.contains("checks")) {
        const json& c = j.at("checks");
        if (!c.is_array()) throw ConfigError(w + ".checks: expected an array");
        v.checks.clear();
        for (const auto& name : c) {
            const std::string n = text(name, w + ".checks");
            if (std::find(kAllChecks.begin(), kAllChecks.end(), n) == kAllChecks.end()) {
                throw ConfigError(w + ".checks: unknown check \"" + n + "\"");
            }
            v.checks.push_back(n);
        }
    }
    if (j.contains("form_grid")) v.form_grid = integer(j.at("form_grid"), w + ".form_grid");
    if (v.form_grid < 2) throw ConfigError(w + ".form_grid: must be at least 2");
    v.form_tolerance = number_or(j, "form_tolerance", v.form_tolerance, w);
    v.angle_tolerance = number_or(j, "angle_tolerance", v.angle_tolerance, w);
    v.arc_tolerance = number_or(j, "arc_tolerance", v.arc_tolerance, w);
    v.route_tolerance = number_or(j, "route_tolerance", v.route_tolerance, w);
    return v;
}

}  // namespace

RunConfig parse_config(const json& j) {
    try {
        allow_keys(j, "config", {"surface", "problem", "output", "verify"});
        RunConfig c;
        c.surface = parse_surface(required(j, "surface", "config"));
        if (j.contains("problem")) c.problem = parse_problem(j.at("problem"));
        if (j.contains("output")) c.output = parse_output(j.at("output"));
        if (j.contains("verify")) c.verify = parse_verify(j.at("verify"));
        return c;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
}

RunConfig parse_config_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    return parse_config(j);
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read config " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return parse_config_text(os.str());
}

json to_json(const RunConfig& c) {
    json s;
    const SurfaceSpec& sf = c.surface;
    s["family"] = std::string(to_string(sf.family));
    json r{{"kind", name_of(kRadiusKinds, sf.radius.kind)}};
    switch (sf.radius.kind) {
        case RadiusKind::Linear:
            r["a"] = sf.radius.a;
            r["c"] = sf.radius.c;
            break;
        case RadiusKind::Constant: r["c"] = sf.radius.c; break;
        case RadiusKind::Polynomial: r["coefficients"] = sf.radius.coefficients; break;
    }
    s["radius"] = r;
    json f{{"kind", name_of(kFrameKinds, sf.frame.kind)}};
    if (sf.frame.convention) f["convention"] = name_of(kConventions, *sf.frame.convention);
    if (sf.frame.kind == FrameKind::ConstantCurvature) {
        f["k1"] = sf.frame.k1;
        f["k2"] = sf.frame.k2;
    }
    s["frame"] = f;
    s["m1"] = sf.m1;
    s["m2"] = sf.m2;
    if (sf.b) {
        s["b"] = {{"kind", name_of(kFieldKinds, sf.b->kind)},
                  {"c", sf.b->c},
                  {"lambda_u", sf.b->lambda_u},
                  {"mu_v", sf.b->mu_v}};
    }
    s["u_domain"] = interval_json(sf.u_domain);
    if (sf.v_domain) s["v_domain"] = interval_json(*sf.v_domain);

    json out{{"surface", s}};
    if (c.problem) {
        const ProblemSpec& p = *c.problem;
        json pj;
        if (p.regime) pj["regime"] = std::string(to_string(*p.regime));
        json a{{"value", p.angle}};
        if (p.angle_kind) a["kind"] = name_of(kAngleKinds, *p.angle_kind);
        pj["angle"] = a;
        pj["u0"] = p.u0;
        pj["v0"] = p.v0;
        if (p.u_span) pj["u_span"] = interval_json(*p.u_span);
        pj["branch"] = p.branch == Branch::PlusRoot ? "plus" : "minus";
        pj["step"] = p.step;
        out["problem"] = pj;
    }
    const OutputSpec& o = c.output;
    out["output"] = {{"csv", o.csv},
                     {"obj", o.obj},
                     {"json", o.json},
                     {"grid", json::array({o.nu, o.nv})},
                     {"meridians", o.meridians}};
    const VerifySpec& v = c.verify;
    out["verify"] = {{"checks", v.checks},
                     {"form_grid", v.form_grid},
                     {"form_tolerance", v.form_tolerance},
                     {"angle_tolerance", v.angle_tolerance},
                     {"arc_tolerance", v.arc_tolerance},
                     {"route_tolerance", v.route_tolerance}};
    return rounded(out);
}

std::string serialize_config(const RunConfig& config) { return json_text(to_json(config)); }

UnivariateFunction build_radius(const RadiusSpec& spec) {
    switch (spec.kind) {
        case RadiusKind::Linear: return polynomial({spec.c, spec.a});
        case RadiusKind::Constant: return polynomial({spec.c});
        case RadiusKind::Polynomial: return polynomial(spec.coefficients);
    }
    return {};
}

BivariateFunction build_field(const FieldSpec& spec) {
    return spec.kind == FieldKind::Exp ? exponential_field(spec.c, spec.lambda_u, spec.mu_v)
                                       : affine_field(spec.c, spec.lambda_u, spec.mu_v);
}

FrameField build_frame(const FrameSpec& spec, CanalFamily family, const Interval& domain) {
    const FrenetConvention conv = spec.convention.value_or(frenet_convention(family));
    switch (spec.kind) {
        case FrameKind::Straight: return straight_frame(conv, domain);
        case FrameKind::ConstantCurvature: return constant_curvature_frame(conv, spec.k1, spec.k2, domain);
        case FrameKind::Circle: return circle_frame(domain);
    }
    return straight_frame(conv, domain);
}

CanalSurface build_surface(const SurfaceSpec& spec) {
    CanalDefinition d{spec.family,
                      build_frame(spec.frame, spec.family, spec.u_domain),
                      build_radius(spec.radius),
                      spec.m1,
                      spec.m2,
                      spec.b ? build_field(*spec.b) : BivariateFunction{},
                      spec.u_domain,
                      spec.v_domain};
    return CanalSurface(std::move(d));
}

LoxodromeProblem build_problem(const RunConfig& config, FormVariant variant) {
    if (!config.problem) throw ConfigError("config has no \"problem\" section");
    const ProblemSpec& p = *config.problem;
    CanalSurface surface = build_surface(config.surface);
    const SurfaceRegime regime = p.regime.value_or(detect_regime(surface, p.u0, p.v0));
    const AngleKind kind = p.angle_kind.value_or(angle_kind_for(regime));
    const Interval span = p.u_span.value_or(config.surface.u_domain);
    return LoxodromeProblem{std::move(surface), regime, LorentzAngle::make(kind, p.angle),
                            p.u0, p.v0, span, p.branch, p.step, variant};
}

}  // namespace canal
