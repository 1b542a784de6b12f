#include "canal/commands.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <regex>

#include "canal/errors.hpp"
#include "canal/output.hpp"

namespace canal {

using nlohmann::json;

namespace {

FormVariant variant_of(const CommandOptions& opts) {
    return opts.use_printed_forms ? FormVariant::Printed : FormVariant::Corrected;
}

RunConfig apply_overrides(RunConfig config, const CommandOptions& opts) {
    if (config.problem) {
        if (opts.step) {
            if (!(*opts.step > 0.0)) throw ConfigError("--step must be positive");
            config.problem->step = *opts.step;
        }
        if (opts.branch) config.problem->branch = *opts.branch;
    }
    if (opts.grid) {
        if (opts.grid->first < 2 || opts.grid->second < 2) {
            throw ConfigError("--grid: nu and nv must be at least 2");
        }
        config.output.nu = opts.grid->first;
        config.output.nv = opts.grid->second;
    }
    return config;
}

std::string utc_now() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

json deviation_json(const CoefficientDeviation& d) {
    return {{"max_abs", d.max_abs}, {"max_rel", d.max_rel}, {"worst_u", d.worst_u}, {"worst_v", d.worst_v}};
}

json audit_json(const ClosedFormAudit& a, double tolerance, FormVariant variant) {
    return {{"samples", a.samples},
            {"variant", variant == FormVariant::Printed ? "printed" : "corrected"},
            {"E", deviation_json(a.e)},
            {"F", deviation_json(a.f)},
            {"G", deviation_json(a.g)},
            {"tolerance", tolerance},
            {"passes", a.passes(tolerance)}};
}

json interval_json(const Interval& i) { return json::array({i.lo, i.hi}); }

json problem_json(const LoxodromeProblem& p) {
    return {{"regime", std::string(to_string(p.regime))},
            {"angle", {{"kind", std::string(to_string(p.angle.kind))}, {"value", p.angle.value}}},
            {"u0", p.u0},
            {"v0", p.v0},
            {"u_span", interval_json(p.u_span)},
            {"branch", std::string(to_string(p.branch))},
            {"step", p.step}};
}

CommandResult finish(json report, int code, const RunConfig& config, const CommandOptions& opts) {
    report["exit_code"] = code;
    if (opts.timestamp) report["generated_at"] = utc_now();
    CommandResult r{code, rounded(std::move(report))};
    write_file(opts.out_dir / config.output.json, json_text(r.report));
    return r;
}

}  // namespace

std::optional<std::pair<int, int>> parse_grid(const std::string& s) {
    static const std::regex re(R"((\d{1,6})[xX](\d{1,6}))");
    std::smatch m;
    if (!std::regex_match(s, m, re)) return std::nullopt;
    return std::pair{std::stoi(m[1]), std::stoi(m[2])};
}

CommandResult cmd_classify(const RunConfig& in, const CommandOptions& opts) {
    const RunConfig config = apply_overrides(in, opts);
    const CanalSurface s = build_surface(config.surface);
    const int nu = config.output.nu;
    const int nv = config.output.nv;
    const Interval vr = sampling_v_range(s);

    json cells = json::array();
    json offending = json::array();
    std::optional<SurfaceRegime> global;
    bool mixed = false;
    for (int i = 0; i < nu; ++i) {
        const double u = cell_centre(s.u_domain(), i, nu);
        for (int j = 0; j < nv; ++j) {
            const double v = cell_centre(vr, j, nv);
            json cell{{"u", u}, {"v", v}};
            try {
                const SurfaceRegime r = detect_regime(s, u, v);
                cell["regime"] = std::string(to_string(r));
                if (global && *global != r) mixed = true;
                if (!global) global = r;
            } catch (const Error& e) {
                cell["error"] = e.what();
                offending.push_back(cell);
            }
            cells.push_back(cell);
        }
    }

    json report{{"command", "classify"},
                {"family", std::string(to_string(s.family()))},
                {"grid", json::array({nu, nv})},
                {"cells", cells},
                {"offending_cells", offending}};
    report["regime"] = (!offending.empty() || mixed || !global) ? json(nullptr)
                                                                 : json(std::string(to_string(*global)));
    report["uniform"] = offending.empty() && !mixed;
    try {
        const ClosedFormAudit a = audit_closed_vs_numeric(s, nu, nv, variant_of(opts));
        report["closed_vs_numeric"] = audit_json(a, config.verify.form_tolerance, variant_of(opts));
    } catch (const Error& e) {
        report["closed_vs_numeric"] = {{"error", e.what()}};
    }
    return finish(std::move(report), offending.empty() ? kExitOk : kExitDomain, config, opts);
}

CommandResult cmd_solve(const RunConfig& in, const CommandOptions& opts) {
    const RunConfig config = apply_overrides(in, opts);
    const LoxodromeProblem p = build_problem(config, variant_of(opts));
    json report{{"command", "solve"},
                {"family", std::string(to_string(p.surface.family()))},
                {"problem", problem_json(p)}};
    LoxodromeSolution sol;
    try {
        sol = integrate(p);
    } catch (const LoxodromeError& e) {
        report["error"] = {{"message", e.what()}, {"failure_u", e.u()}};
        return finish(std::move(report), kExitIntegration, config, opts);
    }
    write_file(opts.out_dir / config.output.csv, loxodrome_csv(sol));

    const auto [lo, hi] = std::minmax_element(sol.samples.begin(), sol.samples.end(),
                                              [](const auto& a, const auto& b) { return a.v < b.v; });
    const AngleReport angle = verify_constant_angle(sol, p.angle, config.verify.angle_tolerance);
    report["csv"] = config.output.csv;
    report["samples"] = sol.samples.size();
    report["v_start"] = sol.samples.front().v;
    report["v_end"] = sol.samples.back().v;
    report["v_min"] = lo->v;
    report["v_max"] = hi->v;
    report["arc_length"] = sol.arc_length;
    report["arc_length_oracle"] = arc_length_oracle(p, sol);
    report["target_angle"] = sol.target_angle;
    report["max_angle_error"] = sol.max_angle_error;
    report["worst_u"] = sol.worst_u;
    report["max_route_gap"] = sol.max_route_gap;
    report["constant_angle"] = {{"passes", angle.passes}, {"tolerance", angle.tolerance}};
    return finish(std::move(report), angle.passes ? kExitOk : kExitVerification, config, opts);
}

CommandResult cmd_sample(const RunConfig& in, const CommandOptions& opts) {
    const RunConfig config = apply_overrides(in, opts);
    const CanalSurface s = build_surface(config.surface);
    const int nu = config.output.nu;
    const int nv = config.output.nv;
    const Mesh mesh = surface_obj(s, nu, nv, s.u_domain(), sampling_v_range(s));
    write_file(opts.out_dir / config.output.obj, mesh.text);

    // Meridians share the loxodrome's parameter grid when a problem is configured.
    std::vector<double> us;
    if (config.problem) {
        const ProblemSpec& p = *config.problem;
        us = integration_grid(p.u_span.value_or(s.u_domain()), p.u0, p.step);
    } else {
        for (int i = 0; i < nu; ++i) us.push_back(s.u_domain().lo + s.u_domain().width() * i / (nu - 1));
    }
    json meridians = json::array();
    for (std::size_t k = 0; k < config.output.meridians.size(); ++k) {
        const double v = config.output.meridians[k];
        const std::string name = "meridian_" + std::to_string(k) + ".csv";
        write_file(opts.out_dir / name, meridian_csv(s, v, us));
        meridians.push_back({{"v", v}, {"file", name}, {"points", us.size()}});
    }
    json report{{"command", "sample"},
                {"family", std::string(to_string(s.family()))},
                {"obj", config.output.obj},
                {"grid", json::array({nu, nv})},
                {"vertices", mesh.vertices},
                {"faces", mesh.faces},
                {"axis_order", "x1,x2,x0"},
                {"meridians", meridians}};
    return finish(std::move(report), kExitOk, config, opts);
}

CommandResult cmd_verify(const RunConfig& in, const CommandOptions& opts) {
    const RunConfig config = apply_overrides(in, opts);
    const VerifySpec& vs = config.verify;
    const FormVariant variant = variant_of(opts);
    const bool needs_solution =
        std::any_of(vs.checks.begin(), vs.checks.end(), [](const std::string& c) { return c != "closed_vs_numeric"; });
    if (needs_solution && !config.problem) {
        throw ConfigError("verify: the configured checks need a \"problem\" section");
    }

    std::optional<LoxodromeProblem> problem;
    std::optional<LoxodromeSolution> sol;
    std::string solve_error;
    if (needs_solution) {
        problem = build_problem(config, variant);
        try {
            sol = integrate(*problem);
        } catch (const Error& e) {
            solve_error = e.what();
        }
    }

    json checks = json::array();
    bool all_pass = true;
    for (const std::string& name : vs.checks) {
        json c{{"name", name}};
        try {
            if (name == "closed_vs_numeric") {
                const CanalSurface s = build_surface(config.surface);
                const ClosedFormAudit a = audit_closed_vs_numeric(s, vs.form_grid, vs.form_grid, variant);
                c["measured"] = std::max({a.e.max_rel, a.f.max_rel, a.g.max_rel});
                c["tolerance"] = vs.form_tolerance;
                c["passes"] = a.passes(vs.form_tolerance);
                c["detail"] = audit_json(a, vs.form_tolerance, variant);
            } else if (!sol) {
                c["passes"] = false;
                c["error"] = solve_error;
            } else if (name == "constant_angle") {
                const AngleReport r = verify_constant_angle(*sol, problem->angle, vs.angle_tolerance);
                c["measured"] = r.max_error;
                c["tolerance"] = vs.angle_tolerance;
                c["worst_u"] = r.worst_u;
                c["passes"] = r.passes;
            } else if (name == "arc_length_oracle") {
                const double oracle = arc_length_oracle(*problem, *sol);
                const double gap = std::abs(oracle - sol->arc_length);
                c["arc_length"] = sol->arc_length;
                c["oracle"] = oracle;
                c["measured"] = gap;
                c["tolerance"] = vs.arc_tolerance;
                c["passes"] = gap <= vs.arc_tolerance;
            } else if (name == "route_agreement") {
                c["measured"] = sol->max_route_gap;
                c["tolerance"] = vs.route_tolerance;
                c["passes"] = sol->max_route_gap <= vs.route_tolerance;
            }
        } catch (const Error& e) {
            c["passes"] = false;
            c["error"] = e.what();
        }
        all_pass = all_pass && c.value("passes", false);
        checks.push_back(c);
    }
    json report{{"command", "verify"},
                {"family", std::string(to_string(config.surface.family))},
                {"checks", checks},
                {"passes", all_pass}};
    if (problem) report["problem"] = problem_json(*problem);
    return finish(std::move(report), all_pass ? kExitOk : kExitVerification, config, opts);
}

CommandResult run_command(const std::string& command, const RunConfig& config,
                          const CommandOptions& opts) {
    json report{{"command", command}};
    int code = kExitOk;
    try {
        if (command == "classify") return cmd_classify(config, opts);
        if (command == "solve") return cmd_solve(config, opts);
        if (command == "sample") return cmd_sample(config, opts);
        if (command == "verify") return cmd_verify(config, opts);
        throw ConfigError("unknown command \"" + command + "\"");
    } catch (const ConfigError& e) {
        report["error"] = {{"type", "ConfigError"}, {"message", e.what()}};
        code = kExitConfig;
    } catch (const FrameAuditError& e) {
        report["error"] = {{"type", "FrameAuditError"}, {"message", e.what()}, {"worst_u", e.worst_u()}};
        code = kExitConfig;
    } catch (const DegenerateError& e) {
        report["error"] = {{"type", "DegenerateError"}, {"message", e.what()}, {"u", e.u()}, {"v", e.v()}};
        code = kExitDomain;
    } catch (const DomainError& e) {
        report["error"] = {{"type", "DomainError"}, {"message", e.what()}};
        code = kExitDomain;
    } catch (const LoxodromeError& e) {
        report["error"] = {{"type", "LoxodromeError"}, {"message", e.what()}, {"failure_u", e.u()}};
        code = kExitIntegration;
    }
    report["exit_code"] = code;
    CommandResult r{code, rounded(std::move(report))};
    try {
        write_file(opts.out_dir / config.output.json, json_text(r.report));
    } catch (const ConfigError&) {
        // The report is still returned to the caller.
    }
    return r;
}

}  // namespace canal
