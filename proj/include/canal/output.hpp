#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "canal/loxodrome.hpp"
#include "canal/surface.hpp"

namespace canal {

/// Significant digits of every number the tool writes.
inline constexpr int kOutputDigits = 12;

/// x rounded to 12 significant digits (non-finite values pass through).
double round12(double x);
/// "%.12g"
std::string format12(double x);

/// Numbers in a JSON tree rounded with round12, recursively.
nlohmann::json rounded(nlohmann::json j);

/// Columns u,v,x0,x1,x2,measured_angle.
std::string loxodrome_csv(const LoxodromeSolution& sol);

/// Columns u,v,x0,x1,x2 for the meridian v = const at the given parameters.
std::string meridian_csv(const CanalSurface& s, double v, const std::vector<double>& us);

struct Mesh {
    std::string text;
    int vertices = 0;
    int faces = 0;
};

/// ASCII OBJ with nu x nv vertices over u_range x v_range (ends included) and
/// (nu-1)(nv-1) quads. Vertices are written as (x1, x2, x0): the time-like
/// coordinate becomes the viewer's vertical axis.
Mesh surface_obj(const CanalSurface& s, int nu, int nv, const Interval& u_range,
                 const Interval& v_range);

/// Pretty-printed with two-space indent and a trailing newline.
std::string json_text(const nlohmann::json& j);

/// Writes the string verbatim (binary mode, LF line endings). ConfigError on I/O failure.
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace canal
