#include "canal/output.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "canal/errors.hpp"

namespace canal {

std::string format12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", kOutputDigits, x);
    return buf;
}

double round12(double x) {
    if (!std::isfinite(x)) return x;
    return std::strtod(format12(x).c_str(), nullptr);
}

nlohmann::json rounded(nlohmann::json j) {
    if (j.is_number_float()) return round12(j.get<double>());
    if (j.is_structured()) {
        for (auto& child : j) child = rounded(std::move(child));
    }
    return j;
}

std::string loxodrome_csv(const LoxodromeSolution& sol) {
    std::ostringstream os;
    os << "u,v,x0,x1,x2,measured_angle\n";
    for (const auto& s : sol.samples) {
        os << format12(s.u) << ',' << format12(s.v) << ',' << format12(s.point.x0) << ','
           << format12(s.point.x1) << ',' << format12(s.point.x2) << ','
           << format12(s.measured_angle) << '\n';
    }
    return os.str();
}

std::string meridian_csv(const CanalSurface& s, double v, const std::vector<double>& us) {
    std::ostringstream os;
    os << "u,v,x0,x1,x2\n";
    for (double u : us) {
        const MVec3 p = position(s, u, v);
        os << format12(u) << ',' << format12(v) << ',' << format12(p.x0) << ',' << format12(p.x1)
           << ',' << format12(p.x2) << '\n';
    }
    return os.str();
}

Mesh surface_obj(const CanalSurface& s, int nu, int nv, const Interval& u_range,
                 const Interval& v_range) {
    if (nu < 2 || nv < 2) throw DomainError("surface_obj: grid must be at least 2x2");
    std::ostringstream os;
    os << "# canal surface " << to_string(s.family()) << ", " << nu << " x " << nv << " grid\n"
       << "# vertex order (x1, x2, x0): the time-like coordinate x0 is written last\n";
    Mesh mesh;
    for (int i = 0; i < nu; ++i) {
        const double u = u_range.lo + u_range.width() * i / (nu - 1);
        for (int j = 0; j < nv; ++j) {
            const double v = v_range.lo + v_range.width() * j / (nv - 1);
            const MVec3 p = position(s, u, v);
            os << "v " << format12(p.x1) << ' ' << format12(p.x2) << ' ' << format12(p.x0) << '\n';
            ++mesh.vertices;
        }
    }
    for (int i = 0; i + 1 < nu; ++i) {
        for (int j = 0; j + 1 < nv; ++j) {
            const int a = i * nv + j + 1;  // OBJ indices are 1-based
            os << "f " << a << ' ' << a + nv << ' ' << a + nv + 1 << ' ' << a + 1 << '\n';
            ++mesh.faces;
        }
    }
    mesh.text = os.str();
    return mesh;
}

std::string json_text(const nlohmann::json& j) { return j.dump(2) + "\n"; }

void write_file(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open " + path.string() + " for writing");
    out << content;
    if (!out) throw ConfigError("failed writing " + path.string());
}

}  // namespace canal
