#include "tansurf/scene.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "tansurf/presets.hpp"
#include "tansurf/toml_lite.hpp"

namespace tansurf {

namespace {

using toml::Table;
using toml::Value;

[[noreturn]] void bad(const std::string& field, const std::string& what) {
    throw ValidationError("field '" + field + "': " + what);
}

const Value* find(const Table& t, const std::string& key) {
    const auto it = t.find(key);
    return it == t.end() ? nullptr : &it->second;
}

double get_number(const Table& t, const std::string& key, double fallback) {
    const Value* v = find(t, key);
    if (!v) return fallback;
    if (v->kind != Value::Kind::Number) bad(key, "expected a number");
    return v->num;
}

int get_int(const Table& t, const std::string& key, int fallback) {
    const Value* v = find(t, key);
    if (!v) return fallback;
    if (v->kind != Value::Kind::Number || v->num != std::floor(v->num))
        bad(key, "expected an integer");
    return static_cast<int>(v->num);
}

bool get_bool(const Table& t, const std::string& key, bool fallback) {
    const Value* v = find(t, key);
    if (!v) return fallback;
    if (v->kind != Value::Kind::Boolean) bad(key, "expected true or false");
    return v->boolean;
}

std::string get_string(const Table& t, const std::string& key, const std::string& fallback) {
    const Value* v = find(t, key);
    if (!v) return fallback;
    if (v->kind != Value::Kind::String) bad(key, "expected a string");
    return v->str;
}

std::vector<std::string> get_strings(const Table& t, const std::string& key) {
    const Value* v = find(t, key);
    if (!v) return {};
    if (v->kind == Value::Kind::String) return {v->str};
    if (v->kind != Value::Kind::StringArray) bad(key, "expected an array of strings");
    return v->strs;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

Scene parse_scene(const std::string& text) {
    const Table t = toml::parse_string(text);
    Scene scene;

    scene.dim = get_int(t, "dimension", 0);
    if (scene.dim < 2) bad("dimension", "required, must be an integer >= 2");
    const int m = scene.dim;

    // connection: preset or inline Gamma entries
    scene.connection_preset = get_string(t, "connection.preset", "");
    scene.symmetrize_connection = get_bool(t, "connection.symmetrize", true);
    scene.connection_seed =
        static_cast<std::uint64_t>(get_number(t, "connection.seed", 1.0));
    scene.connection_amplitude = get_number(t, "connection.amplitude", 0.1);

    ChristoffelField conn(m);
    for (const auto& [key, value] : t) {
        if (key.rfind("connection.Gamma.", 0) != 0) continue;
        if (!scene.connection_preset.empty())
            bad(key, "inline symbols conflict with connection.preset");
        int l = 0, mu = 0, nu = 0;
        if (std::sscanf(key.c_str(), "connection.Gamma.%d.%d.%d", &l, &mu, &nu) != 3)
            bad(key, "expected connection.Gamma.l.mu.nu");
        if (l < 1 || l > m || mu < 1 || mu > m || nu < 1 || nu > m)
            bad(key, "index out of range for dimension " + std::to_string(m));
        if (value.kind != Value::Kind::String) bad(key, "expected an expression string");
        try {
            conn.set(l - 1, mu - 1, nu - 1, parse_expr(value.str, conn.variables()));
        } catch (const Error& e) {
            bad(key, e.what());
        }
        scene.gamma_entries.push_back({l, mu, nu, value.str});
    }
    if (!scene.connection_preset.empty()) {
        conn = preset_by_name(scene.connection_preset, m, scene.connection_seed,
                              scene.connection_amplitude);
    }
    if (scene.symmetrize_connection && !conn.torsion_free()) conn = symmetrize(conn);
    scene.connection = conn;

    // curve
    scene.gamma_sources = get_strings(t, "curve.gamma");
    if (scene.gamma_sources.empty()) bad("curve.gamma", "required");
    if (static_cast<int>(scene.gamma_sources.size()) != m)
        bad("curve.gamma", "expected " + std::to_string(m) + " components, got " +
                               std::to_string(scene.gamma_sources.size()));
    scene.frame_sources = get_strings(t, "curve.u");
    if (!scene.frame_sources.empty() && static_cast<int>(scene.frame_sources.size()) != m)
        bad("curve.u", "expected " + std::to_string(m) + " components");
    scene.factor_source = get_string(t, "curve.c", "");
    if (!scene.factor_source.empty() && scene.frame_sources.empty())
        bad("curve.c", "a factor needs an accompanying frame curve.u");

    const std::vector<std::string> tvar{"t"};
    scene.curve.dim = m;
    try {
        for (const auto& src : scene.gamma_sources)
            scene.curve.gamma.push_back(parse_expr(src, tvar));
        for (const auto& src : scene.frame_sources)
            scene.curve.frame.push_back(parse_expr(src, tvar));
        if (!scene.factor_source.empty())
            scene.curve.factor = parse_expr(scene.factor_source, tvar);
    } catch (const Error& e) {
        bad("curve", e.what());
    }
    scene.curve.t_min = get_number(t, "curve.t_min", -1.0);
    scene.curve.t_max = get_number(t, "curve.t_max", 1.0);
    if (!(scene.curve.t_min < scene.curve.t_max)) bad("curve.t_min", "needs t_min < t_max");

    // numerics
    scene.numerics.jet_order = get_int(t, "numerics.jet_order", 8);
    if (scene.numerics.jet_order < 2) bad("numerics.jet_order", "must be >= 2");
    scene.numerics.rank_rel_tol = get_number(t, "numerics.rank_rel_tol", 1e-9);
    scene.numerics.zero_atol = get_number(t, "numerics.zero_atol", 1e-12);
    scene.numerics.s_switch = get_number(t, "numerics.s_switch", 1e-4);
    const std::string method = get_string(t, "numerics.integrator", "adaptive45");
    if (method == "adaptive45")
        scene.numerics.integrator.method = IntegratorOptions::Method::Adaptive45;
    else if (method == "rk4")
        scene.numerics.integrator.method = IntegratorOptions::Method::FixedRK4;
    else
        bad("numerics.integrator", "expected 'adaptive45' or 'rk4'");
    scene.numerics.integrator.abs_tol = get_number(t, "numerics.abs_tol", 1e-10);
    scene.numerics.integrator.rel_tol = get_number(t, "numerics.rel_tol", 1e-10);
    scene.numerics.integrator.max_steps = get_int(t, "numerics.max_steps", 100000);
    scene.numerics.integrator.initial_step = get_number(t, "numerics.initial_step", 0.0);

    // grid
    scene.grid_t_min = get_number(t, "grid.t_min", scene.curve.t_min);
    scene.grid_t_max = get_number(t, "grid.t_max", scene.curve.t_max);
    scene.grid_s_min = get_number(t, "grid.s_min", -1.0);
    scene.grid_s_max = get_number(t, "grid.s_max", 1.0);
    scene.grid_n_t = get_int(t, "grid.n_t", 41);
    scene.grid_n_s = get_int(t, "grid.n_s", 41);
    if (scene.grid_n_t < 2 || scene.grid_n_s < 2) bad("grid.n_t", "grid needs at least 2x2");

    // output
    scene.projection = get_string(t, "output.projection", "coords");
    if (scene.projection != "coords" && scene.projection != "pca")
        bad("output.projection", "expected 'coords' or 'pca'");
    if (const Value* v = find(t, "output.coords")) {
        if (v->kind != Value::Kind::NumberArray || v->nums.size() != 3)
            bad("output.coords", "expected three 1-based coordinate indices");
        scene.projection_coords.clear();
        for (double d : v->nums) {
            const int c = static_cast<int>(d);
            if (c < 1 || c > m) bad("output.coords", "coordinate index out of range");
            scene.projection_coords.push_back(c);
        }
    }
    return scene;
}

Scene load_scene(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open scene file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scene(buf.str());
}

std::string write_scene(const Scene& scene) {
    std::ostringstream out;
    out << "dimension = " << scene.dim << "\n\n[connection]\n";
    if (!scene.connection_preset.empty()) {
        out << "preset = \"" << scene.connection_preset << "\"\n";
        out << "seed = " << scene.connection_seed << "\n";
        out << "amplitude = " << fmt(scene.connection_amplitude) << "\n";
    }
    out << "symmetrize = " << (scene.symmetrize_connection ? "true" : "false") << "\n";
    for (const auto& g : scene.gamma_entries)
        out << "Gamma." << g.l << "." << g.mu << "." << g.nu << " = \"" << g.source << "\"\n";

    out << "\n[curve]\ngamma = [";
    for (std::size_t i = 0; i < scene.gamma_sources.size(); ++i)
        out << (i ? ", " : "") << "\"" << scene.gamma_sources[i] << "\"";
    out << "]\n";
    if (!scene.frame_sources.empty()) {
        out << "u = [";
        for (std::size_t i = 0; i < scene.frame_sources.size(); ++i)
            out << (i ? ", " : "") << "\"" << scene.frame_sources[i] << "\"";
        out << "]\n";
    }
    if (!scene.factor_source.empty()) out << "c = \"" << scene.factor_source << "\"\n";
    out << "t_min = " << fmt(scene.curve.t_min) << "\n";
    out << "t_max = " << fmt(scene.curve.t_max) << "\n";

    out << "\n[numerics]\n";
    out << "jet_order = " << scene.numerics.jet_order << "\n";
    out << "rank_rel_tol = " << fmt(scene.numerics.rank_rel_tol) << "\n";
    out << "zero_atol = " << fmt(scene.numerics.zero_atol) << "\n";
    out << "s_switch = " << fmt(scene.numerics.s_switch) << "\n";
    out << "integrator = \""
        << (scene.numerics.integrator.method == IntegratorOptions::Method::Adaptive45
                ? "adaptive45"
                : "rk4")
        << "\"\n";
    out << "abs_tol = " << fmt(scene.numerics.integrator.abs_tol) << "\n";
    out << "rel_tol = " << fmt(scene.numerics.integrator.rel_tol) << "\n";
    out << "max_steps = " << scene.numerics.integrator.max_steps << "\n";
    out << "initial_step = " << fmt(scene.numerics.integrator.initial_step) << "\n";

    out << "\n[grid]\n";
    out << "t_min = " << fmt(scene.grid_t_min) << "\n";
    out << "t_max = " << fmt(scene.grid_t_max) << "\n";
    out << "s_min = " << fmt(scene.grid_s_min) << "\n";
    out << "s_max = " << fmt(scene.grid_s_max) << "\n";
    out << "n_t = " << scene.grid_n_t << "\n";
    out << "n_s = " << scene.grid_n_s << "\n";

    out << "\n[output]\n";
    out << "projection = \"" << scene.projection << "\"\n";
    out << "coords = [" << scene.projection_coords[0] << ", " << scene.projection_coords[1]
        << ", " << scene.projection_coords[2] << "]\n";
    return out.str();
}

} // namespace tansurf
