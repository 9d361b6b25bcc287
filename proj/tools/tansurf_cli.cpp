#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "tansurf/classify.hpp"
#include "tansurf/genericity.hpp"
#include "tansurf/geodesic.hpp"
#include "tansurf/mesh_io.hpp"
#include "tansurf/normal_forms.hpp"
#include "tansurf/presets.hpp"
#include "tansurf/scene.hpp"
#include "tansurf/surface.hpp"
#include "tansurf/toml_lite.hpp"

using nlohmann::json;
using namespace tansurf;

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<double> parse_csv_doubles(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        out.push_back(std::stod(item, &used));
    }
    return out;
}

std::vector<int> parse_csv_ints(const std::string& s) {
    std::vector<int> out;
    for (double v : parse_csv_doubles(s)) out.push_back(static_cast<int>(v));
    return out;
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw IoError("cannot write '" + out_path + "'");
    out << j.dump(2) << "\n";
}

json report_json(const ClassificationReport& rep) {
    json j;
    j["schema_version"] = 1;
    j["t0"] = rep.t0;
    j["dimension"] = rep.dim;
    j["class"] = to_string(rep.verdict);
    j["degeneracy_order"] = rep.degeneracy_order;
    j["nabla_type"] = to_string(rep.nabla_type);
    json chain = json::array();
    for (const auto& d : rep.chain) {
        json row = json::array();
        for (int i = 0; i < d.size(); ++i) row.push_back(d[i]);
        chain.push_back(row);
    }
    j["covariant_chain"] = chain;
    j["rank_decisions"] = rep.rank_decisions;
    j["rank_rel_tol"] = rep.rank_rel_tol;
    j["zero_atol"] = rep.zero_atol;
    if (!rep.reason.empty()) j["reason"] = rep.reason;
    return j;
}

TangentSurfaceGrid scene_grid(const Scene& scene) {
    return eval_surface(scene.connection, scene.curve, scene.grid_t_min, scene.grid_t_max,
                        scene.grid_s_min, scene.grid_s_max, scene.grid_n_t, scene.grid_n_s,
                        scene.numerics);
}

int run(int argc, char** argv) {
    CLI::App app{"nabla-tangent surfaces of directed curves: construction and "
                 "singularity classification"};
    app.require_subcommand(1);

    std::string scene_path, out_path, kind_name, spec_path, type_str, x_str, v_str;
    double t0 = 0.0, scan_t_min = 0.0, scan_t_max = 0.0, s_end = 1.0;
    int scan_samples = 201, nf_dim = 0, geo_samples = 101, codim_dim = 0;
    std::string csv_path, json_path;

    auto* c_classify = app.add_subcommand("classify", "classify one curve point");
    c_classify->add_option("--scene", scene_path, "scene TOML file")->required();
    c_classify->add_option("--t0", t0, "curve parameter")->required();
    c_classify->add_option("-o,--out", out_path, "report path (default stdout)");

    auto* c_scan = app.add_subcommand("scan", "locate and classify singular parameters");
    c_scan->add_option("--scene", scene_path)->required();
    c_scan->add_option("--t-min", scan_t_min)->required();
    c_scan->add_option("--t-max", scan_t_max)->required();
    c_scan->add_option("--samples", scan_samples);
    c_scan->add_option("-o,--out", out_path);

    auto* c_mesh = app.add_subcommand("mesh", "export the tangent surface grid as OBJ");
    c_mesh->add_option("--scene", scene_path)->required();
    c_mesh->add_option("-o,--out", out_path, "OBJ path")->required();

    auto* c_geo = app.add_subcommand("geodesic", "sample one geodesic as CSV");
    c_geo->add_option("--scene", scene_path)->required();
    c_geo->add_option("--x", x_str, "start point, comma separated")->required();
    c_geo->add_option("--v", v_str, "start velocity, comma separated")->required();
    c_geo->add_option("--s-end", s_end)->required();
    c_geo->add_option("--samples", geo_samples);
    c_geo->add_option("-o,--out", out_path, "CSV path (default stdout)");

    auto* c_nf = app.add_subcommand("normal-form", "export a model germ mesh");
    c_nf->add_option("--kind", kind_name, "cuspidal-edge | folded-umbrella | swallowtail | "
                                          "open-swallowtail")
        ->required();
    c_nf->add_option("--dim", nf_dim, "ambient dimension (default minimal)");
    c_nf->add_option("-o,--out", out_path)->required();

    auto* c_mc = app.add_subcommand("montecarlo", "nabla-type histogram over random curves");
    c_mc->add_option("--spec", spec_path, "perturbation spec TOML")->required();
    c_mc->add_option("--csv", csv_path, "per-sample CSV path");
    c_mc->add_option("--json", json_path, "summary JSON path (default stdout)");

    auto* c_codim = app.add_subcommand("codim", "codimension of a nabla type");
    c_codim->add_option("--type", type_str, "comma separated, e.g. 2,3,4")->required();
    c_codim->add_option("--dim", codim_dim, "ambient dimension (default type length)");

    CLI11_PARSE(app, argc, argv);

    if (c_classify->parsed()) {
        const Scene scene = load_scene(scene_path);
        const auto rep =
            classify_point(scene.connection, scene.curve, t0, scene.classify_options());
        emit(report_json(rep), out_path);
        return 0;
    }

    if (c_scan->parsed()) {
        const Scene scene = load_scene(scene_path);
        const auto result = scan_curve(scene.connection, scene.curve, scan_t_min, scan_t_max,
                                       scan_samples, scene.classify_options());
        json j;
        j["schema_version"] = 1;
        j["ambient_class"] = to_string(result.ambient);
        json events = json::array();
        for (const auto& e : result.events)
            events.push_back({{"t", e.t}, {"class", to_string(e.verdict)},
                              {"indicator", e.indicator}});
        j["events"] = events;
        emit(j, out_path);
        return 0;
    }

    if (c_mesh->parsed()) {
        const Scene scene = load_scene(scene_path);
        const TangentSurfaceGrid grid = scene_grid(scene);
        export_mesh(grid, scene.projection, scene.projection_coords, out_path);
        return 0;
    }

    if (c_geo->parsed()) {
        const Scene scene = load_scene(scene_path);
        const std::vector<double> x = parse_csv_doubles(x_str);
        const std::vector<double> v = parse_csv_doubles(v_str);
        if (static_cast<int>(x.size()) != scene.dim || static_cast<int>(v.size()) != scene.dim)
            throw ValidationError("--x and --v must have " + std::to_string(scene.dim) +
                                  " components");
        if (geo_samples < 2) throw ValidationError("--samples must be >= 2");
        std::vector<double> s_values;
        for (int i = 0; i < geo_samples; ++i)
            s_values.push_back(s_end * i / (geo_samples - 1));
        const auto states =
            integrate_geodesic_path(scene.connection, x, v, s_values, scene.numerics.integrator);
        std::ostringstream csv;
        csv << "s";
        for (int k = 1; k <= scene.dim; ++k) csv << ",x" << k;
        for (int k = 1; k <= scene.dim; ++k) csv << ",v" << k;
        csv << "\n";
        for (const auto& st : states) {
            csv << fmt(st.s);
            for (double c : st.x) csv << "," << fmt(c);
            for (double c : st.v) csv << "," << fmt(c);
            csv << "\n";
        }
        if (out_path.empty()) {
            std::cout << csv.str();
        } else {
            std::ofstream out(out_path);
            if (!out) throw IoError("cannot write '" + out_path + "'");
            out << csv.str();
        }
        return 0;
    }

    if (c_nf->parsed()) {
        const GermKind kind = germ_kind_from_string(kind_name);
        const int m = nf_dim > 0 ? nf_dim : (kind == GermKind::OpenSwallowtail ? 4 : 3);
        const DirectedCurve curve = model_curve(kind, m);
        const ChristoffelField conn = preset_flat(m);
        const TangentSurfaceGrid grid =
            eval_surface(conn, curve, -1.0, 1.0, -1.0, 1.0, 41, 41);
        export_mesh(grid, out_path);
        return 0;
    }

    if (c_mc->parsed()) {
        const toml::Table t = toml::parse_file(spec_path);
        PerturbationSpec spec;
        const auto num = [&](const char* key, double fb) {
            const auto it = t.find(key);
            return it == t.end() ? fb : it->second.num;
        };
        const auto str = [&](const char* key, const std::string& fb) {
            const auto it = t.find(key);
            return it == t.end() ? fb : it->second.str;
        };
        spec.seed = static_cast<std::uint64_t>(num("seed", 1));
        spec.dim = static_cast<int>(num("dim", 3));
        spec.degree = static_cast<int>(num("degree", spec.dim + 1));
        spec.amplitude = num("amplitude", 1.0);
        spec.curves = static_cast<int>(num("curves", 100));
        spec.samples_per_curve = static_cast<int>(num("samples", 8));
        spec.t_min = num("t_min", -1.0);
        spec.t_max = num("t_max", 1.0);
        spec.connection_preset = str("connection.preset", "flat");
        spec.connection_seed = static_cast<std::uint64_t>(num("connection.seed", 1));
        spec.connection_amplitude = num("connection.amplitude", 0.1);

        const TypeHistogram hist = montecarlo_types(spec);

        if (!csv_path.empty()) {
            std::ofstream out(csv_path);
            if (!out) throw IoError("cannot write '" + csv_path + "'");
            out << "curve,t,type,class,rank_margin,at_root\n";
            for (const auto& rec : hist.samples) {
                out << rec.curve_index << "," << fmt(rec.t) << "," << to_string(rec.type) << ","
                    << to_string(rec.verdict) << "," << fmt(rec.rank_margin) << ","
                    << (rec.at_root ? 1 : 0) << "\n";
            }
        }
        json j;
        j["schema_version"] = 1;
        j["rng_algorithm"] = hist.rng_algorithm;
        j["seed"] = spec.seed;
        json counts = json::object();
        for (const auto& [type, n] : hist.counts) {
            std::string key;
            for (std::size_t i = 0; i < type.size(); ++i)
                key += (i ? "," : "") + std::to_string(type[i]);
            counts["(" + key + ")"] = n;
        }
        j["type_counts"] = counts;
        j["undetermined"] = hist.undetermined;
        j["nongeneric_class"] = hist.nongeneric_class;
        j["near_degenerate"] = hist.near_degenerate;
        j["worst_rank_margin"] = hist.worst_margin;
        emit(j, json_path);
        return 0;
    }

    if (c_codim->parsed()) {
        const std::vector<int> type = parse_csv_ints(type_str);
        const int m = codim_dim > 0 ? codim_dim : static_cast<int>(type.size());
        std::cout << codim(type, m) << "\n";
        return 0;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << json{{"error", "parse"}, {"message", e.what()}}.dump() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << json{{"error", "validation"}, {"message", e.what()}}.dump() << "\n";
        return 2;
    } catch (const MalformedType& e) {
        std::cerr << json{{"error", "validation"}, {"message", e.what()}}.dump() << "\n";
        return 2;
    } catch (const IoError& e) {
        std::cerr << json{{"error", "io"}, {"message", e.what()}}.dump() << "\n";
        return 4;
    } catch (const Error& e) {
        std::cerr << json{{"error", "numeric"}, {"message", e.what()}}.dump() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
        return 3;
    }
}
