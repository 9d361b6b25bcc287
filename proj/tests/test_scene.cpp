#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "tansurf/mesh_io.hpp"
#include "tansurf/normal_forms.hpp"
#include "tansurf/presets.hpp"
#include "tansurf/scene.hpp"
#include "tansurf/surface.hpp"
#include "tansurf/toml_lite.hpp"

using namespace tansurf;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int count_lines_starting(const std::string& text, const std::string& prefix) {
    int n = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (line.rfind(prefix, 0) == 0) ++n;
    return n;
}

} // namespace

TEST_CASE("toml subset: values, sections, dotted keys, comments") {
    const auto t = toml::parse_string(
        "# header comment\n"
        "dimension = 3\n"
        "name = \"demo # not a comment\"\n"
        "[connection]\n"
        "Gamma.1.2.3 = \"x1*x2\"  # trailing\n"
        "flag = true\n"
        "[grid]\n"
        "counts = [3, 5]\n"
        "labels = [\"a\", \"b\"]\n");
    CHECK(t.at("dimension").num == 3.0);
    CHECK(t.at("name").str == "demo # not a comment");
    CHECK(t.at("connection.Gamma.1.2.3").str == "x1*x2");
    CHECK(t.at("connection.flag").boolean);
    CHECK(t.at("grid.counts").nums == std::vector<double>{3.0, 5.0});
    CHECK(t.at("grid.labels").strs == std::vector<std::string>{"a", "b"});
}

TEST_CASE("toml subset: malformed input names the line") {
    const auto expect_line = [](const std::string& text, const std::string& fragment) {
        try {
            toml::parse_string(text);
            FAIL("expected ParseError for: ", text);
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find(fragment) != std::string::npos);
        }
    };
    expect_line("a = 1\nb 2\n", "line 2");
    expect_line("a = \"open\n", "line 1");
    expect_line("a = 1\na = 2\n", "duplicate");
    expect_line("[t\n", "line 1");
    expect_line("x = [1, \"two\"]\n", "line 1");
}

TEST_CASE("minimal scene loads with defaults applied") {
    const Scene scene = parse_scene(
        "dimension = 3\n"
        "[curve]\n"
        "gamma = [\"t\", \"t^2\", \"t^3\"]\n");
    CHECK(scene.dim == 3);
    CHECK(scene.connection.all_zero());
    CHECK(scene.symmetrize_connection);
    CHECK(scene.numerics.jet_order == 8);
    CHECK(scene.numerics.rank_rel_tol == 1e-9);
    CHECK(scene.grid_n_t == 41);
    CHECK(scene.projection == "coords");
    CHECK(!scene.curve.has_frame());
}

TEST_CASE("inline Christoffel entries are validated against the dimension") {
    const std::string body =
        "[connection]\n"
        "Gamma.1.2.3 = \"x1*x2\"\n"
        "[curve]\n";
    CHECK_NOTHROW(parse_scene("dimension = 3\n" + body + "gamma = [\"t\", \"t^2\", \"t^3\"]\n"));
    CHECK_THROWS_AS(parse_scene("dimension = 2\n" + body + "gamma = [\"t\", \"t^2\"]\n"),
                    ValidationError);
}

TEST_CASE("scene validation failures name the offending field") {
    const auto expect_field = [](const std::string& text, const std::string& field) {
        try {
            parse_scene(text);
            FAIL("expected ValidationError for field ", field);
        } catch (const ValidationError& e) {
            CHECK(std::string(e.what()).find(field) != std::string::npos);
        }
    };
    expect_field("[curve]\ngamma = [\"t\"]\n", "dimension");
    expect_field("dimension = 3\n", "curve.gamma");
    expect_field("dimension = 3\n[curve]\ngamma = [\"t\", \"t^2\"]\n", "curve.gamma");
    expect_field(
        "dimension = 3\n[curve]\ngamma = [\"t\", \"t^2\", \"t^3\"]\nc = \"2*t\"\n", "curve.c");
    expect_field("dimension = 3\n[curve]\ngamma = [\"t\", \"t^2\", \"t^3\"]\n"
                 "[numerics]\nintegrator = \"euler\"\n",
                 "numerics.integrator");
    expect_field("dimension = 3\n[connection]\npreset = \"mystery\"\n[curve]\n"
                 "gamma = [\"t\", \"t^2\", \"t^3\"]\n",
                 "preset");
}

TEST_CASE("missing scene file raises a parse error naming the path") {
    try {
        load_scene("/nonexistent/scene.toml");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("/nonexistent/scene.toml") != std::string::npos);
    }
}

TEST_CASE("scene write/parse round trip is field-identical") {
    Scene scene = parse_scene(
        "dimension = 3\n"
        "[connection]\n"
        "Gamma.1.2.3 = \"x1*x2\"\n"
        "Gamma.3.1.1 = \"sin(x2)\"\n"
        "symmetrize = false\n"
        "[curve]\n"
        "gamma = [\"t^2\", \"t^3\", \"t^4\"]\n"
        "u = [\"1\", \"1.5*t\", \"2*t^2\"]\n"
        "c = \"2*t\"\n"
        "t_min = -2.0\n"
        "t_max = 1.5\n"
        "[numerics]\n"
        "jet_order = 10\n"
        "integrator = \"rk4\"\n"
        "[grid]\n"
        "n_t = 17\n"
        "n_s = 9\n"
        "[output]\n"
        "projection = \"pca\"\n");
    const Scene again = parse_scene(write_scene(scene));
    CHECK(again.dim == scene.dim);
    CHECK(again.symmetrize_connection == scene.symmetrize_connection);
    CHECK(again.gamma_entries.size() == scene.gamma_entries.size());
    CHECK(again.gamma_entries[0].source == scene.gamma_entries[0].source);
    CHECK(again.gamma_sources == scene.gamma_sources);
    CHECK(again.frame_sources == scene.frame_sources);
    CHECK(again.factor_source == scene.factor_source);
    CHECK(again.curve.t_min == scene.curve.t_min);
    CHECK(again.curve.t_max == scene.curve.t_max);
    CHECK(again.numerics.jet_order == 10);
    CHECK(again.numerics.integrator.method == IntegratorOptions::Method::FixedRK4);
    CHECK(again.grid_n_t == 17);
    CHECK(again.grid_n_s == 9);
    CHECK(again.projection == "pca");
    // and the connections evaluate identically
    const std::vector<double> x{0.3, 1.1, -0.4};
    CHECK(scene.connection.values_at(x) == again.connection.values_at(x));
}

TEST_CASE("2x2 grid exports four vertices and two faces") {
    const DirectedCurve curve = model_curve(GermKind::CuspidalEdge, 3);
    const TangentSurfaceGrid grid =
        eval_surface(preset_flat(3), curve, -1, 1, -1, 1, 2, 2);
    const std::string path = "/tmp/tansurf_test_2x2.obj";
    export_mesh(grid, path);
    const std::string obj = slurp(path);
    CHECK(count_lines_starting(obj, "v ") == 4);
    CHECK(count_lines_starting(obj, "f ") == 2);
    const std::string csv = slurp("/tmp/tansurf_test_2x2.csv");
    CHECK(csv.substr(0, csv.find('\n')) == "t,s,x1,x2,x3");
    CHECK(count_lines_starting(csv, "") == 5); // header + one row per vertex
    std::remove(path.c_str());
    std::remove("/tmp/tansurf_test_2x2.csv");
}

TEST_CASE("default projection of a 4d grid keeps the first three germ coordinates") {
    const DirectedCurve curve = model_curve(GermKind::OpenSwallowtail, 4);
    const TangentSurfaceGrid grid =
        eval_surface(preset_flat(4), curve, -1, 1, -1, 1, 5, 5);
    const std::string path = "/tmp/tansurf_test_osw.obj";
    export_mesh(grid, path);
    std::ifstream in(path);
    std::string tok;
    int vertex = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("v ", 0) != 0) continue;
        std::istringstream ls(line);
        double x, y, z;
        char v;
        ls >> v >> x >> y >> z;
        const int i = vertex / 5, j = vertex % 5;
        const Eigen::VectorXd germ = germ_eval(GermKind::OpenSwallowtail, 4,
                                               grid.t_values[static_cast<std::size_t>(i)],
                                               grid.s_values[static_cast<std::size_t>(j)]);
        CHECK(std::abs(x - germ[0]) < 1e-12);
        CHECK(std::abs(y - germ[1]) < 1e-12);
        CHECK(std::abs(z - germ[2]) < 1e-12);
        ++vertex;
    }
    CHECK(vertex == 25);
    std::remove(path.c_str());
    std::remove("/tmp/tansurf_test_osw.csv");
}

TEST_CASE("mesh export is byte-identical across runs") {
    const DirectedCurve curve = model_curve(GermKind::Swallowtail, 3);
    const TangentSurfaceGrid grid =
        eval_surface(preset_flat(3), curve, -1, 1, -1, 1, 7, 7);
    export_mesh(grid, "/tmp/tansurf_det_a.obj");
    export_mesh(grid, "/tmp/tansurf_det_b.obj");
    CHECK(slurp("/tmp/tansurf_det_a.obj") == slurp("/tmp/tansurf_det_b.obj"));
    CHECK(slurp("/tmp/tansurf_det_a.csv") == slurp("/tmp/tansurf_det_b.csv"));
    for (const char* p : {"/tmp/tansurf_det_a.obj", "/tmp/tansurf_det_b.obj",
                          "/tmp/tansurf_det_a.csv", "/tmp/tansurf_det_b.csv"})
        std::remove(p);
}

TEST_CASE("pca projection spans the dominant plane of a flat 4d cloud") {
    const DirectedCurve curve = model_curve(GermKind::OpenSwallowtail, 4);
    const TangentSurfaceGrid grid =
        eval_surface(preset_flat(4), curve, -1, 1, -1, 1, 9, 9);
    const std::string path = "/tmp/tansurf_test_pca.obj";
    export_mesh(grid, "pca", {1, 2, 3}, path);
    const std::string obj = slurp(path);
    CHECK(count_lines_starting(obj, "v ") == 81);
    std::remove(path.c_str());
    std::remove("/tmp/tansurf_test_pca.csv");
}
