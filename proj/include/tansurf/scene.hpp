#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tansurf/classify.hpp"
#include "tansurf/connection.hpp"
#include "tansurf/curve.hpp"
#include "tansurf/surface.hpp"

namespace tansurf {

/// One inline Christoffel entry as written in the scene file (1-based
/// indices), kept alongside the built connection so a scene can be written
/// back out unchanged.
struct GammaEntry {
    int l = 0, mu = 0, nu = 0;
    std::string source;
};

/// A fully described problem instance: connection, directed curve, numeric
/// tolerances and the evaluation grid. Loaded from a small TOML file.
struct Scene {
    int dim = 3;

    std::string connection_preset;        // empty when Gamma entries are inline
    std::vector<GammaEntry> gamma_entries;
    bool symmetrize_connection = true;
    std::uint64_t connection_seed = 1;
    double connection_amplitude = 0.1;
    ChristoffelField connection{3};

    DirectedCurve curve;
    std::vector<std::string> gamma_sources;
    std::vector<std::string> frame_sources;
    std::string factor_source;

    SurfaceOptions numerics;

    double grid_t_min = -1.0, grid_t_max = 1.0;
    double grid_s_min = -1.0, grid_s_max = 1.0;
    int grid_n_t = 41, grid_n_s = 41;

    std::string projection = "coords";    // "coords" or "pca"
    std::vector<int> projection_coords{1, 2, 3};

    ClassifyOptions classify_options() const {
        return {numerics.rank_rel_tol, numerics.zero_atol, numerics.jet_order};
    }
};

Scene load_scene(const std::string& path);
Scene parse_scene(const std::string& text);

/// Serialization that parse_scene inverts field-for-field.
std::string write_scene(const Scene& scene);

} // namespace tansurf
