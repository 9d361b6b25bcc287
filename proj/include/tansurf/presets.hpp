#pragma once

#include <cstdint>
#include <string>

#include "tansurf/connection.hpp"

namespace tansurf {

/// Flat connection: all symbols zero.
ChristoffelField preset_flat(int dim);

/// Levi-Civita connection of the hyperbolic upper half-space model
/// (dx^2 + dy^2 + dz^2)/z^2 on z > 0 (m = 3). The vertical line
/// s -> (x0, y0, z0 e^s) is an affinely parametrized geodesic.
ChristoffelField preset_hyperbolic_halfspace();

/// Round 3-sphere in stereographic coordinates, metric 4 delta /(1+|x|^2)^2.
ChristoffelField preset_sphere_stereographic();

/// Seeded random polynomial symbols of the given degree and amplitude; the
/// result is generally torsionful.
ChristoffelField preset_random_poly(int dim, std::uint64_t seed, double amplitude,
                                    int degree = 2);

/// Preset lookup by name ("flat", "hyperbolic-halfspace",
/// "sphere-stereographic", "random-poly").
ChristoffelField preset_by_name(const std::string& name, int dim, std::uint64_t seed = 1,
                                double amplitude = 0.1);

} // namespace tansurf
