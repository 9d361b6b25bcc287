#pragma once

#include <string>
#include <vector>

#include "tansurf/surface.hpp"

namespace tansurf {

/// Writes the grid as a Wavefront OBJ (vertices in 3-space, quads split into
/// triangle pairs, row-major 1-based indexing) plus a sidecar CSV next to it
/// carrying t, s and all m coordinates of every exported vertex.
///
/// projection: "coords" picks the listed 1-based coordinates (default 1-3),
/// "pca" projects onto the best-fit 3-plane of the point cloud. Columns
/// marked bad in the grid are dropped, together with their faces.
void export_mesh(const TangentSurfaceGrid& grid, const std::string& projection,
                 const std::vector<int>& coords, const std::string& path);

/// Default projection onto coordinates 1-3.
void export_mesh(const TangentSurfaceGrid& grid, const std::string& path);

} // namespace tansurf
