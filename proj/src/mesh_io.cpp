#include "tansurf/mesh_io.hpp"

#include <Eigen/Eigenvalues>
#include <cstdio>
#include <fstream>

#include "tansurf/errors.hpp"

namespace tansurf {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_path_for(const std::string& path) {
    const std::size_t dot = path.rfind('.');
    if (dot != std::string::npos && path.find('/', dot) == std::string::npos)
        return path.substr(0, dot) + ".csv";
    return path + ".csv";
}

// Rows of the 3 x m projection matrix and the offset subtracted first.
struct Projection {
    Eigen::MatrixXd axes; // 3 x m
    Eigen::VectorXd mean; // m
};

Projection make_projection(const TangentSurfaceGrid& grid, const std::string& kind,
                           const std::vector<int>& coords) {
    const int m = grid.dim;
    Projection p;
    p.mean = Eigen::VectorXd::Zero(m);
    p.axes = Eigen::MatrixXd::Zero(3, m);
    if (kind == "coords") {
        if (coords.size() != 3) throw ValidationError("projection needs three coordinates");
        for (int r = 0; r < 3; ++r) {
            const int c = coords[static_cast<std::size_t>(r)];
            if (c < 1 || c > m) {
                if (m < 3 && c == 3) continue; // pad missing axis with zero
                throw ValidationError("projection coordinate out of range");
            }
            p.axes(r, c - 1) = 1.0;
        }
        return p;
    }
    if (kind != "pca") throw ValidationError("unknown projection '" + kind + "'");

    std::size_t count = 0;
    for (int i = 0; i < grid.n_t(); ++i) {
        if (!grid.column_ok[static_cast<std::size_t>(i)]) continue;
        for (int j = 0; j < grid.n_s(); ++j) {
            p.mean += grid.point(i, j);
            ++count;
        }
    }
    if (count == 0) throw ValidationError("no valid grid columns to project");
    p.mean /= static_cast<double>(count);

    Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < grid.n_t(); ++i) {
        if (!grid.column_ok[static_cast<std::size_t>(i)]) continue;
        for (int j = 0; j < grid.n_s(); ++j) {
            const Eigen::VectorXd d = grid.point(i, j) - p.mean;
            cov += d * d.transpose();
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cov);
    // eigenvalues ascend; take the top three directions
    for (int r = 0; r < 3 && r < m; ++r) p.axes.row(r) = es.eigenvectors().col(m - 1 - r).transpose();
    return p;
}

} // namespace

void export_mesh(const TangentSurfaceGrid& grid, const std::string& projection,
                 const std::vector<int>& coords, const std::string& path) {
    if (grid.points.empty()) throw ValidationError("empty grid");
    const Projection proj = make_projection(grid, projection, coords);
    const int n_t = grid.n_t(), n_s = grid.n_s();

    std::ofstream obj(path);
    if (!obj) throw IoError("cannot write '" + path + "'");
    const std::string side = csv_path_for(path);
    std::ofstream csv(side);
    if (!csv) throw IoError("cannot write '" + side + "'");

    csv << "t,s";
    for (int k = 1; k <= grid.dim; ++k) csv << ",x" << k;
    csv << "\n";

    // vertices, skipping dropped columns but keeping row-major order
    std::vector<int> vertex_id(grid.points.size(), 0);
    int next = 1;
    for (int i = 0; i < n_t; ++i) {
        if (!grid.column_ok[static_cast<std::size_t>(i)]) continue;
        for (int j = 0; j < n_s; ++j) {
            const Eigen::VectorXd& x = grid.point(i, j);
            const Eigen::Vector3d y = proj.axes * (x - proj.mean);
            obj << "v " << fmt(y[0]) << " " << fmt(y[1]) << " " << fmt(y[2]) << "\n";
            csv << fmt(grid.t_values[static_cast<std::size_t>(i)]) << ","
                << fmt(grid.s_values[static_cast<std::size_t>(j)]);
            for (int k = 0; k < grid.dim; ++k) csv << "," << fmt(x[k]);
            csv << "\n";
            vertex_id[grid.index(i, j)] = next++;
        }
    }

    for (int i = 0; i + 1 < n_t; ++i) {
        if (!grid.column_ok[static_cast<std::size_t>(i)] ||
            !grid.column_ok[static_cast<std::size_t>(i + 1)])
            continue;
        for (int j = 0; j + 1 < n_s; ++j) {
            const int v00 = vertex_id[grid.index(i, j)];
            const int v01 = vertex_id[grid.index(i, j + 1)];
            const int v10 = vertex_id[grid.index(i + 1, j)];
            const int v11 = vertex_id[grid.index(i + 1, j + 1)];
            obj << "f " << v00 << " " << v01 << " " << v11 << "\n";
            obj << "f " << v00 << " " << v11 << " " << v10 << "\n";
        }
    }
    if (!obj.good() || !csv.good()) throw IoError("write failure on '" + path + "'");
}

void export_mesh(const TangentSurfaceGrid& grid, const std::string& path) {
    export_mesh(grid, "coords", {1, 2, 3}, path);
}

} // namespace tansurf
