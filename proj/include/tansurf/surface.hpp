#pragma once

#include <Eigen/Core>
#include <utility>
#include <vector>

#include "tansurf/connection.hpp"
#include "tansurf/curve.hpp"
#include "tansurf/geodesic.hpp"

namespace tansurf {

/// Sampled tangent surface f(t,s) = phi(gamma(t), u(t), s) with exact
/// Jacobian columns from jet coefficients (no finite differences).
struct TangentSurfaceGrid {
    int dim = 0;
    std::vector<double> t_values;
    std::vector<double> s_values;
    // row-major over (t, s): index i * n_s + j
    std::vector<Eigen::VectorXd> points;
    std::vector<Eigen::MatrixXd> jacobians; // m x 2 columns (df/dt, df/ds)
    std::vector<double> sigma_min;
    std::vector<double> sigma_max;
    std::vector<char> column_ok; // per t column

    int n_t() const { return static_cast<int>(t_values.size()); }
    int n_s() const { return static_cast<int>(s_values.size()); }
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(i) * s_values.size() + static_cast<std::size_t>(j);
    }
    const Eigen::VectorXd& point(int i, int j) const { return points[index(i, j)]; }
};

struct SurfaceOptions {
    IntegratorOptions integrator;
    int jet_order = 8;
    double rank_rel_tol = 1e-9;
    double zero_atol = 1e-12;
    double s_switch = 1e-4;
};

/// One jet-valued geodesic integration per t column. Failed columns are
/// marked in column_ok and skipped; the grid is still returned.
TangentSurfaceGrid eval_surface(const ChristoffelField& conn, const DirectedCurve& curve,
                                double t_min, double t_max, double s_min, double s_max, int n_t,
                                int n_s, const SurfaceOptions& opts = {});

struct SingularLocus {
    std::vector<std::pair<int, int>> flagged; // (i, j) grid indices
    double max_abs_s = 0.0;
};

/// Grid points where sigma_min < rel_tol * sigma_max of the Jacobian.
SingularLocus singular_locus(const TangentSurfaceGrid& grid, double rel_tol);

/// Frontal frame V1 = df/ds and V2 = F = (df/dt - c df/ds)/s, with the
/// kernel direction eta = d/dt - c(t) d/ds along s = 0. At s = 0 the limit
/// F(t, 0) = (nabla u)(t) is used.
struct FrontalFrame {
    Eigen::VectorXd v1;
    Eigen::VectorXd v2;
    double c = 0.0; // eta coefficients are (1, -c)
};

FrontalFrame frontal_frame(const ChristoffelField& conn, const DirectedCurve& curve, double t,
                           double s, const SurfaceOptions& opts = {});

/// E2 = (nabla^f_eta F)(t0, 0) = (nabla^2 u)(t0) and its covariant
/// t-derivative E3 = (nabla^3 u)(t0); the surface-side eta-derivatives
/// reduce to covariant derivatives of the frame along the curve.
struct EtaDerivatives {
    Eigen::VectorXd e2;
    Eigen::VectorXd e3;
};

EtaDerivatives eta_derivatives(const ChristoffelField& conn, const DirectedCurve& curve,
                               double t0, const SurfaceOptions& opts = {});

} // namespace tansurf
