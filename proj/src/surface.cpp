#include "tansurf/surface.hpp"

#include <Eigen/SVD>
#include <cmath>

namespace tansurf {

namespace {

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v(static_cast<std::size_t>(n));
    if (n == 1) {
        v[0] = a;
        return v;
    }
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = a + (b - a) * i / (n - 1);
    return v;
}

Eigen::VectorXd jet_values(const JetVec& v) {
    Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) out[static_cast<Eigen::Index>(i)] = v[i].value();
    return out;
}

Eigen::VectorXd jet_t_derivatives(const JetVec& v) {
    Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) out[static_cast<Eigen::Index>(i)] = v[i].coeff(1);
    return out;
}

} // namespace

TangentSurfaceGrid eval_surface(const ChristoffelField& conn, const DirectedCurve& curve,
                                double t_min, double t_max, double s_min, double s_max, int n_t,
                                int n_s, const SurfaceOptions& opts) {
    const int m = conn.dim();
    TangentSurfaceGrid grid;
    grid.dim = m;
    grid.t_values = linspace(t_min, t_max, n_t);
    grid.s_values = linspace(s_min, s_max, n_s);
    const std::size_t total = static_cast<std::size_t>(n_t) * static_cast<std::size_t>(n_s);
    grid.points.assign(total, Eigen::VectorXd::Zero(m));
    grid.jacobians.assign(total, Eigen::MatrixXd::Zero(m, 2));
    grid.sigma_min.assign(total, 0.0);
    grid.sigma_max.assign(total, 0.0);
    grid.column_ok.assign(static_cast<std::size_t>(n_t), 1);

    for (int i = 0; i < n_t; ++i) {
        const double t = grid.t_values[static_cast<std::size_t>(i)];
        try {
            const LocalFrame lf =
                local_frame(conn, curve, t, opts.jet_order, opts.rank_rel_tol, opts.zero_atol);
            // order-1 jets carry exactly the df/dt column
            const JetVec gj = truncated(curve_jets(curve.gamma, t, opts.jet_order), 1);
            const JetVec uj = truncated(lf.u, 1);
            const auto result = geodesic_jet(conn, gj, uj, grid.s_values, opts.integrator);
            if (result.status != IntegrationStatus::Ok &&
                result.states.size() < grid.s_values.size()) {
                grid.column_ok[static_cast<std::size_t>(i)] = 0;
                continue;
            }
            for (int j = 0; j < n_s; ++j) {
                const auto& st = result.states[static_cast<std::size_t>(j)];
                const std::size_t idx = grid.index(i, j);
                grid.points[idx] = jet_values(st.x);
                Eigen::MatrixXd J(m, 2);
                J.col(0) = jet_t_derivatives(st.x);
                J.col(1) = jet_values(st.v);
                grid.jacobians[idx] = J;
                Eigen::JacobiSVD<Eigen::MatrixXd> svd(J);
                grid.sigma_max[idx] = svd.singularValues()(0);
                grid.sigma_min[idx] = svd.singularValues()(1);
            }
        } catch (const Error&) {
            grid.column_ok[static_cast<std::size_t>(i)] = 0;
        }
    }
    return grid;
}

SingularLocus singular_locus(const TangentSurfaceGrid& grid, double rel_tol) {
    SingularLocus locus;
    for (int i = 0; i < grid.n_t(); ++i) {
        if (!grid.column_ok[static_cast<std::size_t>(i)]) continue;
        for (int j = 0; j < grid.n_s(); ++j) {
            const std::size_t idx = grid.index(i, j);
            if (grid.sigma_min[idx] < rel_tol * grid.sigma_max[idx]) {
                locus.flagged.emplace_back(i, j);
                locus.max_abs_s =
                    std::max(locus.max_abs_s, std::abs(grid.s_values[static_cast<std::size_t>(j)]));
            }
        }
    }
    return locus;
}

FrontalFrame frontal_frame(const ChristoffelField& conn, const DirectedCurve& curve, double t,
                           double s, const SurfaceOptions& opts) {
    const LocalFrame lf =
        local_frame(conn, curve, t, opts.jet_order, opts.rank_rel_tol, opts.zero_atol);
    FrontalFrame frame;
    frame.c = lf.c.value();

    if (s == 0.0) {
        const JetVec gj = curve_jets(curve.gamma, t, opts.jet_order);
        frame.v1 = jet_values(lf.u);
        frame.v2 = jet_values(covariant_derivative(lf.u, gj, conn));
        return frame;
    }
    if (std::abs(s) < opts.s_switch)
        throw NearSingularQuotient("frontal frame requested at 0 < |s| < s_switch");

    const JetVec gj = truncated(curve_jets(curve.gamma, t, opts.jet_order), 1);
    const JetVec uj = truncated(lf.u, 1);
    auto result = geodesic_jet(conn, gj, uj, {s}, opts.integrator);
    if (result.status != IntegrationStatus::Ok)
        throw BlowUp("geodesic integration failed while building the frontal frame");
    const auto& st = result.states[0];
    const Eigen::VectorXd df_dt = jet_t_derivatives(st.x);
    const Eigen::VectorXd df_ds = jet_values(st.v);
    frame.v1 = df_ds;
    frame.v2 = (df_dt - frame.c * df_ds) / s;
    return frame;
}

EtaDerivatives eta_derivatives(const ChristoffelField& conn, const DirectedCurve& curve,
                               double t0, const SurfaceOptions& opts) {
    const LocalFrame lf =
        local_frame(conn, curve, t0, opts.jet_order, opts.rank_rel_tol, opts.zero_atol);
    const JetVec gj = curve_jets(curve.gamma, t0, opts.jet_order);
    if (lf.u[0].order() < 3)
        throw OrderExhausted("jet order too small for the eta derivatives");
    const auto chain = covariant_value_chain(lf.u, gj, conn, 4);
    EtaDerivatives out;
    out.e2 = chain[2];
    out.e3 = chain[3];
    return out;
}

} // namespace tansurf
