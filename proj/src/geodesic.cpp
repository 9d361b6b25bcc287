#include "tansurf/geodesic.hpp"

namespace tansurf {

IntegrationResult<Jet> geodesic_jet(const ChristoffelField& conn, const JetVec& gamma_jets,
                                    const JetVec& u_jets, const std::vector<double>& s_values,
                                    const IntegratorOptions& opts) {
    const int order = std::min(gamma_jets[0].order(), u_jets[0].order());
    return integrate_geodesic<Jet>(conn, truncated(gamma_jets, order), truncated(u_jets, order),
                                   s_values, opts);
}

std::vector<GeodesicState<double>> integrate_geodesic_path(const ChristoffelField& conn,
                                                           const std::vector<double>& x,
                                                           const std::vector<double>& v,
                                                           const std::vector<double>& s_values,
                                                           const IntegratorOptions& opts) {
    auto result = integrate_geodesic<double>(conn, x, v, s_values, opts);
    if (result.status == IntegrationStatus::StepLimitExceeded)
        throw StepLimitExceeded("geodesic integration exceeded the step limit");
    if (result.status == IntegrationStatus::BlowUp)
        throw BlowUp("geodesic state norm exceeded the blow-up bound");
    return std::move(result.states);
}

namespace {

std::vector<double> remainder_limit(const ChristoffelField& conn, const std::vector<double>& x,
                                    const std::vector<double>& v) {
    const int m = conn.dim();
    const std::vector<double> G = conn.values_at(x);
    std::vector<double> h0(static_cast<std::size_t>(m), 0.0);
    for (int l = 0; l < m; ++l) {
        double acc = 0.0;
        for (int mu = 0; mu < m; ++mu)
            for (int nu = 0; nu < m; ++nu)
                acc -= G[static_cast<std::size_t>((l * m + mu) * m + nu)] *
                       v[static_cast<std::size_t>(mu)] * v[static_cast<std::size_t>(nu)];
        h0[static_cast<std::size_t>(l)] = acc;
    }
    return h0;
}

std::vector<double> remainder_quotient(const ChristoffelField& conn,
                                       const std::vector<double>& x,
                                       const std::vector<double>& v, double s,
                                       const IntegratorOptions& opts) {
    const auto path = integrate_geodesic_path(conn, x, v, {s}, opts);
    const int m = conn.dim();
    std::vector<double> h(static_cast<std::size_t>(m), 0.0);
    for (int l = 0; l < m; ++l)
        h[static_cast<std::size_t>(l)] =
            2.0 *
            (path[0].x[static_cast<std::size_t>(l)] - x[static_cast<std::size_t>(l)] -
             s * v[static_cast<std::size_t>(l)]) /
            (s * s);
    return h;
}

} // namespace

std::vector<double> geodesic_remainder(const ChristoffelField& conn, const std::vector<double>& x,
                                       const std::vector<double>& v, double s,
                                       const IntegratorOptions& opts, double s_switch) {
    if (std::abs(s) > s_switch) return remainder_quotient(conn, x, v, s, opts);

    std::vector<double> h = remainder_limit(conn, x, v);
    if (s == 0.0) return h;
    // first-order correction toward the quotient branch; exact at |s| = s_switch
    const double se = s > 0.0 ? s_switch : -s_switch;
    const std::vector<double> he = remainder_quotient(conn, x, v, se, opts);
    for (std::size_t l = 0; l < h.size(); ++l) h[l] += (s / se) * (he[l] - h[l]);
    return h;
}

} // namespace tansurf
