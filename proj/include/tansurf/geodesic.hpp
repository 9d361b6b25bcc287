#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "tansurf/connection.hpp"
#include "tansurf/jet.hpp"

namespace tansurf {

struct IntegratorOptions {
    enum class Method { FixedRK4, Adaptive45 };
    Method method = Method::Adaptive45;
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_steps = 100000;
    double initial_step = 0.0; // 0 means automatic
    double blowup_norm = 1e8;
};

template <class S>
struct GeodesicState {
    std::vector<S> x;
    std::vector<S> v;
    double s = 0.0;
};

enum class IntegrationStatus { Ok, StepLimitExceeded, BlowUp };

template <class S>
struct IntegrationResult {
    std::vector<GeodesicState<S>> states; // one per requested s, prefix on failure
    IntegrationStatus status = IntegrationStatus::Ok;
};

namespace detail {

inline std::vector<double> symbols_at(const ChristoffelField& conn,
                                      const std::vector<double>& x) {
    return conn.values_at(x);
}
inline std::vector<Jet> symbols_at(const ChristoffelField& conn, const std::vector<Jet>& x) {
    return conn.jets_at(x, x[0].order(), x[0].base());
}

// First-order geodesic system: y = (x, v), x' = v,
// v'^l = -Gamma^l_{mu,nu}(x) v^mu v^nu.
template <class S>
std::vector<S> geodesic_rhs(const ChristoffelField& conn, const std::vector<S>& y) {
    const int m = conn.dim();
    std::vector<S> dy(y.size());
    for (int i = 0; i < m; ++i) dy[static_cast<std::size_t>(i)] = y[static_cast<std::size_t>(m + i)];
    const std::vector<S> x(y.begin(), y.begin() + m);
    const std::vector<S> G = symbols_at(conn, x);
    for (int l = 0; l < m; ++l) {
        S acc = y[static_cast<std::size_t>(l)] * 0.0;
        for (int mu = 0; mu < m; ++mu)
            for (int nu = 0; nu < m; ++nu) {
                const S& g = G[static_cast<std::size_t>((l * m + mu) * m + nu)];
                if (jet_norm(g) == 0.0) continue;
                acc = acc - g * y[static_cast<std::size_t>(m + mu)] * y[static_cast<std::size_t>(m + nu)];
            }
        dy[static_cast<std::size_t>(m + l)] = acc;
    }
    return dy;
}

template <class S>
std::vector<S> axpy(const std::vector<S>& y, double h, const std::vector<S>& k) {
    std::vector<S> r = y;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] + h * k[i];
    return r;
}

template <class S>
double state_norm(const std::vector<S>& y) {
    double n = 0.0;
    for (const S& s : y) n = std::max(n, jet_norm(s));
    return n;
}

// Dormand-Prince 5(4) coefficients.
struct Dopri5 {
    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                            a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                            a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                            b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static constexpr double e1 = 35.0 / 384 - 5179.0 / 57600, e3 = 500.0 / 1113 - 7571.0 / 16695,
                            e4 = 125.0 / 192 - 393.0 / 640,
                            e5 = -2187.0 / 6784 + 92097.0 / 339200,
                            e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;
};

template <class S, class Rhs>
void dopri5_step(const Rhs& f, const std::vector<S>& y, double h, std::vector<S>& ynew,
                 std::vector<S>& err) {
    using T = Dopri5;
    const auto k1 = f(y);
    const auto k2 = f(axpy(y, h * T::a21, k1));
    std::vector<S> tmp = y;
    for (std::size_t i = 0; i < y.size(); ++i)
        tmp[i] = y[i] + h * (T::a31 * k1[i] + T::a32 * k2[i]);
    const auto k3 = f(tmp);
    for (std::size_t i = 0; i < y.size(); ++i)
        tmp[i] = y[i] + h * (T::a41 * k1[i] + T::a42 * k2[i] + T::a43 * k3[i]);
    const auto k4 = f(tmp);
    for (std::size_t i = 0; i < y.size(); ++i)
        tmp[i] = y[i] + h * (T::a51 * k1[i] + T::a52 * k2[i] + T::a53 * k3[i] + T::a54 * k4[i]);
    const auto k5 = f(tmp);
    for (std::size_t i = 0; i < y.size(); ++i)
        tmp[i] = y[i] + h * (T::a61 * k1[i] + T::a62 * k2[i] + T::a63 * k3[i] + T::a64 * k4[i] +
                             T::a65 * k5[i]);
    const auto k6 = f(tmp);
    ynew = y;
    for (std::size_t i = 0; i < y.size(); ++i)
        ynew[i] = y[i] + h * (T::b1 * k1[i] + T::b3 * k3[i] + T::b4 * k4[i] + T::b5 * k5[i] +
                              T::b6 * k6[i]);
    const auto k7 = f(ynew);
    err = y;
    for (std::size_t i = 0; i < y.size(); ++i)
        err[i] = h * (T::e1 * k1[i] + T::e3 * k3[i] + T::e4 * k4[i] + T::e5 * k5[i] +
                      T::e6 * k6[i] + T::e7 * k7[i]);
}

template <class S, class Rhs>
std::vector<S> rk4_step(const Rhs& f, const std::vector<S>& y, double h) {
    const auto k1 = f(y);
    const auto k2 = f(axpy(y, h / 2, k1));
    const auto k3 = f(axpy(y, h / 2, k2));
    const auto k4 = f(axpy(y, h, k3));
    std::vector<S> ynew = y;
    for (std::size_t i = 0; i < y.size(); ++i)
        ynew[i] = y[i] + (h / 6) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    return ynew;
}

// Integrates from s = 0 through an ascending (or descending) list of
// targets, recording the state at each. Returns false on failure.
template <class S, class Rhs>
IntegrationStatus integrate_targets(const Rhs& f, std::vector<S> y,
                                    const std::vector<double>& targets,
                                    const IntegratorOptions& opts,
                                    std::vector<std::vector<S>>& out) {
    if (targets.empty()) return IntegrationStatus::Ok;
    const double dir = targets.back() >= 0.0 ? 1.0 : -1.0;
    double s = 0.0;
    double h = opts.initial_step > 0.0 ? dir * opts.initial_step
                                       : dir * std::min(0.1, std::abs(targets.back()) + 1e-3);
    int steps = 0;
    std::size_t next = 0;
    while (next < targets.size() && targets[next] * dir <= 1e-300) {
        out.push_back(y); // s = 0 exactly
        ++next;
    }
    while (next < targets.size()) {
        if (steps++ >= opts.max_steps) return IntegrationStatus::StepLimitExceeded;
        bool hit_target = false;
        double h_try = h;
        if ((s + h_try - targets[next]) * dir >= 0.0) {
            h_try = targets[next] - s;
            hit_target = true;
        }
        std::vector<S> ynew, err;
        if (opts.method == IntegratorOptions::Method::FixedRK4) {
            ynew = rk4_step<S>(f, y, h_try);
        } else {
            dopri5_step<S>(f, y, h_try, ynew, err);
            double ratio = 0.0;
            for (std::size_t i = 0; i < y.size(); ++i) {
                const double sc =
                    opts.abs_tol + opts.rel_tol * std::max(jet_norm(y[i]), jet_norm(ynew[i]));
                ratio = std::max(ratio, jet_norm(err[i]) / sc);
            }
            if (ratio > 1.0 && std::abs(h_try) > 1e-14) {
                h = h_try * std::max(0.2, 0.9 * std::pow(ratio, -0.2));
                continue; // reject
            }
            const double grow = ratio > 0.0 ? 0.9 * std::pow(ratio, -0.2) : 5.0;
            h = h_try * std::clamp(grow, 0.2, 5.0);
        }
        y = std::move(ynew);
        s += h_try;
        if (state_norm(y) > opts.blowup_norm) return IntegrationStatus::BlowUp;
        if (hit_target) {
            out.push_back(y);
            ++next;
        }
    }
    return IntegrationStatus::Ok;
}

} // namespace detail

/// Integrates the geodesic equation from (x, v) and reports the state at
/// every requested s value (any signs; s = 0 reproduces the input exactly).
template <class S>
IntegrationResult<S> integrate_geodesic(const ChristoffelField& conn, const std::vector<S>& x,
                                        const std::vector<S>& v,
                                        const std::vector<double>& s_values,
                                        const IntegratorOptions& opts = {}) {
    const int m = conn.dim();
    std::vector<S> y(x.begin(), x.end());
    y.insert(y.end(), v.begin(), v.end());

    // Split by sign; each half is integrated outward from s = 0.
    std::vector<std::pair<double, std::size_t>> order;
    for (std::size_t i = 0; i < s_values.size(); ++i) order.emplace_back(s_values[i], i);
    std::sort(order.begin(), order.end());
    std::vector<double> neg, pos;
    std::vector<std::size_t> neg_idx, pos_idx;
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (it->first < 0.0) { neg.push_back(it->first); neg_idx.push_back(it->second); }
    for (const auto& [sv, idx] : order)
        if (sv >= 0.0) { pos.push_back(sv); pos_idx.push_back(idx); }

    const auto rhs = [&conn](const std::vector<S>& yy) { return detail::geodesic_rhs(conn, yy); };

    IntegrationResult<S> result;
    result.states.resize(s_values.size());
    std::vector<char> filled(s_values.size(), 0);

    for (int half = 0; half < 2; ++half) {
        const auto& targets = half == 0 ? pos : neg;
        const auto& idx = half == 0 ? pos_idx : neg_idx;
        std::vector<std::vector<S>> states;
        const auto status = detail::integrate_targets<S>(rhs, y, targets, opts, states);
        for (std::size_t i = 0; i < states.size(); ++i) {
            GeodesicState<S> st;
            st.x.assign(states[i].begin(), states[i].begin() + m);
            st.v.assign(states[i].begin() + m, states[i].end());
            st.s = s_values[idx[i]];
            result.states[idx[i]] = std::move(st);
            filled[idx[i]] = 1;
        }
        if (status != IntegrationStatus::Ok) {
            result.status = status;
            break;
        }
    }
    if (result.status != IntegrationStatus::Ok) {
        // keep only the filled prefix in requested order
        std::vector<GeodesicState<S>> kept;
        for (std::size_t i = 0; i < s_values.size(); ++i)
            if (filled[i]) kept.push_back(std::move(result.states[i]));
        result.states = std::move(kept);
    }
    return result;
}

/// Jet-valued tangent-surface column f(t, .) at fixed t0: the whole
/// integration runs in jet arithmetic over t. Coefficient 0 of x is the
/// surface point, coefficient 1 is df/dt, and the velocity state is df/ds.
IntegrationResult<Jet> geodesic_jet(const ChristoffelField& conn, const JetVec& gamma_jets,
                                    const JetVec& u_jets, const std::vector<double>& s_values,
                                    const IntegratorOptions& opts = {});

/// Throwing convenience wrapper for plain real initial data.
std::vector<GeodesicState<double>> integrate_geodesic_path(const ChristoffelField& conn,
                                                           const std::vector<double>& x,
                                                           const std::vector<double>& v,
                                                           const std::vector<double>& s_values,
                                                           const IntegratorOptions& opts = {});

/// Second-order remainder h in f(t,s) = gamma + s u + (1/2) s^2 h(...):
/// h = 2 (phi(x,v,s) - x - s v) / s^2 away from s = 0, with the limit
/// h(x,v,0)^l = -Gamma^l_{mu,nu}(x) v^mu v^nu and a first-order correction
/// on |s| <= s_switch.
std::vector<double> geodesic_remainder(const ChristoffelField& conn, const std::vector<double>& x,
                                       const std::vector<double>& v, double s,
                                       const IntegratorOptions& opts = {},
                                       double s_switch = 1e-4);

} // namespace tansurf
