#include "tansurf/curve.hpp"

#include <cmath>

#include "tansurf/rank.hpp"

namespace tansurf {

std::optional<int> vanishing_order(const Jet& c, double atol) {
    for (int j = 0; j <= c.order(); ++j)
        if (std::abs(c.coeff(j)) > atol) return j;
    return std::nullopt;
}

JetVec frame_from_degenerate(const JetVec& gamma_jets, int k, double atol) {
    if (k < 1) throw DegeneracyMismatch("degeneracy order must be at least 1");
    const JetVec gp = derivative_jet(gamma_jets);
    const int n = gp[0].order();
    if (k - 1 > n)
        throw OrderExhausted("jet order too small for the requested degeneracy order");

    // gamma' must vanish to order exactly k-1 at the base point.
    double lead = 0.0;
    for (const Jet& g : gp) {
        for (int j = 0; j < k - 1; ++j)
            if (std::abs(g.coeff(j)) > atol)
                throw DegeneracyMismatch(
                    "gamma' has a nonzero coefficient below the declared order");
        lead = std::max(lead, std::abs(g.coeff(k - 1)));
    }
    if (k >= 2 && lead <= atol)
        throw DegeneracyMismatch("gamma' vanishes beyond the declared order");

    JetVec u;
    u.reserve(gp.size());
    for (const Jet& g : gp) {
        std::vector<double> c(static_cast<std::size_t>(n - k + 2), 0.0);
        for (int j = 0; j <= n - k + 1; ++j) c[static_cast<std::size_t>(j)] = g.coeff(j + k - 1) / k;
        u.emplace_back(g.base(), std::move(c));
    }
    return u;
}

Jet degenerate_factor_jet(int k, int order, double t0) {
    std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
    if (k - 1 <= order) c[static_cast<std::size_t>(k - 1)] = static_cast<double>(k);
    return Jet(t0, std::move(c));
}

bool NablaType::determinate() const {
    for (const auto& e : entries)
        if (!e) return false;
    return !entries.empty();
}

std::vector<int> NablaType::as_ints() const {
    std::vector<int> out;
    out.reserve(entries.size());
    for (const auto& e : entries) {
        if (!e) throw MalformedType("nabla type has undetermined entries");
        out.push_back(*e);
    }
    return out;
}

std::string to_string(const NablaType& type) {
    std::string s = "(";
    for (std::size_t i = 0; i < type.entries.size(); ++i) {
        if (i) s += ",";
        s += type.entries[i] ? std::to_string(*type.entries[i]) : std::string("?");
    }
    return s + ")";
}

NablaType field_nabla_type(const JetVec& w, const JetVec& gamma_jets,
                           const ChristoffelField& conn, int k_max, double rank_rel_tol) {
    const int m = conn.dim();
    const auto chain = covariant_value_chain(w, gamma_jets, conn, k_max);

    NablaType type;
    type.t0 = gamma_jets[0].base();
    type.entries.assign(static_cast<std::size_t>(m), std::nullopt);

    std::vector<Eigen::VectorXd> prefix;
    int rank = 0;
    for (int k = 1; k <= k_max && rank < m; ++k) {
        prefix.push_back(chain[static_cast<std::size_t>(k - 1)]);
        const int r = rank_tol(prefix, rank_rel_tol);
        if (r > rank) {
            for (int i = rank; i < r; ++i) type.entries[static_cast<std::size_t>(i)] = k;
            rank = r;
        }
    }
    return type;
}

NablaType curve_nabla_type(const ChristoffelField& conn, const std::vector<Expr>& gamma,
                           double t0, int k_max, int jet_order, double rank_rel_tol) {
    const JetVec gj = curve_jets(gamma, t0, jet_order);
    return field_nabla_type(derivative_jet(gj), gj, conn, k_max, rank_rel_tol);
}

std::optional<int> detect_degeneracy_order(const ChristoffelField& conn,
                                           const JetVec& gamma_jets, int scan_depth,
                                           double rank_rel_tol) {
    const CovariantChain chain = covariant_chain(conn, gamma_jets, scan_depth);
    double max_norm = 0.0;
    for (const auto& d : chain.D) max_norm = std::max(max_norm, d.norm());
    if (max_norm < 1e-14) return std::nullopt;
    for (int k = 1; k <= scan_depth; ++k)
        if (chain.D[static_cast<std::size_t>(k - 1)].norm() > rank_rel_tol * max_norm) return k;
    return std::nullopt;
}

LocalFrame local_frame(const ChristoffelField& conn, const DirectedCurve& curve, double t0,
                       int jet_order, double rank_rel_tol, double atol) {
    const JetVec gj = curve_jets(curve.gamma, t0, jet_order);
    const Jet t = Jet::variable(jet_order, t0);

    LocalFrame out;
    if (curve.has_frame()) {
        out.u.reserve(curve.frame.size());
        for (const Expr& e : curve.frame) out.u.push_back(eval_jet(e, {t}, jet_order, t0));
        if (curve.has_factor()) {
            out.c = eval_jet(curve.factor, {t}, jet_order, t0);
        } else {
            // c = <gamma', u> / <u, u>, exact when gamma' = c u.
            const JetVec gp = derivative_jet(gj);
            const int n = gp[0].order();
            Jet num = Jet::constant(n, t0, 0.0);
            Jet den = Jet::constant(n, t0, 0.0);
            const JetVec ut = truncated(out.u, n);
            for (std::size_t i = 0; i < ut.size(); ++i) {
                num = num + gp[i] * ut[i];
                den = den + ut[i] * ut[i];
            }
            out.c = num / den;
        }
        const auto ord = vanishing_order(out.c, atol);
        out.degeneracy_k = ord ? *ord + 1 : 1;
        return out;
    }

    const int scan_depth = std::min(jet_order - 1, conn.dim() + 2);
    const auto k = detect_degeneracy_order(conn, gj, scan_depth, rank_rel_tol);
    if (!k)
        throw FrameUnavailable("curve has negligible covariant chain at t0 = " +
                               std::to_string(t0));
    out.degeneracy_k = *k;
    if (*k == 1) {
        out.u = derivative_jet(gj);
        out.c = Jet::constant(out.u[0].order(), t0, 1.0);
    } else {
        out.u = frame_from_degenerate(gj, *k, atol);
        out.c = degenerate_factor_jet(*k, out.u[0].order(), t0);
    }
    return out;
}

} // namespace tansurf
