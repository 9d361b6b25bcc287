#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tansurf/connection.hpp"
#include "tansurf/expr.hpp"
#include "tansurf/jet.hpp"

namespace tansurf {

/// A possibly singular curve with a direction field: gamma' = c * u with u
/// never zero. Frame and factor are optional; when absent they are derived
/// locally (u = gamma' at immersed points, coefficient shifting at
/// degeneracies).
struct DirectedCurve {
    int dim = 0;
    std::vector<Expr> gamma;
    std::vector<Expr> frame;  // empty when no frame supplied
    Expr factor;              // empty when no factor supplied
    double t_min = -1.0;
    double t_max = 1.0;

    bool has_frame() const { return !frame.empty(); }
    bool has_factor() const { return !factor.empty(); }
};

/// Order of vanishing of c at its base point: smallest j with |c_j| > atol.
/// nullopt when every coefficient up to the jet order is below atol.
std::optional<int> vanishing_order(const Jet& c, double atol = 1e-12);

/// Frame at a degeneracy of order k: u(t) = gamma'(t) / (k (t-t0)^{k-1}),
/// realized by shifting jet coefficients. The first k-1 coefficients of
/// gamma' must be negligible in every coordinate, and the k-th must not be.
JetVec frame_from_degenerate(const JetVec& gamma_jets, int k, double atol = 1e-12);

/// Jet of the accompanying factor c(t) = k (t-t0)^{k-1}.
Jet degenerate_factor_jet(int k, int order, double t0);

/// Strictly increasing sequence (b_1, ..., b_m); b_i is the smallest k such
/// that {w, nabla w, ..., nabla^{k-1} w} at t0 has rank i. Entries beyond the
/// reachable rank are nullopt (undetermined within the jet order).
struct NablaType {
    std::vector<std::optional<int>> entries;
    double t0 = 0.0;

    bool determinate() const;
    std::vector<int> as_ints() const;
    bool operator==(const NablaType& other) const { return entries == other.entries; }
};

std::string to_string(const NablaType& type);

NablaType field_nabla_type(const JetVec& w, const JetVec& gamma_jets,
                           const ChristoffelField& conn, int k_max, double rank_rel_tol = 1e-9);

NablaType curve_nabla_type(const ChristoffelField& conn, const std::vector<Expr>& gamma,
                           double t0, int k_max, int jet_order, double rank_rel_tol = 1e-9);

/// First k with a non-negligible (nabla^k gamma)(t0), scanning the chain.
/// nullopt when the whole chain is negligible up to the scan depth.
std::optional<int> detect_degeneracy_order(const ChristoffelField& conn,
                                           const JetVec& gamma_jets, int scan_depth,
                                           double rank_rel_tol = 1e-9);

/// Frame jets at t0: explicit frame when the curve has one, otherwise the
/// velocity at immersed points or the coefficient-shift frame at a detected
/// degeneracy.
struct LocalFrame {
    JetVec u;          // frame jets
    Jet c;             // factor jet, same base point
    int degeneracy_k;  // 1 at immersed points
};

LocalFrame local_frame(const ChristoffelField& conn, const DirectedCurve& curve, double t0,
                       int jet_order, double rank_rel_tol = 1e-9, double atol = 1e-12);

} // namespace tansurf
