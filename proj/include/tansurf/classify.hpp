#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "tansurf/connection.hpp"
#include "tansurf/curve.hpp"
#include "tansurf/rank.hpp"
#include "tansurf/surface.hpp"

namespace tansurf {

enum class SingularityClass {
    CuspidalEdge,
    FoldedUmbrella,
    Swallowtail,
    OpenSwallowtail,
    NonGeneric,
};

std::string to_string(SingularityClass c);

struct ClassifyOptions {
    double rank_rel_tol = 1e-9;
    double zero_atol = 1e-12;
    int jet_order = 8;
};

/// Verdict plus the evidence it was derived from, so a decision can be
/// re-audited from the report alone.
struct ClassificationReport {
    double t0 = 0.0;
    int dim = 0;
    SingularityClass verdict = SingularityClass::NonGeneric;
    int degeneracy_order = 0;                 // 0 when undetermined
    NablaType nabla_type;
    std::vector<Eigen::VectorXd> chain;       // D[1..5]
    std::vector<std::string> rank_decisions;  // human-readable rank evidence
    double rank_rel_tol = 0.0;
    double zero_atol = 0.0;
    std::string reason;                       // set for NonGeneric verdicts
};

/// Covariant-jet rank criteria at a point of the curve. The connection is
/// symmetrized first; tangent surfaces only see the torsion-free part.
///
/// m = 3: rank{D1,D2,D3} = 3 -> cuspidal edge;
///        rank{D1,D2,D3} < 3 and rank{D1,D2,D4} = 3, D1 != 0 -> folded umbrella;
///        D1 ~ 0 and rank{D2,D3,D4} = 3 -> swallowtail.
/// m >= 4: rank{D1,D2,D3} = 3 -> cuspidal edge;
///         D1 ~ 0 and rank{D2,D3,D4,D5} = 4 -> open swallowtail.
ClassificationReport classify_point(const ChristoffelField& conn, const std::vector<Expr>& gamma,
                                    double t0, const ClassifyOptions& opts = {});
ClassificationReport classify_point(const ChristoffelField& conn, const DirectedCurve& curve,
                                    double t0, const ClassifyOptions& opts = {});

/// Frontal-frame route: V1 = u, V2 = nabla u, E2 = nabla^2 u, E3 = nabla^3 u.
/// Swallowtail and open swallowtail need a degeneracy of order exactly 2;
/// at immersed points the cuspidal-edge test is rank{u, nabla u, nabla^2 u}.
ClassificationReport classify_via_frames(const ChristoffelField& conn, const DirectedCurve& curve,
                                         double t0, const ClassifyOptions& opts = {});

struct ScanEvent {
    double t = 0.0;
    SingularityClass verdict = SingularityClass::NonGeneric;
    std::string indicator; // which indicator vanished
};

struct ScanResult {
    std::vector<ScanEvent> events;
    SingularityClass ambient = SingularityClass::CuspidalEdge; // class away from events
};

/// Samples det-like indicators over the interval, refines sign changes by
/// bisection to |interval| < 1e-10 and classifies each root.
ScanResult scan_curve(const ChristoffelField& conn, const DirectedCurve& curve, double t_min,
                      double t_max, int n_samples, const ClassifyOptions& opts = {});

/// Codimension a_1 - 1 + sum_{i=2}^m (a_i - a_1 - i + 1) of a nabla type.
int codim(const std::vector<int>& type, int m);

} // namespace tansurf
