#pragma once

#include <Eigen/Core>
#include <string>

#include "tansurf/curve.hpp"

namespace tansurf {

/// The model germs: tangent-surface-shaped representatives of the local
/// singularity classes, plus Whitney's cusp for reference.
enum class GermKind {
    CuspidalEdge,    // (t+s, t^2+2st, t^3+3st^2, 0, ..., 0), m >= 3
    FoldedUmbrella,  // (t+s, t^2+2st, t^4+4st^3), m = 3
    Swallowtail,     // (t^2+s, t^3+(3/2)st, t^4+2st^2), m = 3
    OpenSwallowtail, // adds t^5+(5/2)st^3 then zeros, m >= 4
    WhitneyCusp,     // (u, t) -> (u, t^3+ut), m = 2
};

std::string to_string(GermKind kind);
GermKind germ_kind_from_string(const std::string& name);

/// Exact polynomial evaluation of the germ. Throws ValidationError when the
/// kind fixes a dimension incompatible with m.
Eigen::VectorXd germ_eval(GermKind kind, int m, double t, double s);

/// The flat-space model curve whose tangent surface is the germ, with frame
/// and factor attached (c = 1 for the immersed models, c = 2t with the
/// coefficient-shift frame for the swallowtail ones).
DirectedCurve model_curve(GermKind kind, int m);

} // namespace tansurf
