#include "tansurf/normal_forms.hpp"

namespace tansurf {

std::string to_string(GermKind kind) {
    switch (kind) {
        case GermKind::CuspidalEdge: return "cuspidal-edge";
        case GermKind::FoldedUmbrella: return "folded-umbrella";
        case GermKind::Swallowtail: return "swallowtail";
        case GermKind::OpenSwallowtail: return "open-swallowtail";
        case GermKind::WhitneyCusp: return "whitney-cusp";
    }
    return "cuspidal-edge";
}

GermKind germ_kind_from_string(const std::string& name) {
    if (name == "cuspidal-edge") return GermKind::CuspidalEdge;
    if (name == "folded-umbrella") return GermKind::FoldedUmbrella;
    if (name == "swallowtail") return GermKind::Swallowtail;
    if (name == "open-swallowtail") return GermKind::OpenSwallowtail;
    if (name == "whitney-cusp") return GermKind::WhitneyCusp;
    throw ValidationError("unknown germ kind '" + name + "'");
}

namespace {

void check_dim(GermKind kind, int m) {
    switch (kind) {
        case GermKind::CuspidalEdge:
            if (m < 3) throw ValidationError("cuspidal edge requires m >= 3");
            return;
        case GermKind::FoldedUmbrella:
        case GermKind::Swallowtail:
            if (m != 3) throw ValidationError(to_string(kind) + " fixes m = 3");
            return;
        case GermKind::OpenSwallowtail:
            if (m < 4) throw ValidationError("open swallowtail requires m >= 4");
            return;
        case GermKind::WhitneyCusp:
            if (m != 2) throw ValidationError("Whitney cusp fixes m = 2");
            return;
    }
}

} // namespace

Eigen::VectorXd germ_eval(GermKind kind, int m, double t, double s) {
    check_dim(kind, m);
    Eigen::VectorXd p = Eigen::VectorXd::Zero(m);
    switch (kind) {
        case GermKind::CuspidalEdge:
            p[0] = t + s;
            p[1] = t * t + 2 * s * t;
            p[2] = t * t * t + 3 * s * t * t;
            break;
        case GermKind::FoldedUmbrella:
            p[0] = t + s;
            p[1] = t * t + 2 * s * t;
            p[2] = t * t * t * t + 4 * s * t * t * t;
            break;
        case GermKind::OpenSwallowtail:
            p[3] = t * t * t * t * t + 2.5 * s * t * t * t;
            [[fallthrough]];
        case GermKind::Swallowtail:
            p[0] = t * t + s;
            p[1] = t * t * t + 1.5 * s * t;
            p[2] = t * t * t * t + 2 * s * t * t;
            break;
        case GermKind::WhitneyCusp:
            // (u, t) -> (u, t^3 + ut), with (t, s) read as (t, u)
            p[0] = s;
            p[1] = t * t * t + s * t;
            break;
    }
    return p;
}

DirectedCurve model_curve(GermKind kind, int m) {
    check_dim(kind, m);
    if (kind == GermKind::WhitneyCusp)
        throw ValidationError("the Whitney cusp is not a tangent-surface model");

    const std::vector<std::string> vars{"t"};
    DirectedCurve curve;
    curve.dim = m;
    curve.t_min = -1.0;
    curve.t_max = 1.0;

    const auto expr = [&vars](const std::string& s) { return parse_expr(s, vars); };
    const auto pad = [&](std::vector<Expr>& v) {
        while (static_cast<int>(v.size()) < m) v.push_back(expr("0"));
    };

    switch (kind) {
        case GermKind::CuspidalEdge:
            curve.gamma = {expr("t"), expr("t^2"), expr("t^3")};
            curve.frame = {expr("1"), expr("2*t"), expr("3*t^2")};
            curve.factor = expr("1");
            break;
        case GermKind::FoldedUmbrella:
            curve.gamma = {expr("t"), expr("t^2"), expr("t^4")};
            curve.frame = {expr("1"), expr("2*t"), expr("4*t^3")};
            curve.factor = expr("1");
            break;
        case GermKind::Swallowtail:
            curve.gamma = {expr("t^2"), expr("t^3"), expr("t^4")};
            curve.frame = {expr("1"), expr("1.5*t"), expr("2*t^2")};
            curve.factor = expr("2*t");
            break;
        case GermKind::OpenSwallowtail:
            curve.gamma = {expr("t^2"), expr("t^3"), expr("t^4"), expr("t^5")};
            curve.frame = {expr("1"), expr("1.5*t"), expr("2*t^2"), expr("2.5*t^3")};
            curve.factor = expr("2*t");
            break;
        case GermKind::WhitneyCusp:
            break;
    }
    pad(curve.gamma);
    pad(curve.frame);
    return curve;
}

} // namespace tansurf
