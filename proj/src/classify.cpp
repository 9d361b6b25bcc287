#include "tansurf/classify.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <functional>

namespace tansurf {

std::string to_string(SingularityClass c) {
    switch (c) {
        case SingularityClass::CuspidalEdge: return "CuspidalEdge";
        case SingularityClass::FoldedUmbrella: return "FoldedUmbrella";
        case SingularityClass::Swallowtail: return "Swallowtail";
        case SingularityClass::OpenSwallowtail: return "OpenSwallowtail";
        case SingularityClass::NonGeneric: return "NonGeneric";
    }
    return "NonGeneric";
}

namespace {

std::string rank_note(const std::string& label, int rank) {
    return label + " = " + std::to_string(rank);
}

const Eigen::VectorXd& D(const ClassificationReport& r, int k) {
    return r.chain[static_cast<std::size_t>(k - 1)];
}

} // namespace

ClassificationReport classify_point(const ChristoffelField& conn, const DirectedCurve& curve,
                                    double t0, const ClassifyOptions& opts) {
    return classify_point(conn, curve.gamma, t0, opts);
}

ClassificationReport classify_point(const ChristoffelField& conn, const std::vector<Expr>& gamma,
                                    double t0, const ClassifyOptions& opts) {
    const int m = conn.dim();
    if (m < 3) throw ValidationError("classification requires dimension at least 3");

    const ChristoffelField sym = conn.torsion_free() ? conn : symmetrize(conn);

    ClassificationReport report;
    report.t0 = t0;
    report.dim = m;
    report.rank_rel_tol = opts.rank_rel_tol;
    report.zero_atol = opts.zero_atol;

    const JetVec gj = curve_jets(gamma, t0, opts.jet_order);
    const CovariantChain chain = covariant_chain(sym, gj, 5);
    report.chain = chain.D;
    report.nabla_type =
        field_nabla_type(derivative_jet(gj), gj, sym, std::min(opts.jet_order - 1, m + 2),
                         opts.rank_rel_tol);

    double max_norm = 0.0;
    for (const auto& d : chain.D) max_norm = std::max(max_norm, d.norm());
    if (max_norm < 1e-14) {
        report.verdict = SingularityClass::NonGeneric;
        report.reason = "covariant chain negligible up to order 5";
        return report;
    }
    const auto k = detect_degeneracy_order(sym, gj, 5, opts.rank_rel_tol);
    report.degeneracy_order = k ? *k : 0;
    const bool d1_zero = D(report, 1).norm() < opts.rank_rel_tol * max_norm;

    const auto rank3 = [&](int a, int b, int c) {
        const int r = rank_tol({D(report, a), D(report, b), D(report, c)}, opts.rank_rel_tol);
        report.rank_decisions.push_back(rank_note(
            "rank{D" + std::to_string(a) + ",D" + std::to_string(b) + ",D" + std::to_string(c) + "}",
            r));
        return r;
    };

    if (rank3(1, 2, 3) == 3) {
        report.verdict = SingularityClass::CuspidalEdge;
        return report;
    }

    if (m == 3) {
        if (!d1_zero && rank3(1, 2, 4) == 3) {
            report.verdict = SingularityClass::FoldedUmbrella;
            return report;
        }
        if (d1_zero && rank3(2, 3, 4) == 3) {
            report.verdict = SingularityClass::Swallowtail;
            return report;
        }
    } else {
        if (d1_zero) {
            const int r = rank_tol({D(report, 2), D(report, 3), D(report, 4), D(report, 5)},
                                   opts.rank_rel_tol);
            report.rank_decisions.push_back(rank_note("rank{D2,D3,D4,D5}", r));
            if (r == 4) {
                report.verdict = SingularityClass::OpenSwallowtail;
                return report;
            }
        }
    }
    report.verdict = SingularityClass::NonGeneric;
    report.reason = "rank pattern outside the classified cases";
    return report;
}

ClassificationReport classify_via_frames(const ChristoffelField& conn, const DirectedCurve& curve,
                                         double t0, const ClassifyOptions& opts) {
    const int m = conn.dim();
    if (m < 3) throw ValidationError("classification requires dimension at least 3");
    const ChristoffelField sym = conn.torsion_free() ? conn : symmetrize(conn);

    ClassificationReport report;
    report.t0 = t0;
    report.dim = m;
    report.rank_rel_tol = opts.rank_rel_tol;
    report.zero_atol = opts.zero_atol;

    SurfaceOptions sopts;
    sopts.jet_order = opts.jet_order;
    sopts.rank_rel_tol = opts.rank_rel_tol;
    sopts.zero_atol = opts.zero_atol;

    const LocalFrame lf = local_frame(sym, curve, t0, opts.jet_order, opts.rank_rel_tol,
                                      opts.zero_atol);
    report.degeneracy_order = lf.degeneracy_k;

    const FrontalFrame frame = frontal_frame(sym, curve, t0, 0.0, sopts);
    const EtaDerivatives eta = eta_derivatives(sym, curve, t0, sopts);

    if (lf.degeneracy_k == 1) {
        const int r = rank_tol({frame.v1, frame.v2, eta.e2}, opts.rank_rel_tol);
        report.rank_decisions.push_back(rank_note("rank{u,Du,D2u}", r));
        report.verdict = r == 3 ? SingularityClass::CuspidalEdge : SingularityClass::NonGeneric;
        if (r != 3) report.reason = "frame chain rank deficient at an immersed point";
        return report;
    }
    if (lf.degeneracy_k == 2) {
        if (m == 3) {
            const int r = rank_tol({frame.v1, frame.v2, eta.e2}, opts.rank_rel_tol);
            report.rank_decisions.push_back(rank_note("rank{V1,V2,E2}", r));
            report.verdict = r == 3 ? SingularityClass::Swallowtail : SingularityClass::NonGeneric;
            if (r != 3) report.reason = "V1, V2, E2 rank deficient";
        } else {
            const int r = rank_tol({frame.v1, frame.v2, eta.e2, eta.e3}, opts.rank_rel_tol);
            report.rank_decisions.push_back(rank_note("rank{V1,V2,E2,E3}", r));
            report.verdict =
                r == 4 ? SingularityClass::OpenSwallowtail : SingularityClass::NonGeneric;
            if (r != 4) report.reason = "V1, V2, E2, E3 rank deficient";
        }
        return report;
    }
    report.verdict = SingularityClass::NonGeneric;
    report.reason = "degeneracy order " + std::to_string(lf.degeneracy_k) +
                    " outside the frame criteria";
    return report;
}

namespace {

double chain_det(const ChristoffelField& conn, const std::vector<Expr>& gamma, double t,
                 int jet_order) {
    const int m = conn.dim();
    const CovariantChain chain = covariant_chain(conn, curve_jets(gamma, t, jet_order), m);
    Eigen::MatrixXd A(m, m);
    for (int k = 0; k < m; ++k) A.col(k) = chain.D[static_cast<std::size_t>(k)];
    return A.determinant();
}

double bisect_root(const std::function<double(double)>& f, double a, double b, double fa) {
    while (b - a > 1e-10) {
        const double mid = 0.5 * (a + b);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fa < 0.0) != (fm < 0.0)) {
            b = mid;
        } else {
            a = mid;
            fa = fm;
        }
    }
    return 0.5 * (a + b);
}

} // namespace

ScanResult scan_curve(const ChristoffelField& conn, const DirectedCurve& curve, double t_min,
                      double t_max, int n_samples, const ClassifyOptions& opts) {
    const ChristoffelField sym = conn.torsion_free() ? conn : symmetrize(conn);
    ScanResult result;
    if (n_samples < 2) return result;

    std::vector<std::pair<double, std::string>> roots;

    const auto scan_indicator = [&](const std::function<double(double)>& f,
                                    const std::string& name) {
        double prev_t = t_min;
        double prev_v = f(prev_t);
        if (prev_v == 0.0) roots.emplace_back(prev_t, name);
        for (int i = 1; i < n_samples; ++i) {
            const double t = t_min + (t_max - t_min) * i / (n_samples - 1);
            const double v = f(t);
            if (v == 0.0) {
                roots.emplace_back(t, name);
            } else if ((prev_v < 0.0) != (v < 0.0) && prev_v != 0.0) {
                roots.emplace_back(bisect_root(f, prev_t, t, prev_v), name);
            }
            prev_t = t;
            prev_v = v;
        }
    };

    scan_indicator(
        [&](double t) { return chain_det(sym, curve.gamma, t, opts.jet_order); }, "det-chain");
    if (curve.has_factor()) {
        scan_indicator([&](double t) { return eval_scalar(curve.factor, {t}); }, "factor-c");
    }

    const double merge = 1e-4 * (t_max - t_min);

    // Where gamma' itself vanishes the determinant has a high-order root and
    // the bisected estimate can land on floating-point sign noise a few
    // micro-units away. Polish such roots by minimizing |D1| nearby.
    const auto d1_norm = [&](double t) {
        return covariant_chain(sym, curve_jets(curve.gamma, t, opts.jet_order), 1).D[0].norm();
    };
    for (auto& [t, name] : roots) {
        if (name != "det-chain") continue;
        const CovariantChain chain =
            covariant_chain(sym, curve_jets(curve.gamma, t, opts.jet_order), 5);
        double scale = 0.0;
        for (const auto& d : chain.D) scale = std::max(scale, d.norm());
        if (scale <= 0.0 || chain.D[0].norm() > 1e-3 * scale) continue;
        double a = t - merge, b = t + merge;
        const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
        double c1 = b - gr * (b - a), c2 = a + gr * (b - a);
        double f1 = d1_norm(c1), f2 = d1_norm(c2);
        while (b - a > 1e-13) {
            if (f1 < f2) {
                b = c2; c2 = c1; f2 = f1;
                c1 = b - gr * (b - a); f1 = d1_norm(c1);
            } else {
                a = c1; c1 = c2; f1 = f2;
                c2 = a + gr * (b - a); f2 = d1_norm(c2);
            }
        }
        t = 0.5 * (a + b);
    }

    std::sort(roots.begin(), roots.end());
    std::vector<std::pair<double, std::string>> merged;
    for (const auto& r : roots) {
        if (!merged.empty() && r.first - merged.back().first < merge) {
            // factor roots are exact where determinant roots are noisy
            if (r.second == "factor-c") merged.back() = r;
            continue;
        }
        merged.push_back(r);
    }
    for (const auto& [t, name] : merged) {
        ScanEvent ev;
        ev.t = t;
        ev.indicator = name;
        ev.verdict = classify_point(sym, curve.gamma, t, opts).verdict;
        result.events.push_back(std::move(ev));
    }
    return result;
}

int codim(const std::vector<int>& type, int m) {
    if (static_cast<int>(type.size()) != m)
        throw MalformedType("nabla type length does not match the dimension");
    for (std::size_t i = 0; i < type.size(); ++i) {
        if (type[i] < 1) throw MalformedType("nabla type entries must be positive");
        if (i > 0 && type[i] <= type[i - 1])
            throw MalformedType("nabla type must be strictly increasing");
    }
    int c = type[0] - 1;
    for (int i = 2; i <= m; ++i) c += type[static_cast<std::size_t>(i - 1)] - type[0] - i + 1;
    return c;
}

} // namespace tansurf
