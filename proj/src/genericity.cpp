#include "tansurf/genericity.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <cmath>

#include "tansurf/presets.hpp"
#include "tansurf/rng.hpp"

namespace tansurf {

namespace {

std::vector<double> poly_product(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> r(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

std::vector<double> poly_antiderivative(const std::vector<double>& a, double constant) {
    std::vector<double> r(a.size() + 1, 0.0);
    r[0] = constant;
    for (std::size_t i = 0; i < a.size(); ++i) r[i + 1] = a[i] / static_cast<double>(i + 1);
    return r;
}

double poly_eval(const std::vector<double>& a, double t) {
    double v = 0.0;
    for (std::size_t i = a.size(); i-- > 0;) v = v * t + a[i];
    return v;
}

} // namespace

RandomDirectedCurve random_directed_curve(const PerturbationSpec& spec, int index) {
    if (spec.degree < spec.dim + 1)
        throw ValidationError("degree bound must be at least dim + 1");
    SplitMix64 rng = SplitMix64(spec.seed).split(static_cast<std::uint64_t>(index));
    const std::vector<std::string> vars{"t"};
    const int m = spec.dim;

    RandomDirectedCurve out;
    out.curve.dim = m;
    out.curve.t_min = spec.t_min;
    out.curve.t_max = spec.t_max;

    std::vector<std::vector<double>> u_coeffs(static_cast<std::size_t>(m));
    if (spec.amplitude == 0.0) {
        for (auto& c : u_coeffs) c = {1.0};
    } else {
        const double floor = 0.05 * spec.amplitude;
        bool ok = false;
        for (int attempt = 0; attempt < 100 && !ok; ++attempt) {
            for (auto& c : u_coeffs) {
                c.assign(static_cast<std::size_t>(spec.degree) + 1, 0.0);
                for (auto& x : c) x = rng.uniform(-spec.amplitude, spec.amplitude);
            }
            ok = true;
            for (int g = 0; g <= 64 && ok; ++g) {
                const double t = spec.t_min + (spec.t_max - spec.t_min) * g / 64.0;
                double norm2 = 0.0;
                for (const auto& c : u_coeffs) {
                    const double v = poly_eval(c, t);
                    norm2 += v * v;
                }
                if (std::sqrt(norm2) < floor) ok = false;
            }
        }
        if (!ok) throw ResampleLimit("frame kept vanishing on the domain");
    }

    // factor c: an order-1 root is planted in half of the draws
    std::vector<double> c_coeffs;
    const double c_scale = spec.amplitude == 0.0 ? 1.0 : spec.amplitude;
    const double c0 = (0.3 + 0.7 * rng.uniform()) * c_scale * (rng.next() % 2 ? 1.0 : -1.0);
    if (spec.amplitude != 0.0 && (rng.next() % 2) == 0) {
        const double span = spec.t_max - spec.t_min;
        out.factor_root = spec.t_min + span * (0.1 + 0.8 * rng.uniform());
        out.factor_order = 1;
        c_coeffs = {-out.factor_root * c0, c0}; // c0 (t - t*)
    } else {
        c_coeffs = {c0};
    }

    // gamma by exact polynomial integration of c * u
    std::vector<double> base(static_cast<std::size_t>(m));
    for (auto& b : base) b = rng.uniform(-0.5, 0.5);
    if (spec.connection_preset == "hyperbolic-halfspace")
        base[static_cast<std::size_t>(m - 1)] = 1.0 + rng.uniform(0.0, 0.5);

    for (int i = 0; i < m; ++i) {
        const auto gi = poly_antiderivative(poly_product(c_coeffs, u_coeffs[static_cast<std::size_t>(i)]),
                                            base[static_cast<std::size_t>(i)]);
        out.curve.gamma.push_back(poly_expr(gi, "t", vars));
        out.curve.frame.push_back(poly_expr(u_coeffs[static_cast<std::size_t>(i)], "t", vars));
    }
    out.curve.factor = poly_expr(c_coeffs, "t", vars);
    return out;
}

namespace {

// Smallest accepted relative singular value over the tolerance, for the
// full-rank prefix of the curve chain; < 1 would mean the rank call flips.
double rank_margin(const ChristoffelField& conn, const std::vector<Expr>& gamma, double t,
                   const NablaType& type, const ClassifyOptions& opts) {
    if (!type.determinate()) return 0.0;
    const int depth = *type.entries.back();
    const CovariantChain chain =
        covariant_chain(conn, curve_jets(gamma, t, opts.jet_order), depth);
    const Eigen::VectorXd sv = singular_values(chain.D);
    const int m = static_cast<int>(type.entries.size());
    if (sv.size() < m || sv[0] <= 0.0) return 0.0;
    return (sv[m - 1] / sv[0]) / opts.rank_rel_tol;
}

} // namespace

TypeHistogram montecarlo_types(const PerturbationSpec& spec, const ClassifyOptions& opts) {
    ChristoffelField conn = preset_by_name(spec.connection_preset, spec.dim,
                                           spec.connection_seed, spec.connection_amplitude);
    if (!conn.torsion_free()) conn = symmetrize(conn);

    TypeHistogram hist;
    const int k_max = std::min(opts.jet_order - 1, spec.dim + 2);

    for (int i = 0; i < spec.curves; ++i) {
        const RandomDirectedCurve rdc = random_directed_curve(spec, i);
        SplitMix64 rng = SplitMix64(spec.seed ^ 0x5ca1ab1eULL).split(static_cast<std::uint64_t>(i));

        std::vector<std::pair<double, bool>> probe_ts; // (t, located-by-root-finding)
        for (int j = 0; j < spec.samples_per_curve; ++j)
            probe_ts.emplace_back(rng.uniform(spec.t_min, spec.t_max), false);
        if (rdc.factor_order > 0) probe_ts.emplace_back(rdc.factor_root, true);

        // roots of the chain determinant
        const auto det_at = [&](double t) {
            const CovariantChain chain =
                covariant_chain(conn, curve_jets(rdc.curve.gamma, t, opts.jet_order), spec.dim);
            Eigen::MatrixXd A(spec.dim, spec.dim);
            for (int k = 0; k < spec.dim; ++k) A.col(k) = chain.D[static_cast<std::size_t>(k)];
            return A.determinant();
        };
        const int n_scan = 41;
        double prev_t = spec.t_min, prev_v = det_at(prev_t);
        for (int g = 1; g < n_scan; ++g) {
            const double t = spec.t_min + (spec.t_max - spec.t_min) * g / (n_scan - 1);
            const double v = det_at(t);
            if (prev_v != 0.0 && v != 0.0 && (prev_v < 0.0) != (v < 0.0)) {
                double a = prev_t, b = t, fa = prev_v;
                while (b - a > 1e-12) {
                    const double mid = 0.5 * (a + b);
                    const double fm = det_at(mid);
                    if ((fa < 0.0) != (fm < 0.0)) b = mid;
                    else { a = mid; fa = fm; }
                }
                const double root = 0.5 * (a + b);
                // The planted c-root is a triple root of the determinant, so
                // the bisection can stop on sign noise nearby; keep one probe.
                bool fresh = true;
                for (const auto& [existing, located] : probe_ts)
                    if (located && std::abs(existing - root) < 1e-4 * (spec.t_max - spec.t_min))
                        fresh = false;
                if (fresh) probe_ts.emplace_back(root, true);
            }
            prev_t = t;
            prev_v = v;
        }

        for (const auto& [t, at_root] : probe_ts) {
            SampleRecord rec;
            rec.curve_index = i;
            rec.t = t;
            rec.at_root = at_root;
            rec.type = curve_nabla_type(conn, rdc.curve.gamma, t, k_max, opts.jet_order,
                                        opts.rank_rel_tol);
            rec.verdict = classify_point(conn, rdc.curve.gamma, t, opts).verdict;
            rec.rank_margin = rank_margin(conn, rdc.curve.gamma, t, rec.type, opts);

            if (rec.type.determinate()) {
                ++hist.counts[rec.type.as_ints()];
                if (hist.worst_margin == 0.0 || rec.rank_margin < hist.worst_margin)
                    hist.worst_margin = rec.rank_margin;
                if (rec.rank_margin < 10.0) ++hist.near_degenerate;
            } else {
                ++hist.undetermined;
            }
            if (rec.verdict == SingularityClass::NonGeneric) ++hist.nongeneric_class;
            hist.samples.push_back(std::move(rec));
        }
    }
    return hist;
}

} // namespace tansurf
