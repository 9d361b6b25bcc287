#include "tansurf/presets.hpp"

#include <cstdio>

#include "tansurf/rng.hpp"

namespace tansurf {

ChristoffelField preset_flat(int dim) {
    return ChristoffelField(dim);
}

ChristoffelField preset_hyperbolic_halfspace() {
    ChristoffelField conn(3);
    const auto& v = conn.variables();
    const auto e = [&](const std::string& s) { return parse_expr(s, v); };
    // conformal factor -1/z on mixed indices, +1/z on the z-row
    conn.set(0, 0, 2, e("-1/x3"));
    conn.set(0, 2, 0, e("-1/x3"));
    conn.set(1, 1, 2, e("-1/x3"));
    conn.set(1, 2, 1, e("-1/x3"));
    conn.set(2, 2, 2, e("-1/x3"));
    conn.set(2, 0, 0, e("1/x3"));
    conn.set(2, 1, 1, e("1/x3"));
    conn.mark_torsion_free(true);
    return conn;
}

ChristoffelField preset_sphere_stereographic() {
    ChristoffelField conn(3);
    const auto& v = conn.variables();
    const std::string r2 = "(1+x1^2+x2^2+x3^2)";
    // Gamma^l_{mu,nu} = -(2/(1+r^2)) (d^l_mu x_nu + d^l_nu x_mu - d_{mu,nu} x_l)
    for (int l = 0; l < 3; ++l)
        for (int mu = 0; mu < 3; ++mu)
            for (int nu = 0; nu < 3; ++nu) {
                std::string terms;
                if (l == mu) terms += "x" + std::to_string(nu + 1);
                if (l == nu) terms += (terms.empty() ? "" : "+") + std::string("x") +
                                      std::to_string(mu + 1);
                if (mu == nu)
                    terms += (terms.empty() ? "-" : "-") + std::string("x") + std::to_string(l + 1);
                if (terms.empty()) continue;
                conn.set(l, mu, nu, parse_expr("-2*(" + terms + ")/" + r2, v));
            }
    conn.mark_torsion_free(true);
    return conn;
}

ChristoffelField preset_random_poly(int dim, std::uint64_t seed, double amplitude, int degree) {
    ChristoffelField conn(dim);
    const auto& vars = conn.variables();
    SplitMix64 rng(seed);
    char buf[64];
    for (int l = 0; l < dim; ++l)
        for (int mu = 0; mu < dim; ++mu)
            for (int nu = 0; nu < dim; ++nu) {
                std::string src;
                std::snprintf(buf, sizeof buf, "%.17g", rng.uniform(-amplitude, amplitude));
                src += "(" + std::string(buf) + ")";
                for (int d = 0; d < degree; ++d) {
                    const int var = static_cast<int>(rng.next() % static_cast<std::uint64_t>(dim));
                    std::snprintf(buf, sizeof buf, "%.17g", rng.uniform(-amplitude, amplitude));
                    src += "+(" + std::string(buf) + ")*x" + std::to_string(var + 1);
                    if (d == 1) src += "^2";
                }
                conn.set(l, mu, nu, parse_expr(src, vars));
            }
    return conn;
}

ChristoffelField preset_by_name(const std::string& name, int dim, std::uint64_t seed,
                                double amplitude) {
    if (name == "flat") return preset_flat(dim);
    if (name == "hyperbolic-halfspace") {
        if (dim != 3) throw ValidationError("hyperbolic-halfspace preset fixes m = 3");
        return preset_hyperbolic_halfspace();
    }
    if (name == "sphere-stereographic") {
        if (dim != 3) throw ValidationError("sphere-stereographic preset fixes m = 3");
        return preset_sphere_stereographic();
    }
    if (name == "random-poly") return preset_random_poly(dim, seed, amplitude);
    throw ValidationError("unknown connection preset '" + name + "'");
}

} // namespace tansurf
