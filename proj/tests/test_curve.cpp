#include <doctest.h>

#include <cmath>

#include "tansurf/curve.hpp"
#include "tansurf/presets.hpp"
#include "tansurf/rng.hpp"

using namespace tansurf;

namespace {
const std::vector<std::string> T{"t"};

std::vector<Expr> parse_curve(const std::vector<std::string>& sources) {
    std::vector<Expr> out;
    for (const auto& s : sources) out.push_back(parse_expr(s, T));
    return out;
}

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}
} // namespace

TEST_CASE("vanishing_order reads the first non-negligible coefficient") {
    CHECK(vanishing_order(Jet(0.0, {0.0, 0.0, 3.0, 1.0})) == 2);
    CHECK(vanishing_order(Jet(0.0, {5.0, 1.0})) == 0);
    CHECK(!vanishing_order(Jet(0.0, {1e-15, 1e-14, 0.0})).has_value());
    CHECK(vanishing_order(Jet(0.0, {1e-15, 1e-6, 0.0})) == 1);
}

TEST_CASE("coefficient-shift frame of the swallowtail curve") {
    const auto gamma = parse_curve({"t^2", "t^3", "t^4"});
    const JetVec gj = curve_jets(gamma, 0.0, 8);
    const JetVec u = frame_from_degenerate(gj, 2);
    // u = gamma' / (2t) = (1, (3/2) t, 2 t^2)
    CHECK(u[0].coeff(0) == doctest::Approx(1.0));
    CHECK(u[1].coeff(1) == doctest::Approx(1.5));
    CHECK(u[2].coeff(2) == doctest::Approx(2.0));
    CHECK(u[0].coeff(1) == doctest::Approx(0.0));

    CHECK_THROWS_AS(frame_from_degenerate(gj, 3), DegeneracyMismatch);
    const auto immersed = parse_curve({"t", "t^2", "t^3"});
    CHECK_THROWS_AS(frame_from_degenerate(curve_jets(immersed, 0.0, 8), 2), DegeneracyMismatch);
}

// (nabla^l u)(t0) = (l! / (k (k+l-1)!)) (nabla^{k+l} gamma)(t0) for a
// degeneracy of order k, on flat and curved connections alike.
TEST_CASE("frame derivatives are fixed multiples of the curve chain") {
    for (int k : {2, 3}) {
        const std::string tk = "t^" + std::to_string(k);
        const std::string tk1 = "t^" + std::to_string(k + 1);
        const std::string tk2 = "t^" + std::to_string(k + 2);
        const auto flat_gamma = parse_curve({tk, tk1, tk2});
        const auto hyp_gamma = parse_curve({tk, tk1, "1+" + tk2 + "+t^" + std::to_string(k + 3)});

        const struct {
            ChristoffelField conn;
            std::vector<Expr> gamma;
        } cases[] = {{preset_flat(3), flat_gamma}, {preset_hyperbolic_halfspace(), hyp_gamma}};

        for (const auto& c : cases) {
            const JetVec gj = curve_jets(c.gamma, 0.0, 12);
            const JetVec u = frame_from_degenerate(gj, k);
            const auto u_chain = covariant_value_chain(u, gj, c.conn, 4);
            const CovariantChain g_chain = covariant_chain(c.conn, gj, k + 4);
            for (int l = 0; l <= 3; ++l) {
                const double factor = factorial(l) / (k * factorial(k + l - 1));
                const Eigen::VectorXd expected =
                    factor * g_chain.D[static_cast<std::size_t>(k + l - 1)];
                const double scale = std::max(1.0, expected.norm());
                CHECK((u_chain[static_cast<std::size_t>(l)] - expected).norm() / scale < 1e-6);
            }
        }
    }
}

TEST_CASE("nabla types of the canonical flat curves") {
    const ChristoffelField flat = preset_flat(3);
    const auto type_of = [&](const std::vector<std::string>& src) {
        return curve_nabla_type(flat, parse_curve(src), 0.0, 5, 8).as_ints();
    };
    CHECK(type_of({"t", "t^2", "t^3"}) == std::vector<int>{1, 2, 3});
    CHECK(type_of({"t", "t^2", "t^4"}) == std::vector<int>{1, 2, 4});
    CHECK(type_of({"t^2", "t^3", "t^4"}) == std::vector<int>{2, 3, 4});
}

// Multiplying the direction field by c with a root of order l at t0 shifts
// every entry of the nabla type by l, as integer sequences.
TEST_CASE("type shift law under factor multiplication") {
    SplitMix64 rng(31);
    const std::vector<std::string> tvar{"t"};
    for (int trial = 0; trial < 30; ++trial) {
        const ChristoffelField conn =
            trial % 2 ? preset_random_poly(3, 100 + trial, 0.3) : preset_flat(3);
        // immersed base curve with bounded coordinates
        std::vector<Expr> gamma;
        for (int i = 0; i < 3; ++i) {
            std::vector<double> coeffs(5);
            for (auto& x : coeffs) x = rng.uniform(-1.0, 1.0);
            gamma.push_back(poly_expr(coeffs, "t", tvar));
        }
        const double t0 = rng.uniform(-0.5, 0.5);
        const JetVec gj = curve_jets(gamma, t0, 12);

        JetVec u;
        for (int i = 0; i < 3; ++i) {
            std::vector<double> coeffs(12, 0.0); // degree-4 data, room for 8 derivatives
            for (int j = 0; j < 5; ++j) coeffs[static_cast<std::size_t>(j)] = rng.uniform(-1.0, 1.0);
            coeffs[0] += (coeffs[0] < 0 ? -1.0 : 1.0); // keep u(t0) away from 0
            u.push_back(Jet(t0, std::move(coeffs)));
        }
        for (int l = 0; l <= 2; ++l) {
            const NablaType base = field_nabla_type(u, gj, conn, 8, 1e-9);
            if (!base.determinate()) continue;
            Jet c = Jet::constant(12, t0, rng.uniform(0.5, 1.5));
            for (int j = 0; j < l; ++j) c = c * (Jet::variable(12, t0) - t0);
            JetVec cu;
            for (const auto& ui : u) cu.push_back(truncated(c, ui.order()) * ui);
            const NablaType shifted = field_nabla_type(cu, gj, conn, 8, 1e-9);
            REQUIRE(shifted.determinate());
            const auto a = base.as_ints();
            const auto b = shifted.as_ints();
            for (std::size_t i = 0; i < a.size(); ++i) CHECK(b[i] == a[i] + l);
        }
    }
}

TEST_CASE("local_frame: explicit, derived, and detected variants") {
    const ChristoffelField flat = preset_flat(3);

    SUBCASE("explicit frame and factor are taken verbatim") {
        DirectedCurve curve;
        curve.dim = 3;
        curve.gamma = parse_curve({"t^2", "t^3", "t^4"});
        curve.frame = parse_curve({"1", "1.5*t", "2*t^2"});
        curve.factor = parse_expr("2*t", T);
        const LocalFrame lf = local_frame(flat, curve, 0.0, 8);
        CHECK(lf.degeneracy_k == 2);
        CHECK(lf.c.coeff(1) == doctest::Approx(2.0));
        CHECK(lf.u[0].coeff(0) == doctest::Approx(1.0));
    }
    SUBCASE("factor is derived from <gamma', u> / <u, u> when omitted") {
        DirectedCurve curve;
        curve.dim = 3;
        curve.gamma = parse_curve({"t^2", "t^3", "t^4"});
        curve.frame = parse_curve({"1", "1.5*t", "2*t^2"});
        const LocalFrame lf = local_frame(flat, curve, 0.0, 8);
        CHECK(lf.degeneracy_k == 2);
        CHECK(lf.c.coeff(0) == doctest::Approx(0.0));
        CHECK(lf.c.coeff(1) == doctest::Approx(2.0));
    }
    SUBCASE("rescaling the frame rescales the derived factor inversely") {
        DirectedCurve curve;
        curve.dim = 3;
        curve.gamma = parse_curve({"t^2", "t^3", "t^4"});
        curve.frame = parse_curve({"2", "3*t", "4*t^2"});
        const LocalFrame lf = local_frame(flat, curve, 0.0, 8);
        CHECK(lf.c.coeff(1) == doctest::Approx(1.0)); // c = t instead of 2t
    }
    SUBCASE("degeneracy is detected without a declared frame") {
        DirectedCurve curve;
        curve.dim = 3;
        curve.gamma = parse_curve({"t^2", "t^3", "t^4"});
        const LocalFrame lf = local_frame(flat, curve, 0.0, 8);
        CHECK(lf.degeneracy_k == 2);
        CHECK(lf.u[1].coeff(1) == doctest::Approx(1.5));
    }
    SUBCASE("immersed points use the velocity directly") {
        DirectedCurve curve;
        curve.dim = 3;
        curve.gamma = parse_curve({"t", "t^2", "t^3"});
        const LocalFrame lf = local_frame(flat, curve, 0.3, 8);
        CHECK(lf.degeneracy_k == 1);
        CHECK(lf.u[0].coeff(0) == doctest::Approx(1.0));
        CHECK(lf.c.coeff(0) == doctest::Approx(1.0));
    }
}
