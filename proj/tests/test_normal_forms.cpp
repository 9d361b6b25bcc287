#include <doctest.h>

#include "tansurf/expr.hpp"
#include "tansurf/normal_forms.hpp"

using namespace tansurf;

TEST_CASE("germ evaluation at hand-computed points") {
    CHECK(germ_eval(GermKind::CuspidalEdge, 3, 1, 1).isApprox(Eigen::Vector3d(2, 3, 4)));
    CHECK(germ_eval(GermKind::Swallowtail, 3, 1, 1).isApprox(Eigen::Vector3d(2, 2.5, 3)));
    Eigen::Vector4d osw;
    osw << 2, 2.5, 3, 3.5;
    CHECK(germ_eval(GermKind::OpenSwallowtail, 4, 1, 1).isApprox(osw));
    CHECK(germ_eval(GermKind::FoldedUmbrella, 3, 1, 1).isApprox(Eigen::Vector3d(2, 3, 5)));
    // Whitney cusp (u, t) -> (u, t^3 + u t) with (s, t) = (u, t)
    CHECK(germ_eval(GermKind::WhitneyCusp, 2, 2, 3).isApprox(Eigen::Vector2d(3, 14)));
    // higher ambient dimensions pad with zeros
    const Eigen::VectorXd padded = germ_eval(GermKind::CuspidalEdge, 5, 1, 1);
    CHECK(padded[3] == 0.0);
    CHECK(padded[4] == 0.0);
}

TEST_CASE("dimension constraints are enforced") {
    CHECK_THROWS_AS(germ_eval(GermKind::FoldedUmbrella, 4, 0, 0), ValidationError);
    CHECK_THROWS_AS(germ_eval(GermKind::OpenSwallowtail, 3, 0, 0), ValidationError);
    CHECK_THROWS_AS(germ_eval(GermKind::CuspidalEdge, 2, 0, 0), ValidationError);
    CHECK_THROWS_AS(model_curve(GermKind::WhitneyCusp, 2), ValidationError);
}

TEST_CASE("kind names round-trip through strings") {
    for (GermKind kind : {GermKind::CuspidalEdge, GermKind::FoldedUmbrella, GermKind::Swallowtail,
                          GermKind::OpenSwallowtail, GermKind::WhitneyCusp})
        CHECK(germ_kind_from_string(to_string(kind)) == kind);
    CHECK_THROWS_AS(germ_kind_from_string("lips"), ValidationError);
}

// For these models the tangent surface has the closed form
// f(t, s) = gamma(t) + s u(t), so the germ must equal it identically.
TEST_CASE("model curve plus ruling reproduces the germ") {
    const struct {
        GermKind kind;
        int m;
    } cases[] = {{GermKind::CuspidalEdge, 3},
                 {GermKind::FoldedUmbrella, 3},
                 {GermKind::Swallowtail, 3},
                 {GermKind::OpenSwallowtail, 4}};
    for (const auto& c : cases) {
        const DirectedCurve curve = model_curve(c.kind, c.m);
        REQUIRE(curve.has_frame());
        REQUIRE(curve.has_factor());
        for (double t : {-1.0, -0.3, 0.0, 0.7, 1.0})
            for (double s : {-1.0, 0.0, 0.5}) {
                Eigen::VectorXd f(c.m);
                for (int i = 0; i < c.m; ++i)
                    f[i] = eval_scalar(curve.gamma[static_cast<std::size_t>(i)], {t}) +
                           s * eval_scalar(curve.frame[static_cast<std::size_t>(i)], {t});
                CHECK((f - germ_eval(c.kind, c.m, t, s)).lpNorm<Eigen::Infinity>() < 1e-14);
            }
    }
}

TEST_CASE("model factors vanish exactly at the degenerate parameter") {
    const DirectedCurve sw = model_curve(GermKind::Swallowtail, 3);
    CHECK(eval_scalar(sw.factor, {0.0}) == 0.0);
    CHECK(eval_scalar(sw.factor, {0.5}) == doctest::Approx(1.0));
    const DirectedCurve ce = model_curve(GermKind::CuspidalEdge, 3);
    CHECK(eval_scalar(ce.factor, {0.37}) == 1.0);
}
