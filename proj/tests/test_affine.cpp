#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curvediff/affine.hpp"
#include "test_util.hpp"

using namespace curvediff;
using testutil::Rng;

namespace {

QPoly T() { return QPoly::t(); }

PlaneCurve lemniscate() {
    QPoly t = T();
    return PlaneCurve(QRatFunc(t + t.pow(3), QPoly(1) + t.pow(4)),
                      QRatFunc(t - t.pow(3), QPoly(1) + t.pow(4)), "lemniscate");
}

PlaneCurve ellipse(long a, long b) {
    QPoly t = T();
    return PlaneCurve(QRatFunc(QPoly(Rat(2 * a)) * t, QPoly(1) + t * t),
                      QRatFunc(QPoly(Rat(b)) * (QPoly(1) - t * t), QPoly(1) + t * t), "ellipse");
}

} // namespace

TEST_CASE("affine_cubic_diff: frozen examples") {
    QPoly t = T();
    SUBCASE("lemniscate: -12t/(t^4+1)^2") {
        AffineCubic cubic = affine_cubic_diff(lemniscate());
        CHECK(cubic.diff.k == 3);
        CHECK(cubic.diff.coeff == QRatFunc(QPoly(-12) * t, (t.pow(4) + QPoly(1)).pow(2)));
        CHECK(stratum_of(cubic.diff).str() == "(1,1,-2,-2,-2,-2)");
    }
    SUBCASE("semicubic: 6t^2") {
        PlaneCurve c(QRatFunc(t * t), QRatFunc(t.pow(3)), "semicubic");
        CHECK(affine_cubic_diff(c).diff.coeff == QRatFunc(QPoly(6) * t * t));
    }
    SUBCASE("ellipse: -8ab/(1+t^2)^3") {
        CHECK(affine_cubic_diff(ellipse(2, 1)).diff.coeff ==
              QRatFunc(QPoly(-16), (QPoly(1) + t * t).pow(3)));
    }
    SUBCASE("hyperbola: ab/t^3") {
        PlaneCurve c(QRatFunc(QPoly(1) + t * t, QPoly(2) * t),
                     QRatFunc(QPoly(2) * (QPoly(1) - t * t), QPoly(2) * t), "hyperbola");
        CHECK(affine_cubic_diff(c).diff.coeff == QRatFunc(QPoly(2), t.pow(3)));
    }
    SUBCASE("line input") {
        PlaneCurve l(QRatFunc(QPoly(3) * t + QPoly(1)), QRatFunc(-t), "line");
        CHECK_THROWS_AS(affine_cubic_diff(l), ZeroCubicDifferentialError);
    }
}

TEST_CASE("affine_rectify: frozen verdicts") {
    QPoly t = T();
    SUBCASE("semicubic: exact with p = 3t/5 over radicand t^2") {
        PlaneCurve c(QRatFunc(t * t), QRatFunc(t.pow(3)), "semicubic");
        RectificationVerdict v = affine_rectify(c);
        REQUIRE(v.is_exact());
        CHECK(v.exact().primitive.p == QRatFunc(QPoly(rat(3, 5)) * t));
        CHECK(v.exact().primitive.cpoly == t * t);
        CHECK(v.exact().primitive.k == 3);
    }
    SUBCASE("parabola: constant coefficient, rational primitive") {
        PlaneCurve c(QRatFunc::t(), QRatFunc(t * t), "parabola");
        RectificationVerdict v = affine_rectify(c);
        REQUIRE(v.is_exact());
        CHECK(v.exact().primitive.p == QRatFunc::t());
        CHECK(v.exact().primitive.cpoly == QPoly(1));
        CHECK(v.exact().primitive.scalar == Rat(2));
    }
    SUBCASE("ellipse: Hermite remainder obstruction") {
        RectificationVerdict v = affine_rectify(ellipse(2, 1));
        REQUIRE(!v.is_exact());
        REQUIRE(std::holds_alternative<ResidueObstruction>(v.not_exact().witness));
        CHECK(std::get<ResidueObstruction>(v.not_exact().witness).factor == t * t + QPoly(1));
    }
}

TEST_CASE("graph_cubic") {
    QPoly t = T();
    CHECK(graph_cubic(QRatFunc(t.pow(3))).diff.coeff == QRatFunc(QPoly(6) * t));
    CHECK(graph_cubic(QRatFunc(QPoly(1), t)).diff.coeff == QRatFunc(QPoly(2), t.pow(3)));
    CHECK(graph_cubic(QRatFunc(t * t)).diff.coeff == QRatFunc(2));
    CHECK_THROWS_AS(graph_cubic(QRatFunc(QPoly(5) * t + QPoly(1))),
                    ZeroCubicDifferentialError);
}

TEST_CASE("graph_cubic agrees with affine_cubic_diff on graphs") {
    Rng rng(61);
    int done = 0;
    while (done < 50) {
        QRatFunc r = testutil::random_ratfunc(rng, 4, true);
        if (r.derivative().derivative().is_zero()) continue;
        ++done;
        PlaneCurve graph(QRatFunc::t(), r);
        CHECK(graph_cubic(r).diff.coeff == affine_cubic_diff(graph).diff.coeff);
    }
}

TEST_CASE("cubic coefficient is a special-affine invariant") {
    Rng rng(67);
    QPoly t = T();
    PlaneCurve base(QRatFunc(t * t), QRatFunc(t.pow(3)), "semicubic");
    QRatFunc reference = affine_cubic_diff(base).diff.coeff;
    for (int i = 0; i < 50; ++i) {
        Rat a = testutil::random_rat(rng), b = testutil::random_rat(rng);
        Rat c = testutil::random_rat(rng);
        if (is_zero(a)) a = Rat(1);
        // d chosen so that ad - bc = 1
        Rat d = (Rat(1) + b * c) / a;
        Rat e = testutil::random_rat(rng), f = testutil::random_rat(rng);
        QRatFunc xx = QRatFunc(QPoly(a)) * base.x + QRatFunc(QPoly(b)) * base.y +
                      QRatFunc(QPoly(e));
        QRatFunc yy = QRatFunc(QPoly(c)) * base.x + QRatFunc(QPoly(d)) * base.y +
                      QRatFunc(QPoly(f));
        CHECK(affine_cubic_diff(PlaneCurve(xx, yy)).diff.coeff == reference);
    }
}

TEST_CASE("parameter shift moves the coefficient and keeps the stratum") {
    Rng rng(71);
    PlaneCurve base = lemniscate();
    KDifferential cubic = affine_cubic_diff(base).diff;
    for (int i = 0; i < 20; ++i) {
        Rat shift = testutil::random_rat(rng);
        QRatFunc arg = QRatFunc::t() + QRatFunc(QPoly(shift));
        PlaneCurve moved(base.x.compose(arg), base.y.compose(arg));
        KDifferential moved_cubic = affine_cubic_diff(moved).diff;
        CHECK(moved_cubic.coeff == cubic.coeff.compose(arg));
        CHECK(stratum_of(moved_cubic) == stratum_of(cubic));
    }
}

TEST_CASE("affine strata sum to -6") {
    QPoly t = T();
    std::vector<PlaneCurve> curves;
    curves.push_back(lemniscate());
    curves.push_back(ellipse(2, 1));
    curves.emplace_back(QRatFunc(t * t), QRatFunc(t.pow(3)), "semicubic");
    curves.emplace_back(QRatFunc::t(), QRatFunc(t * t), "parabola");
    curves.emplace_back(QRatFunc(t * t - QPoly(1)), QRatFunc(t.pow(3) - t), "nodal_cubic");
    for (const PlaneCurve& c : curves)
        CHECK(stratum_of(affine_cubic_diff(c).diff).sum() == -6);
}

TEST_CASE("nodal cubic: computed coefficient and stratum") {
    QPoly t = T();
    PlaneCurve c(QRatFunc(t * t - QPoly(1)), QRatFunc(t.pow(3) - t), "nodal_cubic");
    AffineCubic cubic = affine_cubic_diff(c);
    CHECK(cubic.diff.coeff == QRatFunc(QPoly(6) * t * t + QPoly(2)));
    CHECK(stratum_of(cubic.diff).str() == "(1,1,-8)");
}
