#include "curvediff/affine.hpp"

namespace curvediff {

AffineCubic affine_cubic_diff(const PlaneCurve& c) {
    QRatFunc xp = c.x.derivative(), yp = c.y.derivative();
    QRatFunc wedge = xp * yp.derivative() - xp.derivative() * yp;
    if (wedge.is_zero()) throw ZeroCubicDifferentialError();
    return {KDifferential(3, wedge, c.name), c};
}

RectificationVerdict affine_rectify(const PlaneCurve& c) {
    return rectify(affine_cubic_diff(c).diff);
}

AffineCubic graph_cubic(const QRatFunc& r) {
    QRatFunc rpp = r.derivative().derivative();
    if (rpp.is_zero()) throw ZeroCubicDifferentialError();
    return {KDifferential(3, rpp), PlaneCurve(QRatFunc::t(), r, "graph")};
}

} // namespace curvediff
