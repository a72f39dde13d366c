#ifndef CURVEDIFF_AFFINE_HPP
#define CURVEDIFF_AFFINE_HPP

#include "curvediff/geometry.hpp"

namespace curvediff {

// The special-affine cubic differential (x'y'' - x''y') dt^3 of a curve.
struct AffineCubic {
    KDifferential diff;
    PlaneCurve source;
};

// Vanishes identically exactly for straight lines, which is an error here.
AffineCubic affine_cubic_diff(const PlaneCurve& c);

// Exactness of the cubic differential; Exact means the affine involutes
// (and the affine arc-length integral) are algebraic.
RectificationVerdict affine_rectify(const PlaneCurve& c);

// Cubic differential R''(t) dt^3 of the graph x = t, y = R(t).
AffineCubic graph_cubic(const QRatFunc& r);

} // namespace curvediff

#endif
