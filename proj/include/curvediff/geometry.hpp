#ifndef CURVEDIFF_GEOMETRY_HPP
#define CURVEDIFF_GEOMETRY_HPP

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "curvediff/differential.hpp"
#include "curvediff/errors.hpp"
#include "curvediff/integration.hpp"
#include "curvediff/radical.hpp"

namespace curvediff {

// Real rational plane curve t -> (x(t), y(t)).
struct PlaneCurve {
    QRatFunc x;
    QRatFunc y;
    std::string name;

    PlaneCurve(QRatFunc x_, QRatFunc y_, std::string name_ = "")
        : x(std::move(x_)), y(std::move(y_)), name(std::move(name_)) {
        if (x.is_constant() && y.is_constant())
            throw DegenerateCurveError("constant curve");
    }
};

struct Point2 {
    Rat x;
    Rat y;
    friend bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
};

// q = dz dw with dz = (x' + i y') dt and dw its coefficient-conjugate.
struct IsotropicSplit {
    GKDifferential dz;
    GKDifferential dw;
};

// Curve with coordinates in a shared quadratic radical extension of Q(t).
struct RadicalCurve {
    RadicalElement x;
    RadicalElement y;
    std::string name;
};

// The Euclidean arc-length quadratic differential (x'^2 + y'^2) dt^2.
KDifferential arc_length_qdiff(const PlaneCurve& c);

IsotropicSplit isotropic_split(const PlaneCurve& c);

// Conjugation symmetry and parity of the divisor of q along the real locus.
struct RealDivisorEntry {
    QPoly factor;            // ignored for the infinity entry
    bool at_infinity = false;
    int order = 0;
    int real_root_count = 0; // 1 for the infinity entry
    bool parity_ok = false;
    std::optional<int> dz_order; // verified where the real point is rational
    bool dz_order_ok = true;
};

struct RealDivisorReport {
    bool pass = true;
    std::vector<RealDivisorEntry> entries;
    std::string detail; // offending factor on failure
};

RealDivisorReport real_divisor_check(const PlaneCurve& c);

// Envelope of the normals; a circle degenerates to its center point.
std::variant<PlaneCurve, Point2> evolute(const PlaneCurve& c);

// Involute r - (S + c0) T with arc length S and unit tangent T, written in
// the radical extension attached to the arc-length primitive.
RadicalCurve involutes(const PlaneCurve& c, const Rat& c0);

// Same evolute formula, evaluated in the radical extension ring.
RadicalCurve evolute_of_radical(const RadicalCurve& rc);

RadicalCurve lift_to_radical(const PlaneCurve& c);

struct LineVerdict {
    Rat a, b, c; // a x + b y = c
};
struct CircleVerdict {
    Point2 center;
    Rat radius2;
};
struct NeitherVerdict {};
using Classification = std::variant<LineVerdict, CircleVerdict, NeitherVerdict>;

// Line exactly when the curvature wedge x'y'' - x''y' vanishes; circle
// exactly when x^2 + y^2 - 2ux - 2vy + e = 0 has a rational solution with
// positive radius.
Classification classify_line_circle(const PlaneCurve& c);

// One realization of a quadratic differential as an arc-length form.
// similarity_ratio2 = 1 means q is matched exactly; otherwise the curve's
// arc-length differential is q divided by that positive factor (the scaling
// cannot be realized by a rational rotation).
struct Realization {
    PlaneCurve curve;
    Rat similarity_ratio2;
    GRatFunc z; // the complex coordinate x + i y
};

// Search for plane curves with arc-length differential q by enumerating
// splittings div(q) = D + conj(D) within the given bound of the symmetric
// splitting, keeping those whose 1-form candidate has exact integral.
// Candidate divisors are supported on div(q); cancelling zero/pole pairs at
// points outside the support are not searched.
std::vector<Realization> realize_genus0(const KDifferential& q, int bound);

struct Motion {
    GaussRat rotation; // unit modulus
    GaussRat offset;
    friend bool operator==(const Motion& a, const Motion& b) {
        return a.rotation == b.rotation && a.offset == b.offset;
    }
};

// Direct Euclidean motion z2 = rotation * z1 + offset matching the two
// parametrizations, when one exists.
std::optional<Motion> euclidean_equivalent(const PlaneCurve& c1, const PlaneCurve& c2);

} // namespace curvediff

#endif
