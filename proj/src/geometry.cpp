#include "curvediff/geometry.hpp"

#include <sstream>

#include "curvediff/factor.hpp"
#include "curvediff/linsolve.hpp"

namespace curvediff {

KDifferential arc_length_qdiff(const PlaneCurve& c) {
    QRatFunc h = c.x.derivative() * c.x.derivative() + c.y.derivative() * c.y.derivative();
    if (h.is_zero()) throw IsotropicLineError();
    return KDifferential(2, h, c.name);
}

IsotropicSplit isotropic_split(const PlaneCurve& c) {
    GRatFunc xp = lift_to_gauss(c.x.derivative());
    GRatFunc yp = lift_to_gauss(c.y.derivative());
    GRatFunc i{GPoly(gauss_i())};
    GRatFunc dz = xp + i * yp;
    GRatFunc dw = xp - i * yp;
    if (dz.is_zero() || dw.is_zero()) throw IsotropicLineError();
    return {GKDifferential(1, dz, c.name), GKDifferential(1, dw, c.name)};
}

namespace {

// Order of the 1-form F dt at t = infinity.
int one_form_infinity_order(const GRatFunc& f) {
    return (f.den().degree() - f.num().degree()) - 2;
}

} // namespace

RealDivisorReport real_divisor_check(const PlaneCurve& c) {
    RealDivisorReport report;
    KDifferential q = arc_length_qdiff(c);
    Divisor div = divisor_of(q);
    GRatFunc dz = isotropic_split(c).dz.coeff;

    auto fail = [&](const std::string& what) {
        report.pass = false;
        if (report.detail.empty()) report.detail = what;
    };

    for (const auto& [factor, order] : div.finite) {
        RealDivisorEntry e;
        e.factor = factor;
        e.order = order;
        e.real_root_count = real_root_count(factor);
        e.parity_ok = (e.real_root_count == 0) || (order % 2 == 0);
        if (!e.parity_ok) fail("odd order at real zero of " + to_string(factor));
        if (e.real_root_count > 0 && order % 2 == 0) {
            // verify order(q) = 2 * order(dz) at the rational real points
            for (const Rat& root : rational_roots(factor)) {
                GPoly lin{GaussRat(Rat(-root)), GaussRat(1)};
                int dz_ord = order_at(dz, lin);
                e.dz_order = dz_ord;
                if (2 * dz_ord != order) {
                    e.dz_order_ok = false;
                    fail("order of q is not twice the order of dz at t = " + to_string(root));
                }
            }
        }
        report.entries.push_back(e);
    }

    RealDivisorEntry inf;
    inf.at_infinity = true;
    inf.order = div.infinity_order;
    inf.real_root_count = 1;
    inf.parity_ok = (div.infinity_order % 2 == 0);
    if (!inf.parity_ok) fail("odd order at infinity");
    if (inf.parity_ok) {
        int dz_ord = one_form_infinity_order(dz);
        inf.dz_order = dz_ord;
        if (2 * dz_ord != div.infinity_order) {
            inf.dz_order_ok = false;
            fail("order of q is not twice the order of dz at infinity");
        }
    }
    report.entries.push_back(inf);
    return report;
}

namespace {

struct EvoluteParts {
    QRatFunc ex;
    QRatFunc ey;
    bool degenerate_line = false;
};

EvoluteParts evolute_parts(const QRatFunc& x, const QRatFunc& y) {
    QRatFunc xp = x.derivative(), yp = y.derivative();
    QRatFunc xpp = xp.derivative(), ypp = yp.derivative();
    QRatFunc wedge = xp * ypp - xpp * yp;
    if (wedge.is_zero()) return {QRatFunc(), QRatFunc(), true};
    QRatFunc speed2 = xp * xp + yp * yp;
    QRatFunc rho = speed2 / wedge;
    return {x - yp * rho, y + xp * rho, false};
}

} // namespace

std::variant<PlaneCurve, Point2> evolute(const PlaneCurve& c) {
    EvoluteParts e = evolute_parts(c.x, c.y);
    if (e.degenerate_line) throw LineHasNoEvoluteError();
    if (e.ex.is_constant() && e.ey.is_constant())
        return Point2{e.ex.constant_value(), e.ey.constant_value()};
    return PlaneCurve(e.ex, e.ey, c.name.empty() ? "" : c.name + "_evolute");
}

RadicalCurve lift_to_radical(const PlaneCurve& c) {
    return {RadicalElement(c.x, 2), RadicalElement(c.y, 2), c.name};
}

RadicalCurve involutes(const PlaneCurve& c, const Rat& c0) {
    KDifferential q = arc_length_qdiff(c);
    RectificationVerdict verdict = rectify(q);
    if (!verdict.is_exact()) {
        std::ostringstream os;
        if (std::holds_alternative<ResidueObstruction>(verdict.not_exact().witness))
            os << "nonzero residue at "
               << std::get<ResidueObstruction>(verdict.not_exact().witness).factor;
        else
            os << "no algebraic arc-length primitive";
        throw NotRectifiableError(os.str());
    }
    RadicandDecomposition dec = decompose_radicand(q.coeff, 2);
    const RadicalPrimitive& prim = verdict.exact().primitive;
    // I = r - (g + c0) T with g = p R, T = r' / (A R), R = (c C)^{1/2}:
    // the R^2 in g T collapses, leaving  r - p r'/A - (c0 r'/(A c C)) R.
    QRatFunc cc = QRatFunc(QPoly(dec.c)) * QRatFunc(dec.cpoly);
    auto component = [&](const QRatFunc& coord) {
        QRatFunc d = coord.derivative();
        QRatFunc rational = coord - prim.p * d / dec.a;
        QRatFunc root = -QRatFunc(QPoly(c0)) * d / (dec.a * cc);
        return RadicalElement({rational, root}, dec.cpoly, dec.c, 2);
    };
    std::string name = c.name.empty() ? "involute" : c.name + "_involute";
    return {component(c.x), component(c.y), name};
}

RadicalCurve evolute_of_radical(const RadicalCurve& rc) {
    RadicalElement xp = rc.x.derivative(), yp = rc.y.derivative();
    RadicalElement xpp = xp.derivative(), ypp = yp.derivative();
    RadicalElement wedge = xp * ypp - xpp * yp;
    if (wedge.is_zero())
        throw DegenerateCurveError("evolute of a radical curve with zero curvature wedge");
    RadicalElement rho = (xp * xp + yp * yp) * wedge.inverse();
    std::string name = rc.name.empty() ? "" : rc.name + "_evolute";
    return {rc.x - yp * rho, rc.y + xp * rho, name};
}

Classification classify_line_circle(const PlaneCurve& c) {
    QRatFunc xp = c.x.derivative(), yp = c.y.derivative();
    QRatFunc wedge = xp * yp.derivative() - xp.derivative() * yp;
    if (wedge.is_zero()) {
        if (xp.is_zero()) return LineVerdict{Rat(1), Rat(0), c.x.constant_value()};
        if (yp.is_zero()) return LineVerdict{Rat(0), Rat(1), c.y.constant_value()};
        QRatFunc ratio = xp / yp;
        QRatFunc rest = c.x - ratio * c.y;
        return LineVerdict{Rat(1), -ratio.constant_value(), rest.constant_value()};
    }
    // x^2 + y^2 - 2ux - 2vy + e = 0 is linear in (u, v, e)
    QRatFunc p = c.x * c.x + c.y * c.y;
    QPoly l = poly_lcm(p.den(), poly_lcm(c.x.den(), c.y.den()));
    QPoly np = p.num() * (l / p.den());
    QPoly nx = c.x.num() * (l / c.x.den());
    QPoly ny = c.y.num() * (l / c.y.den());
    int rows = std::max({np.degree(), nx.degree(), ny.degree(), l.degree()}) + 1;
    std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(3, Rat(0)));
    std::vector<Rat> rhs(rows, Rat(0));
    for (int r = 0; r < rows; ++r) {
        m[r][0] = 2 * nx.coeff(r);
        m[r][1] = 2 * ny.coeff(r);
        m[r][2] = -l.coeff(r);
        rhs[r] = np.coeff(r);
    }
    auto sol = solve_linear_system(std::move(m), std::move(rhs));
    if (!sol.solvable) return NeitherVerdict{};
    Rat u = sol.x[0], v = sol.x[1], e = sol.x[2];
    Rat r2 = u * u + v * v - e;
    if (sgn(r2) <= 0) return NeitherVerdict{};
    return CircleVerdict{Point2{u, v}, r2};
}

std::optional<Motion> euclidean_equivalent(const PlaneCurve& c1, const PlaneCurve& c2) {
    GRatFunc i{GPoly(gauss_i())};
    GRatFunc z1 = lift_to_gauss(c1.x) + i * lift_to_gauss(c1.y);
    GRatFunc z2 = lift_to_gauss(c2.x) + i * lift_to_gauss(c2.y);
    GRatFunc dz1 = z1.derivative(), dz2 = z2.derivative();
    if (dz1.is_zero() || dz2.is_zero()) return std::nullopt;
    GRatFunc ratio = dz2 / dz1;
    if (!ratio.is_constant()) return std::nullopt;
    GaussRat lambda = ratio.constant_value();
    if (!(lambda.norm() == Rat(1))) return std::nullopt;
    GRatFunc offset = z2 - GRatFunc(GPoly(lambda)) * z1;
    if (!offset.is_constant()) return std::nullopt;
    return Motion{lambda, offset.constant_value()};
}

} // namespace curvediff
