#include "curvediff/integration.hpp"

#include <stdexcept>

namespace curvediff {

RadicandDecomposition decompose_radicand(const QRatFunc& h, int k) {
    if (h.is_zero()) throw std::invalid_argument("decompose_radicand: zero input");
    if (k < 1) throw std::invalid_argument("decompose_radicand: k must be positive");
    RadicandDecomposition out;
    out.c = h.num().lc() / h.den().lc();
    out.a = QRatFunc(1);
    out.cpoly = QPoly(1);
    auto absorb = [&](const QPoly& p, int sign) {
        auto dec = squarefree_decompose(p);
        for (const auto& part : dec.parts) {
            int e = sign * part.multiplicity;
            int r = ((e % k) + k) % k;
            int s = (e - r) / k;
            if (r > 0) out.cpoly *= part.factor.pow(r);
            if (s != 0) out.a *= QRatFunc(part.factor).pow(s);
        }
    };
    absorb(h.num(), +1);
    absorb(h.den(), -1);
    return out;
}

AnsatzOutcome solve_radical_ansatz_detailed(const QRatFunc& a, const QPoly& cpoly, int k) {
    if (a.is_zero()) throw std::invalid_argument("ansatz: zero A");
    if (cpoly.is_constant()) throw std::invalid_argument("ansatz: constant C");
    if (!cpoly.is_monic()) throw std::invalid_argument("ansatz: C must be monic");

    const QPoly& n = a.num();
    const QPoly& d = a.den();
    const QPoly dp = d.derivative();
    const QPoly cp = cpoly.derivative();
    const int ubound = n.degree() + d.degree() + 2;
    const Rat kk(k);

    // k(u'd - ud')C + u d C' = k n C d, unknown u of degree <= ubound
    QPoly rhs_poly = QPoly(kk) * n * cpoly * d;
    std::vector<QPoly> cols;
    cols.reserve(ubound + 1);
    int rows = rhs_poly.degree() + 1;
    for (int j = 0; j <= ubound; ++j) {
        QPoly tj = QPoly::t().pow(j);
        QPoly col = QPoly(kk) * (tj.derivative() * d - tj * dp) * cpoly + tj * d * cp;
        rows = std::max(rows, col.degree() + 1);
        cols.push_back(col);
    }
    std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(cols.size(), Rat(0)));
    std::vector<Rat> rhs(rows, Rat(0));
    for (size_t j = 0; j < cols.size(); ++j)
        for (int r = 0; r <= cols[j].degree(); ++r) m[r][j] = cols[j].coeff(r);
    for (int r = 0; r <= rhs_poly.degree(); ++r) rhs[r] = rhs_poly.coeff(r);

    AnsatzOutcome out;
    out.rows = rows;
    out.cols = static_cast<int>(cols.size());
    auto sol = solve_linear_system(std::move(m), std::move(rhs));
    out.kernel_dim = sol.kernel_dim;
    if (!sol.solvable) return out;
    QRatFunc p(QPoly::from_coeffs(std::move(sol.x)), d);
    // defensive: the solution must satisfy the exactness equation itself
    QRatFunc lhs = p.derivative() * QRatFunc(cpoly) + p * QRatFunc(cp) / QRatFunc(k);
    if (lhs != a * QRatFunc(cpoly)) throw std::logic_error("ansatz: spurious solution");
    out.p = p;
    return out;
}

std::optional<QRatFunc> solve_radical_ansatz(const QRatFunc& a, const QPoly& cpoly, int k) {
    return solve_radical_ansatz_detailed(a, cpoly, k).p;
}

RectificationVerdict rectify(const KDifferential& d) {
    const int k = d.k;
    RadicandDecomposition dec = decompose_radicand(d.coeff, k);
    const Rat kpow = [&] {
        Rat r(1);
        for (int i = 0; i < k; ++i) r *= Rat(k);
        return r;
    }();
    auto make_exact = [&](const QRatFunc& p) {
        ExactVerdict e;
        e.primitive = RadicalPrimitive{p, dec.cpoly, k, dec.c};
        e.f = QRatFunc(QPoly(dec.c)) * p.pow(k) * QRatFunc(dec.cpoly) / QRatFunc(QPoly(kpow));
        return RectificationVerdict{e};
    };
    if (dec.cpoly.is_constant()) {
        HermiteResult<Rat> her = hermite_reduce(dec.a);
        if (her.remainder.is_zero()) return make_exact(her.rational_part);
        NotExactVerdict v;
        v.witness = ResidueObstruction{her.remainder.den(), her.remainder};
        return RectificationVerdict{v};
    }
    AnsatzOutcome outcome = solve_radical_ansatz_detailed(dec.a, dec.cpoly, k);
    if (outcome.p) return make_exact(*outcome.p);
    NotExactVerdict v;
    v.witness = AnsatzInsolvable{outcome.rows, outcome.cols};
    return RectificationVerdict{v};
}

KDifferential build_from_f(const QRatFunc& f, int k) {
    if (f.is_constant()) throw std::invalid_argument("build_from_f: constant f");
    QRatFunc dlog = f.derivative() / f;
    return KDifferential(k, f * dlog.pow(k));
}

} // namespace curvediff
