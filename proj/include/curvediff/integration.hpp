#ifndef CURVEDIFF_INTEGRATION_HPP
#define CURVEDIFF_INTEGRATION_HPP

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "curvediff/differential.hpp"
#include "curvediff/linsolve.hpp"
#include "curvediff/radical.hpp"

namespace curvediff {

// h = c * A^k * C with C monic and k-power-free: every squarefree class of
// exponent e contributes e mod k (nonnegative) to C and (e - e mod k)/k to A.
struct RadicandDecomposition {
    Rat c;
    QRatFunc a;
    QPoly cpoly;

    QRatFunc expand(int k) const { return QRatFunc(QPoly(c)) * a.pow(k) * QRatFunc(cpoly); }
};

RadicandDecomposition decompose_radicand(const QRatFunc& h, int k);

// A = d/dt(rational_part) + remainder with squarefree proper remainder;
// the integral of A is rational exactly when the remainder vanishes.
template <class F>
struct HermiteResult {
    RatFunc<F> rational_part;
    RatFunc<F> remainder;
};

namespace detail {
template <class F>
Poly<F> integrate_poly(const Poly<F>& p) {
    std::vector<F> c(p.coeffs().size() + 1, F(0));
    for (int i = 0; i <= p.degree(); ++i) c[i + 1] = F(p.coeff(i) / F(i + 1));
    return Poly<F>::from_coeffs(std::move(c));
}
} // namespace detail

// Hermite reduction in the Ostrogradsky-Horowitz form: a single exact
// linear solve peels off the full derivative part.
template <class F>
HermiteResult<F> hermite_reduce(const RatFunc<F>& a) {
    HermiteResult<F> out;
    auto [quot, rem] = divmod(a.num(), a.den());
    out.rational_part = RatFunc<F>(detail::integrate_poly(quot));
    if (rem.is_zero()) return out;

    const Poly<F>& d = a.den();
    Poly<F> d2 = gcd(d, d.derivative());
    Poly<F> d1 = d / d2;
    if (d2.is_constant()) {
        out.remainder = RatFunc<F>(rem, d);
        return out;
    }
    auto [h, hrem] = divmod(d1 * d2.derivative(), d2);
    if (!hrem.is_zero()) throw std::logic_error("hermite: radical part not a divisor");

    // rem = P'*d1 - P*h + Q*d2, deg P < deg d2, deg Q < deg d1
    const int np = d2.degree();
    const int nq = d1.degree();
    const int rows = d.degree();
    std::vector<std::vector<F>> m(rows, std::vector<F>(np + nq, F(0)));
    std::vector<F> rhs(rows, F(0));
    for (int j = 0; j < np; ++j) {
        Poly<F> basis = Poly<F>::t().pow(j);
        Poly<F> col = basis.derivative() * d1 - basis * h;
        for (int r = 0; r < rows; ++r) m[r][j] = col.coeff(r);
    }
    for (int j = 0; j < nq; ++j) {
        Poly<F> col = Poly<F>::t().pow(j) * d2;
        for (int r = 0; r < rows; ++r) m[r][np + j] = col.coeff(r);
    }
    for (int r = 0; r < rows; ++r) rhs[r] = rem.coeff(r);
    auto sol = solve_linear_system(std::move(m), std::move(rhs));
    if (!sol.solvable) throw std::logic_error("hermite: reduction system insolvable");
    std::vector<F> pc(sol.x.begin(), sol.x.begin() + np);
    std::vector<F> qc(sol.x.begin() + np, sol.x.end());
    Poly<F> p = Poly<F>::from_coeffs(std::move(pc));
    Poly<F> q = Poly<F>::from_coeffs(std::move(qc));
    out.rational_part += RatFunc<F>(p, d2);
    out.remainder = RatFunc<F>(q, d1);
    return out;
}

struct AnsatzOutcome {
    std::optional<QRatFunc> p;
    int rows = 0;
    int cols = 0;
    int kernel_dim = 0;
};

// Rational solution p of p'*C + p*C'/k = A*C, the exactness equation for a
// primitive p*C^{1/k} of A*C^{1/k}. For nonconstant k-power-free C the
// kernel is trivial, so the solution is unique when it exists. The search
// space p = u/den(A), deg u <= deg num(A) + deg den(A) + 2 covers every
// possible solution: at finite points p's pole order is forced strictly
// below den(A)'s, and at infinity deg p = deg A + 1.
AnsatzOutcome solve_radical_ansatz_detailed(const QRatFunc& a, const QPoly& cpoly, int k);

std::optional<QRatFunc> solve_radical_ansatz(const QRatFunc& a, const QPoly& cpoly, int k);

// Primitive g = p * (scalar * C)^{1/k} with p' C + p C'/k = A C.
struct RadicalPrimitive {
    QRatFunc p;
    QPoly cpoly;
    int k = 2;
    Rat scalar = 1;

    RadicalElement as_element() const {
        return RadicalElement::root_multiple(p, cpoly, scalar, k);
    }
};

struct ResidueObstruction {
    QPoly factor;        // squarefree denominator carrying a nonzero residue
    QRatFunc remainder;  // the full Hermite remainder
};

struct AnsatzInsolvable {
    int rows = 0;
    int cols = 0;
};

struct ExactVerdict {
    RadicalPrimitive primitive;
    QRatFunc f; // phi = f * (df/f)^k identically
};

struct NotExactVerdict {
    std::variant<ResidueObstruction, AnsatzInsolvable> witness;
};

// Outcome of the algebraic-rectifiability decision for one differential.
struct RectificationVerdict {
    std::variant<ExactVerdict, NotExactVerdict> result;

    bool is_exact() const { return std::holds_alternative<ExactVerdict>(result); }
    const ExactVerdict& exact() const { return std::get<ExactVerdict>(result); }
    const NotExactVerdict& not_exact() const { return std::get<NotExactVerdict>(result); }
};

// Decide whether the integral of coeff^{1/k} dt is an algebraic function.
// With h = c A^k C: for constant C this happens exactly when the Hermite
// remainder of A vanishes; otherwise exactly when the radical ansatz has a
// rational solution. Any algebraic primitive of A*C^{1/k} is forced into
// the shape p*C^{1/k} by the deck action on the canonical k-cover, so an
// insolvable system certifies a transcendental integral. In the exact case
// f = g^k / k^k, which is rational, and phi = f (df/f)^k holds identically.
RectificationVerdict rectify(const KDifferential& d);

// The k-differential f*(df/f)^k of a nonconstant rational f; always exact.
KDifferential build_from_f(const QRatFunc& f, int k);

} // namespace curvediff

#endif
