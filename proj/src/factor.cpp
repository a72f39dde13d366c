#include "curvediff/factor.hpp"

#include <algorithm>

namespace curvediff {

namespace {

constexpr unsigned long kDivisorCap = 1'000'000UL;
constexpr unsigned long kNormSearchCap = 100'000'000UL;

// Positive divisors by trial division; empty when n exceeds the cap.
std::vector<mpz_class> divisors_of(const mpz_class& n_in) {
    mpz_class n = abs(n_in);
    std::vector<mpz_class> divs;
    if (n == 0 || n > kDivisorCap * mpz_class(kDivisorCap)) return divs;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            divs.push_back(d);
            mpz_class q = n / d;
            if (q != d) divs.push_back(q);
        }
        if (d > kDivisorCap) return {};
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

QPoly to_integer_poly(const QPoly& p) {
    mpz_class l = 1;
    for (const Rat& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    return p * Rat(l);
}

} // namespace

std::vector<Rat> rational_roots(const QPoly& p_in) {
    if (p_in.is_zero()) throw std::invalid_argument("rational_roots of zero polynomial");
    std::vector<Rat> roots;
    QPoly p = to_integer_poly(p_in);
    // strip roots at zero
    bool zero_root = false;
    while (!p.is_zero() && curvediff::is_zero(p.coeff(0))) {
        zero_root = true;
        p = p / QPoly::t();
    }
    if (zero_root) roots.push_back(Rat(0));
    if (p.is_constant()) return roots;
    mpz_class a0 = p.coeff(0).get_num();
    mpz_class an = p.lc().get_num();
    std::vector<mpz_class> ps = divisors_of(a0);
    std::vector<mpz_class> qs = divisors_of(an);
    for (const mpz_class& num : ps) {
        for (const mpz_class& den : qs) {
            for (int sign : {1, -1}) {
                Rat cand(sign * num, den);
                cand.canonicalize();
                if (curvediff::is_zero(p.eval(cand)) &&
                    std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::optional<std::pair<QPoly, QPoly>> factor_quartic_into_quadratics(const QPoly& f) {
    if (f.degree() != 4 || !f.is_monic())
        throw std::invalid_argument("expected a monic quartic");
    // depress: t = u - a3/4
    Rat a3 = f.coeff(3);
    Rat shift = -a3 / 4;
    QPoly u_sub{shift, Rat(1)};
    QPoly g = f.compose(u_sub); // u^4 + P u^2 + Q u + R
    Rat P = g.coeff(2), Q = g.coeff(1), R = g.coeff(0);
    auto unshift = [&](const QPoly& q) { return q.compose(QPoly{Rat(-shift), Rat(1)}); };
    if (curvediff::is_zero(Q)) {
        // biquadratic: (u^2+q)(u^2+s), q+s = P, qs = R
        Rat disc = P * P - 4 * R;
        if (auto d = exact_kth_root(disc, 2)) {
            Rat q = (P + *d) / 2;
            Rat s = (P - *d) / 2;
            return std::make_pair(unshift(QPoly{q, Rat(0), Rat(1)}),
                                  unshift(QPoly{s, Rat(0), Rat(1)}));
        }
        return std::nullopt;
    }
    // (u^2+pu+q)(u^2-pu+s): z = p^2 satisfies z(P+z)^2 - 4Rz - Q^2 = 0
    QPoly zc = QPoly::t() * QPoly{P, Rat(1)} * QPoly{P, Rat(1)} - QPoly{Rat(0), 4 * R} -
               QPoly(Q * Q);
    for (const Rat& z : rational_roots(zc)) {
        if (sgn(z) <= 0) continue;
        auto proot = exact_kth_root(z, 2);
        if (!proot) continue;
        Rat pp = *proot;
        Rat s = (P + z + Q / pp) / 2;
        Rat q = (P + z - Q / pp) / 2;
        return std::make_pair(unshift(QPoly{q, pp, Rat(1)}), unshift(QPoly{s, -pp, Rat(1)}));
    }
    return std::nullopt;
}

std::optional<TwoSquares> sum_of_two_squares_split(const QPoly& f) {
    if (!f.is_monic()) throw std::invalid_argument("expected a monic polynomial");
    if (f.degree() == 2) {
        Rat b = f.coeff(1), c = f.coeff(0);
        Rat s = c - b * b / 4;
        if (auto sigma = exact_kth_root(s, 2)) {
            if (curvediff::is_zero(*sigma)) return std::nullopt; // square of a linear form
            return TwoSquares{QPoly{b / 2, Rat(1)}, QPoly(*sigma)};
        }
        return std::nullopt;
    }
    if (f.degree() == 4) {
        Rat a3 = f.coeff(3), a2 = f.coeff(2), a1 = f.coeff(1), a0 = f.coeff(0);
        Rat p = a3 / 2;
        // A = t^2 + p t + q, B = r t + s:
        //   r^2 = a2 - p^2 - 2q, 2rs = a1 - 2pq, s^2 = a0 - q^2
        // eliminating r and s: (a1 - 2pq)^2 = 4 (a2 - p^2 - 2q)(a0 - q^2)
        QPoly lhs = QPoly{a1, -2 * p} * QPoly{a1, -2 * p};
        QPoly rhs = QPoly(4) * QPoly{a2 - p * p, Rat(-2)} * QPoly{a0, Rat(0), Rat(-1)};
        QPoly eqn = lhs - rhs;
        if (eqn.is_zero()) return std::nullopt;
        for (const Rat& q : rational_roots(eqn)) {
            Rat r2 = a2 - p * p - 2 * q;
            Rat s2 = a0 - q * q;
            auto r = exact_kth_root(r2, 2);
            auto s = exact_kth_root(s2, 2);
            if (!r || !s) continue;
            Rat rs_target = (a1 - 2 * p * q) / 2;
            // fix signs so that r*s matches
            Rat rv = *r, sv = *s;
            if (!curvediff::is_zero(rv) && !curvediff::is_zero(sv)) {
                if (rv * sv != rs_target) sv = -sv;
                if (rv * sv != rs_target) continue;
            } else if (!curvediff::is_zero(rs_target)) {
                continue;
            }
            QPoly b{sv, rv};
            if (b.is_zero()) continue; // perfect square, not a genuine split
            return TwoSquares{QPoly{q, p, Rat(1)}, b};
        }
        return std::nullopt;
    }
    return std::nullopt;
}

std::optional<GaussRat> norm_representation(const Rat& c) {
    if (sgn(c) <= 0) return std::nullopt;
    mpz_class n = c.get_num() * c.get_den();
    if (n > mpz_class(kNormSearchCap)) return std::nullopt;
    mpz_class x;
    mpz_sqrt(x.get_mpz_t(), n.get_mpz_t());
    // largest x first, so perfect squares come out as real lambda
    for (; x >= 0; --x) {
        mpz_class y2 = n - x * x;
        mpz_class y;
        if (mpz_root(y.get_mpz_t(), y2.get_mpz_t(), 2) != 0) {
            Rat re(x, c.get_den());
            Rat im(y, c.get_den());
            re.canonicalize();
            im.canonicalize();
            return GaussRat(re, im);
        }
    }
    return std::nullopt;
}

QPoly poly_lcm(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) throw std::invalid_argument("lcm with zero polynomial");
    return ((a * b) / gcd(a, b)).monic();
}

} // namespace curvediff
