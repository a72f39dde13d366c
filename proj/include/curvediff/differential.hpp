#ifndef CURVEDIFF_DIFFERENTIAL_HPP
#define CURVEDIFF_DIFFERENTIAL_HPP

#include <algorithm>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "curvediff/ratfunc.hpp"

namespace curvediff {

// Meromorphic k-differential coeff(t) dt^k on the parameter sphere.
template <class F>
struct KDifferentialT {
    int k;
    RatFunc<F> coeff;
    std::string label;

    KDifferentialT(int k_, RatFunc<F> coeff_, std::string label_ = "")
        : k(k_), coeff(std::move(coeff_)), label(std::move(label_)) {
        if (k < 1) throw std::invalid_argument("differential order must be positive");
        if (coeff.is_zero()) throw std::invalid_argument("zero differential");
    }

    friend KDifferentialT operator*(const KDifferentialT& a, const KDifferentialT& b) {
        return KDifferentialT(a.k + b.k, a.coeff * b.coeff);
    }

    // The same differential in the chart u = 1/t.
    KDifferentialT chart_at_infinity() const {
        RatFunc<F> c = coeff.inverted_variable() * RatFunc<F>::t().pow(-2 * k);
        if (k % 2 == 1) c = -c;
        return KDifferentialT(k, c, label);
    }
};

using KDifferential = KDifferentialT<Rat>;
using GKDifferential = KDifferentialT<GaussRat>;

// Zeros and poles attached to squarefree factor classes, plus the point at
// infinity. A factor of degree m stands for m distinct points of equal order.
template <class F>
struct BasicDivisor {
    std::vector<std::pair<Poly<F>, int>> finite; // (monic squarefree factor, nonzero order)
    int infinity_order = 0;

    int degree() const {
        int d = infinity_order;
        for (const auto& [f, o] : finite) d += o * f.degree();
        return d;
    }

    int order_of(const Poly<F>& factor) const {
        for (const auto& [f, o] : finite)
            if (f == factor) return o;
        return 0;
    }

    void sort_factors() {
        std::sort(finite.begin(), finite.end(),
                  [](const auto& a, const auto& b) { return poly_order(a.first, b.first) < 0; });
    }

    friend bool operator==(const BasicDivisor& a, const BasicDivisor& b) {
        return a.infinity_order == b.infinity_order && a.finite == b.finite;
    }
};

using Divisor = BasicDivisor<Rat>;

// Multiset of singularity orders, descending; the Omega^k M_0(a_1,...,a_n)
// data of a differential. Orders always sum to -2k in genus zero.
struct StratumSignature {
    std::vector<int> orders;

    long sum() const {
        long s = 0;
        for (int o : orders) s += o;
        return s;
    }

    friend bool operator==(const StratumSignature& a, const StratumSignature& b) {
        return a.orders == b.orders;
    }
    friend bool operator!=(const StratumSignature& a, const StratumSignature& b) {
        return !(a == b);
    }

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < orders.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(orders[i]);
        }
        return s + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, const StratumSignature& s) {
        return os << s.str();
    }
};

// Divisor of a k-differential: squarefree classes of the numerator carry
// positive orders, those of the denominator negative ones, and the point at
// infinity gets (deg den - deg num) - 2k.
template <class F>
BasicDivisor<F> divisor_of(const KDifferentialT<F>& d) {
    BasicDivisor<F> div;
    auto push = [&](const Poly<F>& p, int sign) {
        auto dec = squarefree_decompose(p);
        for (const auto& part : dec.parts)
            div.finite.emplace_back(part.factor, sign * part.multiplicity);
    };
    push(d.coeff.num(), +1);
    push(d.coeff.den(), -1);
    div.infinity_order = (d.coeff.den().degree() - d.coeff.num().degree()) - 2 * d.k;
    div.sort_factors();
    return div;
}

// Pointwise sum of two divisors, refined to a common coprime basis.
template <class F>
BasicDivisor<F> add_divisors(const BasicDivisor<F>& a, const BasicDivisor<F>& b) {
    std::vector<Poly<F>> polys;
    for (const auto& [f, o] : a.finite) polys.push_back(f);
    for (const auto& [f, o] : b.finite) polys.push_back(f);
    std::vector<Poly<F>> basis = coprime_basis(polys);
    BasicDivisor<F> out;
    out.infinity_order = a.infinity_order + b.infinity_order;
    for (const auto& g : basis) {
        int order = 0;
        for (const auto& [f, o] : a.finite)
            if (g.divides(f)) order += o;
        for (const auto& [f, o] : b.finite)
            if (g.divides(f)) order += o;
        if (order != 0) out.finite.emplace_back(g, order);
    }
    out.sort_factors();
    return out;
}

// Refine a divisor's factors against a coprime basis (for comparisons).
template <class F>
BasicDivisor<F> refine_divisor(const BasicDivisor<F>& d) {
    BasicDivisor<F> zero;
    return add_divisors(d, zero);
}

template <class F>
BasicDivisor<F> negate_divisor(BasicDivisor<F> d) {
    for (auto& [f, o] : d.finite) o = -o;
    d.infinity_order = -d.infinity_order;
    return d;
}

// Equality as divisors: the difference vanishes on a common coprime basis.
template <class F>
bool same_divisor(const BasicDivisor<F>& a, const BasicDivisor<F>& b) {
    BasicDivisor<F> diff = add_divisors(a, negate_divisor(b));
    return diff.finite.empty() && diff.infinity_order == 0;
}

template <class F>
StratumSignature stratum_of_divisor(const BasicDivisor<F>& div) {
    StratumSignature s;
    for (const auto& [f, o] : div.finite)
        for (int i = 0; i < f.degree(); ++i) s.orders.push_back(o);
    if (div.infinity_order != 0) s.orders.push_back(div.infinity_order);
    std::sort(s.orders.begin(), s.orders.end(), std::greater<int>());
    return s;
}

template <class F>
StratumSignature stratum_of(const KDifferentialT<F>& d) {
    return stratum_of_divisor(divisor_of(d));
}

// (lambda, a) when the coefficient is lambda * t^a in this chart, i.e. the
// divisor is supported on {0, infinity} only.
template <class F>
std::optional<std::pair<F, int>> monomial_normal_form(const KDifferentialT<F>& d) {
    const Poly<F>& n = d.coeff.num();
    const Poly<F>& den = d.coeff.den();
    auto is_monomial = [](const Poly<F>& p) {
        for (int i = 0; i < p.degree(); ++i)
            if (!is_zero(p.coeff(i))) return false;
        return true;
    };
    if (!is_monomial(n) || !is_monomial(den)) return std::nullopt;
    return std::make_pair(n.lc(), n.degree() - den.degree());
}

} // namespace curvediff

#endif
