#ifndef CURVEDIFF_POLY_HPP
#define CURVEDIFF_POLY_HPP

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "curvediff/rational.hpp"

namespace curvediff {

// Dense univariate polynomial over an exact field F (Q or Q(i)).
// Coefficients ascending; the leading (back) coefficient is nonzero unless
// the polynomial is zero (empty coefficient vector).
template <class F>
class Poly {
  public:
    Poly() = default;
    Poly(const F& c) { // NOLINT(google-explicit-constructor)
        if (!curvediff::is_zero(c)) c_.push_back(c);
    }
    Poly(int c) : Poly(F(c)) {} // NOLINT(google-explicit-constructor)
    Poly(std::initializer_list<F> coeffs) : c_(coeffs) { trim(); }

    static Poly from_coeffs(std::vector<F> coeffs) {
        Poly p;
        p.c_ = std::move(coeffs);
        p.trim();
        return p;
    }

    // The variable t.
    static Poly t() { return Poly{F(0), F(1)}; }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0] == F(1); }

    F coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return F(0);
        return c_[i];
    }
    const std::vector<F>& coeffs() const { return c_; }

    F lc() const {
        if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }
    bool is_monic() const { return !is_zero() && c_.back() == F(1); }

    F constant_term() const { return coeff(0); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<F> r(std::max(a.c_.size(), b.c_.size()), F(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] = F(r[i] + b.c_[i]);
        return from_coeffs(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    Poly operator-() const {
        Poly r(*this);
        for (F& x : r.c_) x = F(-x);
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<F> r(a.c_.size() + b.c_.size() - 1, F(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] = F(r[i + j] + a.c_[i] * b.c_[j]);
        return from_coeffs(std::move(r));
    }
    friend Poly operator*(const Poly& a, const F& s) {
        Poly r(a);
        for (F& x : r.c_) x = F(x * s);
        r.trim();
        return r;
    }
    friend Poly operator*(const F& s, const Poly& a) { return a * s; }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Euclidean division; divisor must be nonzero.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        Poly q, r = a;
        const int db = b.degree();
        const F inv_lc = F(F(1) / b.lc());
        std::vector<F> qc(r.degree() >= db ? r.degree() - db + 1 : 0, F(0));
        while (!r.is_zero() && r.degree() >= db) {
            int shift = r.degree() - db;
            F factor = F(r.lc() * inv_lc);
            qc[shift] = factor;
            // r -= factor * t^shift * b
            std::vector<F> rc = r.c_;
            for (int i = 0; i <= db; ++i) rc[i + shift] = F(rc[i + shift] - factor * b.c_[i]);
            r = from_coeffs(std::move(rc));
        }
        q = from_coeffs(std::move(qc));
        return {q, r};
    }
    friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

    bool divides(const Poly& a) const { return (a % *this).is_zero(); }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<F> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = F(c_[i] * F(static_cast<int>(i)));
        return from_coeffs(std::move(r));
    }

    Poly monic() const {
        if (is_zero()) throw std::domain_error("monic form of zero polynomial");
        return *this * F(F(1) / lc());
    }

    F eval(const F& x) const {
        F acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = F(acc * x + *it);
        return acc;
    }

    Poly pow(int e) const {
        if (e < 0) throw std::domain_error("negative polynomial power");
        Poly r(F(1)), base = *this;
        while (e > 0) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    Poly compose(const Poly& inner) const {
        Poly acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + Poly(*it);
        return acc;
    }

    // t^deg * p(1/t): plain coefficient reversal.
    Poly reversed() const {
        std::vector<F> r(c_.rbegin(), c_.rend());
        return from_coeffs(std::move(r));
    }

    Poly conjugated() const {
        std::vector<F> r(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = curvediff::conj(c_[i]);
        return from_coeffs(std::move(r));
    }

  private:
    void trim() {
        while (!c_.empty() && curvediff::is_zero(c_.back())) c_.pop_back();
    }

    std::vector<F> c_;
};

// Monic gcd; error when both inputs are zero.
template <class F>
Poly<F> gcd(const Poly<F>& a, const Poly<F>& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
    Poly<F> x = a, y = b;
    while (!y.is_zero()) {
        Poly<F> r = x % y;
        x = y;
        y = r;
    }
    return x.monic();
}

template <class F>
struct SquarefreeFactor {
    Poly<F> factor; // monic, squarefree, nonconstant
    int multiplicity = 0;
};

template <class F>
struct SquarefreeDecomposition {
    F lc;                                    // p = lc * prod factor^multiplicity
    std::vector<SquarefreeFactor<F>> parts;  // pairwise coprime; multiplicities strictly increasing

    Poly<F> expand() const {
        Poly<F> p{lc};
        for (const auto& f : parts) p *= f.factor.pow(f.multiplicity);
        return p;
    }
};

// Yun's algorithm (characteristic 0).
template <class F>
SquarefreeDecomposition<F> squarefree_decompose(const Poly<F>& p) {
    if (p.is_zero()) throw std::domain_error("squarefree decomposition of zero polynomial");
    SquarefreeDecomposition<F> out;
    out.lc = p.lc();
    Poly<F> f = p.monic();
    if (f.is_constant()) return out;
    Poly<F> fp = f.derivative();
    Poly<F> a0 = gcd(f, fp);
    Poly<F> b = f / a0;
    Poly<F> c = fp / a0;
    Poly<F> d = c - b.derivative();
    int i = 1;
    while (!b.is_constant()) {
        Poly<F> ai = gcd(b, d);
        if (!ai.is_constant()) out.parts.push_back({ai, i});
        b = b / ai;
        c = d / ai;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

// Number of sign changes in a sequence, ignoring zeros.
inline int sign_variations(const std::vector<int>& signs) {
    int count = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

// Count of distinct real roots of a nonzero rational polynomial (Sturm).
inline int real_root_count(const Poly<Rat>& p) {
    if (p.is_zero()) throw std::domain_error("real roots of zero polynomial");
    Poly<Rat> f = p;
    // work with the squarefree part so multiple roots count once
    if (f.degree() >= 1) {
        Poly<Rat> g = gcd(f, f.derivative());
        f = f / g;
    }
    if (f.degree() == 0) return 0;
    std::vector<Poly<Rat>> chain{f, f.derivative()};
    while (!chain.back().is_zero()) {
        Poly<Rat> r = chain[chain.size() - 2] % chain.back();
        chain.push_back(-r);
    }
    chain.pop_back();
    auto variations_at_inf = [&](int dir) {
        std::vector<int> signs;
        signs.reserve(chain.size());
        for (const auto& q : chain) {
            if (q.is_zero()) {
                signs.push_back(0);
                continue;
            }
            int s = sgn(q.lc());
            if (dir < 0 && q.degree() % 2 == 1) s = -s;
            signs.push_back(s);
        }
        return sign_variations(signs);
    };
    return variations_at_inf(-1) - variations_at_inf(+1);
}

template <class F>
int poly_order(const Poly<F>& a, const Poly<F>& b);

// Refine a family of monic nonconstant polynomials into a pairwise-coprime
// basis such that every input is a product of basis powers.
template <class F>
std::vector<Poly<F>> coprime_basis(std::vector<Poly<F>> inputs) {
    std::vector<Poly<F>> basis;
    for (Poly<F>& raw : inputs) {
        if (raw.is_zero() || raw.is_constant()) continue;
        std::vector<Poly<F>> queue{raw.monic()};
        while (!queue.empty()) {
            Poly<F> f = queue.back();
            queue.pop_back();
            if (f.is_constant()) continue;
            bool split = false;
            for (size_t i = 0; i < basis.size(); ++i) {
                Poly<F> g = gcd(f, basis[i]);
                if (g.is_constant()) continue;
                if (g == basis[i]) {
                    // strip all copies of the basis element and continue
                    Poly<F> rest = f;
                    while (basis[i].divides(rest)) rest = rest / basis[i];
                    if (!rest.is_constant()) queue.push_back(rest.monic());
                    split = true;
                    break;
                }
                // split the basis element, requeue this factor
                Poly<F> other = basis[i] / g;
                basis[i] = g;
                if (!other.is_constant()) basis.push_back(other.monic());
                queue.push_back(f);
                split = true;
                break;
            }
            if (!split) basis.push_back(f.monic());
        }
    }
    std::sort(basis.begin(), basis.end(), [](const Poly<F>& a, const Poly<F>& b) {
        return poly_order(a, b) < 0;
    });
    return basis;
}

// Deterministic ordering: by degree, then coefficient text; used to keep
// factor lists and reports stable across runs.
template <class F>
int poly_order(const Poly<F>& a, const Poly<F>& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (int i = a.degree(); i >= 0; --i) {
        std::string sa = to_string(a.coeff(i));
        std::string sb = to_string(b.coeff(i));
        if (sa != sb) return sa < sb ? -1 : 1;
    }
    return 0;
}

template <class F>
std::string to_string(const Poly<F>& p);

template <class F>
std::ostream& operator<<(std::ostream& os, const Poly<F>& p) {
    return os << to_string(p);
}

namespace detail {
inline std::string coeff_text(const Rat& c) { return c.get_str(); }
inline bool coeff_is_negative(const Rat& c) { return sgn(c) < 0; }
inline Rat coeff_negate(const Rat& c) { return Rat(-c); }
inline std::string coeff_text(const GaussRat& c) {
    if (sgn(c.im) == 0) return c.re.get_str();
    if (sgn(c.re) == 0) return c.im.get_str() + "*i";
    return "(" + c.re.get_str() + (sgn(c.im) > 0 ? "+" : "-") + Rat(abs(c.im)).get_str() + "*i)";
}
inline bool coeff_is_negative(const GaussRat& c) { return sgn(c.im) == 0 && sgn(c.re) < 0; }
inline GaussRat coeff_negate(const GaussRat& c) { return -c; }
} // namespace detail

template <class F>
std::string to_string(const Poly<F>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        F c = p.coeff(i);
        if (curvediff::is_zero(c)) continue;
        bool neg = detail::coeff_is_negative(c);
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        F a = neg ? detail::coeff_negate(c) : c;
        bool unit = (a == F(1));
        if (i == 0) {
            out += detail::coeff_text(a);
        } else {
            if (!unit) out += detail::coeff_text(a) + "*";
            out += (i == 1) ? "t" : ("t^" + std::to_string(i));
        }
    }
    return out;
}

} // namespace curvediff

#endif
