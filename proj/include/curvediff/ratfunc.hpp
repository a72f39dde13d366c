#ifndef CURVEDIFF_RATFUNC_HPP
#define CURVEDIFF_RATFUNC_HPP

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include "curvediff/poly.hpp"

namespace curvediff {

// Univariate rational function in normal form: denominator monic and
// coprime to the numerator, so equality is structural.
template <class F>
class RatFunc {
  public:
    RatFunc() : num_(), den_(F(1)) {}
    RatFunc(const F& c) : num_(c), den_(F(1)) {}        // NOLINT(google-explicit-constructor)
    RatFunc(int c) : num_(F(c)), den_(F(1)) {}          // NOLINT(google-explicit-constructor)
    RatFunc(const Poly<F>& p) : num_(p), den_(F(1)) {}  // NOLINT(google-explicit-constructor)
    RatFunc(Poly<F> num, Poly<F> den) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    static RatFunc t() { return RatFunc(Poly<F>::t()); }

    const Poly<F>& num() const { return num_; }
    const Poly<F>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.is_one(); }

    F constant_value() const {
        if (!is_constant()) throw std::domain_error("constant_value of nonconstant function");
        return num_.constant_term(); // den is monic constant = 1
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw std::domain_error("division by the zero function");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc derivative() const {
        return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    RatFunc pow(int e) const {
        if (e == 0) return RatFunc(F(1));
        if (e < 0) {
            if (is_zero()) throw std::domain_error("negative power of the zero function");
            return RatFunc(den_.pow(-e), num_.pow(-e));
        }
        return RatFunc(num_.pow(e), den_.pow(e));
    }

    std::optional<F> eval(const F& x) const {
        F d = den_.eval(x);
        if (curvediff::is_zero(d)) return std::nullopt;
        return F(num_.eval(x) / d);
    }

    // deg num - deg den; order of growth at infinity.
    int degree() const {
        if (is_zero()) throw std::domain_error("degree of the zero function");
        return num_.degree() - den_.degree();
    }

    // f(1/t), reduced; swaps the roles of 0 and infinity.
    RatFunc inverted_variable() const {
        if (is_zero()) return RatFunc();
        Poly<F> rn = num_.reversed();
        Poly<F> rd = den_.reversed();
        int k = den_.degree() - num_.degree();
        Poly<F> tk = Poly<F>::t().pow(k >= 0 ? k : -k);
        if (k >= 0) return RatFunc(rn * tk, rd);
        return RatFunc(rn, rd * tk);
    }

    RatFunc compose(const RatFunc& inner) const {
        RatFunc acc;
        for (int i = num_.degree(); i >= 0; --i) acc = acc * inner + RatFunc(num_.coeff(i));
        RatFunc accd;
        for (int i = den_.degree(); i >= 0; --i) accd = accd * inner + RatFunc(den_.coeff(i));
        return acc / accd;
    }

    RatFunc conjugated() const { return RatFunc(num_.conjugated(), den_.conjugated()); }

  private:
    void normalize() {
        if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = Poly<F>(F(1));
            return;
        }
        Poly<F> g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        F l = den_.lc();
        if (!(l == F(1))) {
            F inv = F(F(1) / l);
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }

    Poly<F> num_;
    Poly<F> den_;
};

// Multiplicity of the monic nonconstant squarefree-or-prime factor s in f
// (positive for zeros, negative for poles). Well defined whenever all
// irreducible components of s occur with the same multiplicity.
template <class F>
int order_at(const RatFunc<F>& f, const Poly<F>& s) {
    if (f.is_zero()) throw std::domain_error("order of the zero function");
    if (s.is_constant()) throw std::invalid_argument("order at a constant factor");
    auto count = [&](Poly<F> p) {
        int n = 0;
        while (!p.is_zero() && s.divides(p)) {
            p = p / s;
            ++n;
        }
        return n;
    };
    return count(f.num()) - count(f.den());
}

template <class F>
bool is_zero(const RatFunc<F>& f) {
    return f.is_zero();
}

inline double eval_double(const Poly<Rat>& p, double x) {
    double acc = 0.0;
    for (int i = p.degree(); i >= 0; --i) acc = acc * x + p.coeff(i).get_d();
    return acc;
}

inline double eval_double(const RatFunc<Rat>& f, double x) {
    return eval_double(f.num(), x) / eval_double(f.den(), x);
}

template <class F>
std::string to_string(const RatFunc<F>& f) {
    if (f.is_polynomial()) return to_string(f.num());
    std::string n = to_string(f.num());
    std::string d = to_string(f.den());
    return "(" + n + ")/(" + d + ")";
}

template <class F>
std::ostream& operator<<(std::ostream& os, const RatFunc<F>& f) {
    return os << to_string(f);
}

using QPoly = Poly<Rat>;
using QRatFunc = RatFunc<Rat>;
using GPoly = Poly<GaussRat>;
using GRatFunc = RatFunc<GaussRat>;

// Lift a rational object into Q(i).
inline GPoly lift_to_gauss(const QPoly& p) {
    std::vector<GaussRat> c(p.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = GaussRat(p.coeffs()[i]);
    return GPoly::from_coeffs(std::move(c));
}

inline GRatFunc lift_to_gauss(const QRatFunc& f) {
    return GRatFunc(lift_to_gauss(f.num()), lift_to_gauss(f.den()));
}

// Split z(t) with Q(i) coefficients into real and imaginary parts along the
// real t-line: z = x + i*y with x, y rational over Q.
struct RealImagParts {
    QRatFunc re;
    QRatFunc im;
};

inline RealImagParts split_real_imag(const GRatFunc& z) {
    GRatFunc zb = z.conjugated();
    GRatFunc re = (z + zb) * GRatFunc(GaussRat(rat(1, 2)));
    GRatFunc im = (z - zb) / GRatFunc(GaussRat(Rat(0), Rat(2)));
    auto drop_imag = [](const GRatFunc& f) {
        std::vector<Rat> n(f.num().coeffs().size()), d(f.den().coeffs().size());
        for (size_t i = 0; i < n.size(); ++i) {
            const GaussRat& c = f.num().coeffs()[i];
            if (sgn(c.im) != 0) throw std::logic_error("expected real coefficients");
            n[i] = c.re;
        }
        for (size_t i = 0; i < d.size(); ++i) {
            const GaussRat& c = f.den().coeffs()[i];
            if (sgn(c.im) != 0) throw std::logic_error("expected real coefficients");
            d[i] = c.re;
        }
        return QRatFunc(QPoly::from_coeffs(std::move(n)), QPoly::from_coeffs(std::move(d)));
    };
    return {drop_imag(re), drop_imag(im)};
}

} // namespace curvediff

#endif
