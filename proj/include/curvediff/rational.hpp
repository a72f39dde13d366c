#ifndef CURVEDIFF_RATIONAL_HPP
#define CURVEDIFF_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace curvediff {

// Arbitrary-precision rational, kept canonical (positive denominator,
// reduced) by GMP as long as construction goes through the helpers below.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat_from_string(const std::string& s) {
    Rat r(s); // throws std::invalid_argument on malformed input
    if (r.get_den() == 0) throw std::invalid_argument("rational with zero denominator: " + s);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

inline Rat conj(const Rat& r) { return r; }

// "num/den" with the denominator always spelled out; stable across runs.
inline std::string to_string(const Rat& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Exact k-th root when it exists in Q (sign-aware; even k needs r >= 0).
inline std::optional<Rat> exact_kth_root(const Rat& r, int k) {
    if (k <= 0) throw std::invalid_argument("exact_kth_root: k must be positive");
    if (sgn(r) == 0) return Rat(0);
    if (sgn(r) < 0 && k % 2 == 0) return std::nullopt;
    mpz_class num = abs(r.get_num());
    mpz_class den = r.get_den();
    mpz_class rn, rd;
    bool en = mpz_root(rn.get_mpz_t(), num.get_mpz_t(), k) != 0;
    bool ed = mpz_root(rd.get_mpz_t(), den.get_mpz_t(), k) != 0;
    if (!en || !ed) return std::nullopt;
    Rat root(rn, rd);
    root.canonicalize();
    if (sgn(r) < 0) root = -root;
    return root;
}

// Element of Q(i).
struct GaussRat {
    Rat re;
    Rat im;

    GaussRat() : re(0), im(0) {}
    GaussRat(int v) : re(v), im(0) {}          // NOLINT(google-explicit-constructor)
    GaussRat(const Rat& r) : re(r), im(0) {}   // NOLINT(google-explicit-constructor)
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
        return {Rat(a.re + b.re), Rat(a.im + b.im)};
    }
    friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
        return {Rat(a.re - b.re), Rat(a.im - b.im)};
    }
    GaussRat operator-() const { return {Rat(-re), Rat(-im)}; }
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
        return {Rat(a.re * b.re - a.im * b.im), Rat(a.re * b.im + a.im * b.re)};
    }
    friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
        Rat n = b.re * b.re + b.im * b.im;
        if (sgn(n) == 0) throw std::domain_error("division by zero in Q(i)");
        return {Rat((a.re * b.re + a.im * b.im) / n), Rat((a.im * b.re - a.re * b.im) / n)};
    }
    GaussRat& operator+=(const GaussRat& o) { return *this = *this + o; }
    GaussRat& operator-=(const GaussRat& o) { return *this = *this - o; }
    GaussRat& operator*=(const GaussRat& o) { return *this = *this * o; }
    GaussRat& operator/=(const GaussRat& o) { return *this = *this / o; }

    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

    Rat norm() const { return re * re + im * im; }

    friend std::ostream& operator<<(std::ostream& os, const GaussRat& g) {
        os << g.re.get_str();
        if (sgn(g.im) != 0)
            os << (sgn(g.im) > 0 ? "+" : "-") << Rat(abs(g.im)).get_str() << "*i";
        return os;
    }
};

inline GaussRat gauss_i() { return {Rat(0), Rat(1)}; }

inline bool is_zero(const GaussRat& g) { return sgn(g.re) == 0 && sgn(g.im) == 0; }

inline GaussRat conj(const GaussRat& g) { return {g.re, Rat(-g.im)}; }

inline std::string to_string(const GaussRat& g) {
    return to_string(g.re) + (sgn(g.im) >= 0 ? "+" : "-") + to_string(Rat(abs(g.im))) + "i";
}

} // namespace curvediff

#endif
