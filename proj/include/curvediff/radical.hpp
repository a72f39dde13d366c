#ifndef CURVEDIFF_RADICAL_HPP
#define CURVEDIFF_RADICAL_HPP

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "curvediff/linsolve.hpp"
#include "curvediff/ratfunc.hpp"

namespace curvediff {

// Element of the ring Q(t)[R] / (R^k - scalar*radicand), i.e. rational
// combinations of powers of the k-th root R = (scalar * radicand)^{1/k}.
//
// Normal form: radicand monic and k-power-free (or 1), the leading
// coefficient and any k-th-power polynomial part folded out of the root,
// and an exact rational k-th root of the scalar folded into the
// coefficients. A scalar that is not a perfect k-th power in Q is kept as a
// formal tag and never evaluated. Elements whose root components all vanish
// normalize to radicand 1, scalar 1, so purely rational values compare
// equal regardless of provenance.
class RadicalElement {
  public:
    RadicalElement() : RadicalElement(QRatFunc(), 2) {}

    // Rational element a, viewed inside a root-order-k ring.
    explicit RadicalElement(const QRatFunc& a, int k)
        : k_(check_k(k)), radicand_(1), scalar_(1), comps_(static_cast<size_t>(k), QRatFunc()) {
        comps_[0] = a;
    }

    // sum comps[i] * (scalar * radicand)^{i/k}
    RadicalElement(std::vector<QRatFunc> comps, QPoly radicand, Rat scalar, int k)
        : k_(check_k(k)), radicand_(std::move(radicand)), scalar_(std::move(scalar)),
          comps_(std::move(comps)) {
        comps_.resize(static_cast<size_t>(k_), QRatFunc());
        normalize();
    }

    // p * (scalar * radicand)^{1/k}; the usual shape of arc-length primitives.
    static RadicalElement root_multiple(const QRatFunc& p, QPoly radicand, Rat scalar, int k) {
        std::vector<QRatFunc> comps(static_cast<size_t>(check_k(k)), QRatFunc());
        comps[1] = p;
        return RadicalElement(std::move(comps), std::move(radicand), std::move(scalar), k);
    }

    int k() const { return k_; }
    const QPoly& radicand() const { return radicand_; }
    const Rat& scalar() const { return scalar_; }
    const std::vector<QRatFunc>& components() const { return comps_; }
    const QRatFunc& rational_part() const { return comps_[0]; }
    const QRatFunc& root_part() const { return comps_[1]; }

    bool is_rational() const {
        for (size_t i = 1; i < comps_.size(); ++i)
            if (!comps_[i].is_zero()) return false;
        return true;
    }
    bool is_zero() const { return is_rational() && comps_[0].is_zero(); }

    friend RadicalElement operator+(const RadicalElement& a, const RadicalElement& b) {
        auto [x, y] = aligned(a, b);
        std::vector<QRatFunc> comps(x.comps_.size());
        for (size_t i = 0; i < comps.size(); ++i) comps[i] = x.comps_[i] + y.comps_[i];
        return RadicalElement(std::move(comps), x.radicand_, x.scalar_, x.k_);
    }
    friend RadicalElement operator-(const RadicalElement& a, const RadicalElement& b) {
        return a + (-b);
    }
    RadicalElement operator-() const {
        RadicalElement r = *this;
        for (QRatFunc& c : r.comps_) c = -c;
        return r;
    }
    friend RadicalElement operator*(const RadicalElement& a, const RadicalElement& b) {
        auto [x, y] = aligned(a, b);
        const int k = x.k_;
        QRatFunc rk = QRatFunc(x.radicand_) * QRatFunc(QPoly(x.scalar_)); // R^k
        std::vector<QRatFunc> comps(static_cast<size_t>(k), QRatFunc());
        for (int i = 0; i < k; ++i) {
            if (x.comps_[i].is_zero()) continue;
            for (int j = 0; j < k; ++j) {
                if (y.comps_[j].is_zero()) continue;
                QRatFunc term = x.comps_[i] * y.comps_[j];
                int e = i + j;
                if (e >= k) {
                    e -= k;
                    term *= rk;
                }
                comps[e] += term;
            }
        }
        return RadicalElement(std::move(comps), x.radicand_, x.scalar_, k);
    }
    RadicalElement& operator+=(const RadicalElement& o) { return *this = *this + o; }
    RadicalElement& operator-=(const RadicalElement& o) { return *this = *this - o; }
    RadicalElement& operator*=(const RadicalElement& o) { return *this = *this * o; }

    RadicalElement inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero radical element");
        if (is_rational())
            return RadicalElement(QRatFunc(1) / comps_[0], k_);
        // Solve (this) * x = 1 componentwise over Q(t).
        const int k = k_;
        QRatFunc rk = QRatFunc(radicand_) * QRatFunc(QPoly(scalar_));
        std::vector<std::vector<QRatFunc>> m(static_cast<size_t>(k),
                                             std::vector<QRatFunc>(static_cast<size_t>(k)));
        for (int j = 0; j < k; ++j) {
            for (int i = 0; i < k; ++i) {
                int e = i + j;
                QRatFunc v = comps_[static_cast<size_t>(i)];
                if (e >= k) {
                    e -= k;
                    v *= rk;
                }
                m[static_cast<size_t>(e)][static_cast<size_t>(j)] += v;
            }
        }
        std::vector<QRatFunc> rhs(static_cast<size_t>(k), QRatFunc());
        rhs[0] = QRatFunc(1);
        auto sol = solve_linear_system(std::move(m), std::move(rhs));
        if (!sol.solvable || sol.kernel_dim != 0)
            throw std::domain_error("radical element is a zero divisor");
        return RadicalElement(std::move(sol.x), radicand_, scalar_, k_);
    }
    friend RadicalElement operator/(const RadicalElement& a, const RadicalElement& b) {
        return a * b.inverse();
    }

    friend bool operator==(const RadicalElement& a, const RadicalElement& b) {
        if (a.k_ != b.k_) return false;
        if (a.is_rational() && b.is_rational()) return a.comps_[0] == b.comps_[0];
        return a.radicand_ == b.radicand_ && a.scalar_ == b.scalar_ && a.comps_ == b.comps_;
    }
    friend bool operator!=(const RadicalElement& a, const RadicalElement& b) { return !(a == b); }

    // d/dt, using R' = R * C'/(kC) for the root R of C = radicand.
    RadicalElement derivative() const {
        std::vector<QRatFunc> comps(comps_.size());
        QRatFunc c(radicand_);
        QRatFunc cp(radicand_.derivative());
        for (size_t i = 0; i < comps_.size(); ++i) {
            comps[i] = comps_[i].derivative();
            if (i > 0 && !comps_[i].is_zero())
                comps[i] += comps_[i] * QRatFunc(static_cast<int>(i)) * cp / (QRatFunc(k_) * c);
        }
        return RadicalElement(std::move(comps), radicand_, scalar_, k_);
    }

    // Real-branch numeric value; for even k the scaled radicand must be
    // nonnegative at x.
    double eval_double(double x) const {
        double base = scalar_.get_d() * curvediff::eval_double(QRatFunc(radicand_), x);
        double root;
        if (k_ == 2) {
            if (base < 0) throw std::domain_error("negative radicand in real evaluation");
            root = std::sqrt(base);
        } else {
            root = std::cbrt(base);
        }
        double acc = 0.0, rp = 1.0;
        for (size_t i = 0; i < comps_.size(); ++i) {
            if (!comps_[i].is_zero()) acc += curvediff::eval_double(comps_[i], x) * rp;
            rp *= root;
        }
        return acc;
    }

    friend std::ostream& operator<<(std::ostream& os, const RadicalElement& e) {
        if (e.is_rational()) return os << e.comps_[0];
        bool first = true;
        for (size_t i = 0; i < e.comps_.size(); ++i) {
            if (e.comps_[i].is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << e.comps_[i] << ")";
            if (i > 0) {
                os << "*(";
                if (!(e.scalar_ == Rat(1))) os << e.scalar_.get_str() << "*";
                os << "(" << e.radicand_ << "))^(" << i << "/" << e.k_ << ")";
            }
        }
        if (first) os << "0";
        return os;
    }

  private:
    static int check_k(int k) {
        if (k < 2 || k > 3) throw std::invalid_argument("root order must be 2 or 3");
        return k;
    }

    // Bring two operands onto one radicand; rational values lift anywhere.
    static std::pair<RadicalElement, RadicalElement> aligned(const RadicalElement& a,
                                                             const RadicalElement& b) {
        if (a.k_ != b.k_) throw std::invalid_argument("mixed root orders");
        if (a.radicand_ == b.radicand_ && a.scalar_ == b.scalar_) return {a, b};
        if (a.is_rational()) {
            RadicalElement x = b;
            for (size_t i = 1; i < x.comps_.size(); ++i) x.comps_[i] = QRatFunc();
            x.comps_[0] = a.comps_[0];
            return {x, b};
        }
        if (b.is_rational()) {
            auto [y, x] = aligned(b, a);
            return {x, y};
        }
        throw std::invalid_argument("radical elements over different radicands");
    }

    void normalize() {
        if (radicand_.is_zero() || curvediff::is_zero(scalar_))
            throw std::invalid_argument("radicand and scalar must be nonzero");
        // fold the leading coefficient of the radicand into the scalar
        if (!radicand_.is_monic()) {
            scalar_ *= radicand_.lc();
            radicand_ = radicand_.monic();
        }
        // pull k-th-power polynomial content out of the root
        if (!radicand_.is_constant()) {
            auto dec = squarefree_decompose(radicand_);
            QPoly reduced(1);
            QPoly multiplier(1);
            bool changed = false;
            for (const auto& part : dec.parts) {
                int r = part.multiplicity % k_;
                int s = part.multiplicity / k_;
                if (s > 0) changed = true;
                if (r > 0) reduced *= part.factor.pow(r);
                if (s > 0) multiplier *= part.factor.pow(s);
            }
            if (changed) {
                radicand_ = reduced;
                QRatFunc m(multiplier), mp(1);
                for (size_t i = 1; i < comps_.size(); ++i) {
                    mp *= m;
                    comps_[i] *= mp;
                }
            }
        }
        // fold an exact k-th root of the scalar into the coefficients
        if (!(scalar_ == Rat(1))) {
            if (auto root = exact_kth_root(scalar_, k_)) {
                QRatFunc r{QPoly(*root)};
                QRatFunc rp(1);
                for (size_t i = 1; i < comps_.size(); ++i) {
                    rp *= r;
                    comps_[i] *= rp;
                }
                scalar_ = 1;
            }
        }
        // a trivial root collapses to the rational part
        if (radicand_.is_one() && scalar_ == Rat(1)) {
            for (size_t i = 1; i < comps_.size(); ++i) {
                comps_[0] += comps_[i];
                comps_[i] = QRatFunc();
            }
        }
        if (is_rational()) {
            radicand_ = QPoly(1);
            scalar_ = 1;
        }
    }

    int k_;
    QPoly radicand_;
    Rat scalar_;
    std::vector<QRatFunc> comps_;
};

} // namespace curvediff

#endif
