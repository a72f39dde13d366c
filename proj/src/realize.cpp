#include <algorithm>
#include <cstdlib>
#include <string>
#include <vector>

#include "curvediff/factor.hpp"
#include "curvediff/geometry.hpp"

namespace curvediff {

namespace {

// One Q(i) factor class of the divisor of q. Conjugation either fixes the
// class (real points, or conjugate root pairs inside one irreducible
// factor) or swaps it with the partner class.
struct GaussClass {
    GPoly factor;
    GPoly partner;   // conj factor for pair classes; unused when self-paired
    bool self_paired = false;
    int order = 0;   // order of q along the class
};

GPoly lift_linear(const Rat& root) {
    return GPoly{GaussRat(Rat(-root)), GaussRat(1)};
}

GPoly lift_with_imag(const QPoly& re, const QPoly& im) {
    GPoly i(gauss_i());
    return lift_to_gauss(re) + i * lift_to_gauss(im);
}

// Split a real monic squarefree factor into Q(i) classes. Linear and
// quadratic Q(i) factors are found exactly; a factor that would need a
// deeper factorization is rejected rather than misclassified.
void split_factor(const QPoly& f, int order, std::vector<GaussClass>& out) {
    std::vector<QPoly> work;
    QPoly rest = f;
    for (const Rat& root : rational_roots(f)) {
        QPoly lin{-root, Rat(1)};
        rest = rest / lin;
        out.push_back({lift_linear(root), GPoly(), true, order});
    }
    if (!rest.is_constant()) work.push_back(rest);
    while (!work.empty()) {
        QPoly g = work.back();
        work.pop_back();
        int d = g.degree();
        if (real_root_count(g) == d) {
            // wholly real zero locus: conjugation fixes every point
            out.push_back({lift_to_gauss(g), GPoly(), true, order});
            continue;
        }
        if (d == 2) {
            if (auto ts = sum_of_two_squares_split(g)) {
                GPoly h = lift_with_imag(ts->a, ts->b);
                out.push_back({h, h.conjugated(), false, order});
            } else {
                out.push_back({lift_to_gauss(g), GPoly(), true, order});
            }
            continue;
        }
        if (d == 3) {
            // no rational root, so irreducible over Q; odd degree stays
            // irreducible over Q(i)
            out.push_back({lift_to_gauss(g), GPoly(), true, order});
            continue;
        }
        if (d == 4) {
            if (auto split = factor_quartic_into_quadratics(g)) {
                work.push_back(split->first);
                work.push_back(split->second);
                continue;
            }
            if (auto ts = sum_of_two_squares_split(g)) {
                GPoly h = lift_with_imag(ts->a, ts->b);
                out.push_back({h, h.conjugated(), false, order});
            } else {
                out.push_back({lift_to_gauss(g), GPoly(), true, order});
            }
            continue;
        }
        throw UnsupportedError("Q(i) splitting of the degree-" + std::to_string(d) +
                               " factor " + to_string(g));
    }
}

} // namespace

std::vector<Realization> realize_genus0(const KDifferential& q, int bound) {
    if (q.k != 2) throw std::invalid_argument("realize_genus0 expects a quadratic differential");
    if (bound < 0) throw std::invalid_argument("negative search bound");
    std::vector<Realization> out;

    Rat ch = q.coeff.num().lc() / q.coeff.den().lc();
    if (sgn(ch) < 0) return out; // dz dw has nonnegative leading constant
    Divisor div = divisor_of(q);
    if (div.infinity_order % 2 != 0) return out;

    std::vector<GaussClass> classes;
    for (const auto& [factor, order] : div.finite) split_factor(factor, order, classes);

    std::vector<size_t> pair_idx;
    for (size_t i = 0; i < classes.size(); ++i) {
        if (classes[i].self_paired) {
            if (classes[i].order % 2 != 0) return out; // divisor obstruction
        } else {
            pair_idx.push_back(i);
        }
    }

    // orders on pair classes: a + b = e with a within the bound of e/2
    std::vector<std::vector<int>> ranges;
    long long total = 1;
    for (size_t idx : pair_idx) {
        int e = classes[idx].order;
        std::vector<int> opts;
        for (int a = e / 2 - bound - 1; a <= e / 2 + bound + 1; ++a)
            if (std::abs(2 * a - e) <= 2 * bound) opts.push_back(a);
        ranges.push_back(opts);
        total *= static_cast<long long>(opts.size());
        if (total > 50'000) throw UnsupportedError("realization search space too large");
    }

    std::optional<GaussRat> lambda = norm_representation(ch);
    std::vector<size_t> cursor(ranges.size(), 0);
    while (true) {
        // assemble the candidate 1-form coefficient and its divisor degree
        GRatFunc coeff(GaussRat(1));
        int finite_degree = 0;
        for (const GaussClass& cls : classes) {
            if (cls.self_paired) {
                int a = cls.order / 2;
                coeff *= GRatFunc(cls.factor).pow(a);
                finite_degree += a * cls.factor.degree();
            }
        }
        for (size_t j = 0; j < pair_idx.size(); ++j) {
            const GaussClass& cls = classes[pair_idx[j]];
            int a = ranges[j][cursor[j]];
            int b = cls.order - a;
            coeff *= GRatFunc(cls.factor).pow(a) * GRatFunc(cls.partner).pow(b);
            finite_degree += (a + b) * cls.factor.degree();
        }
        bool degree_ok = (-finite_degree - 2) == div.infinity_order / 2;
        if (degree_ok) {
            HermiteResult<GaussRat> her = hermite_reduce(coeff);
            if (her.remainder.is_zero() && !her.rational_part.is_constant()) {
                GRatFunc z = her.rational_part;
                Rat ratio2(1);
                if (lambda)
                    z = GRatFunc(GPoly(*lambda)) * z;
                else
                    ratio2 = ch;
                RealImagParts parts = split_real_imag(z);
                PlaneCurve curve(parts.re, parts.im, "realization");
                QRatFunc back = arc_length_qdiff(curve).coeff * QRatFunc(QPoly(ratio2));
                if (back == q.coeff) out.push_back({curve, ratio2, z});
            }
        }
        // advance the cartesian cursor
        size_t j = 0;
        while (j < cursor.size() && ++cursor[j] == ranges[j].size()) {
            cursor[j] = 0;
            ++j;
        }
        if (j == cursor.size()) break;
    }
    return out;
}

} // namespace curvediff
