#include "curvediff/pluecker.hpp"

#include <stdexcept>

namespace curvediff {

namespace {
void check_degree(int64_t d) {
    if (d < 2) throw std::invalid_argument("degree must be at least 2");
}
} // namespace

int64_t binomial2(int64_t n) { return n * (n - 1) / 2; }

PlueckerRecord pluecker_rational(int64_t d) {
    check_degree(d);
    PlueckerRecord r;
    r.variant = CurveVariant::rational;
    r.degree = d;
    r.genus = 0;
    r.nodes = binomial2(d - 1);
    r.cusps = 0;
    r.inflections = 3 * (d - 2);
    r.curve_class = 2 * d - 2;
    r.dual_cusps = 3 * (d - 2);
    r.dual_nodes = 2 * (d - 2) * (d - 3);
    r.dual_inflections = 0;
    return r;
}

PlueckerRecord pluecker_generic(int64_t d) {
    check_degree(d);
    PlueckerRecord r;
    r.variant = CurveVariant::generic;
    r.degree = d;
    r.genus = binomial2(d - 1);
    r.nodes = 0;
    r.cusps = 0;
    r.inflections = 3 * d * (d - 2);
    r.curve_class = d * (d - 1);
    r.dual_cusps = 3 * d * (d - 2);
    r.dual_nodes = binomial2(d * (d - 1) - 1) - binomial2(d - 1);
    r.dual_inflections = 0;
    return r;
}

EvoluteCounts evolute_counts(int64_t d, CurveVariant variant) {
    check_degree(d);
    EvoluteCounts e;
    e.variant = variant;
    if (variant == CurveVariant::rational) {
        e.degree = 6 * (d - 1);
        e.curve_class = 3 * d - 2;
        e.cusps = 3 * (3 * d - 4);
        e.nodes = 2 * (3 * d - 4) * (3 * d - 5);
        e.normals_nodes = binomial2(3 * d - 3);
        e.normals_inflections = 9 * d - 12;
    } else {
        e.degree = 3 * d * (d - 1);
        e.curve_class = d * d;
        e.cusps = d * (6 * d - 9);
        e.nodes = d * (3 * d - 5) * (3 * d * d - d - 6) / 2;
        e.normals_nodes = binomial2(d * d - 1) - binomial2(d - 1);
    }
    return e;
}

} // namespace curvediff
