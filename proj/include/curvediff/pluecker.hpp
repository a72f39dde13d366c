#ifndef CURVEDIFF_PLUECKER_HPP
#define CURVEDIFF_PLUECKER_HPP

#include <cstdint>
#include <optional>

namespace curvediff {

enum class CurveVariant { generic, rational };

// Degree/class/singularity counts of a plane projective curve and its dual.
struct PlueckerRecord {
    CurveVariant variant = CurveVariant::generic;
    int64_t degree = 0;
    int64_t genus = 0;
    int64_t curve_class = 0;
    int64_t nodes = 0;
    int64_t cusps = 0;
    int64_t inflections = 0;
    int64_t dual_nodes = 0;
    int64_t dual_cusps = 0;
    int64_t dual_inflections = 0;
};

// Counts for the evolute E and the curve of normals N (the dual of E).
// normals_inflections is only known in the rational case.
struct EvoluteCounts {
    CurveVariant variant = CurveVariant::generic;
    int64_t degree = 0;
    int64_t curve_class = 0;
    int64_t cusps = 0;
    int64_t nodes = 0;
    int64_t normals_nodes = 0;
    std::optional<int64_t> normals_inflections;
};

int64_t binomial2(int64_t n); // n (n-1) / 2

PlueckerRecord pluecker_rational(int64_t d);
PlueckerRecord pluecker_generic(int64_t d);
EvoluteCounts evolute_counts(int64_t d, CurveVariant variant);

} // namespace curvediff

#endif
