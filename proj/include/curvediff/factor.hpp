#ifndef CURVEDIFF_FACTOR_HPP
#define CURVEDIFF_FACTOR_HPP

#include <optional>
#include <utility>
#include <vector>

#include "curvediff/ratfunc.hpp"

namespace curvediff {

// All rational roots of a nonzero rational polynomial (each once).
// Denominator/numerator divisor enumeration is capped; callers treat a miss
// as "no rational root found", which downstream code handles conservatively.
std::vector<Rat> rational_roots(const QPoly& p);

// Monic factorization of a monic quartic into two rational monic quadratics.
std::optional<std::pair<QPoly, QPoly>> factor_quartic_into_quadratics(const QPoly& f);

// f = A^2 + B^2 with A monic of half degree, B of lower degree; equivalently
// the splitting f = (A + iB)(A - iB) over Q(i). Supported for deg f in {2, 4}.
struct TwoSquares {
    QPoly a;
    QPoly b;
};
std::optional<TwoSquares> sum_of_two_squares_split(const QPoly& f);

// lambda in Q(i) with lambda * conj(lambda) = c, when c is a sum of two
// rational squares (bounded search on the integer c_num * c_den).
std::optional<GaussRat> norm_representation(const Rat& c);

QPoly poly_lcm(const QPoly& a, const QPoly& b);

} // namespace curvediff

#endif
