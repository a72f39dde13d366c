#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curvediff/differential.hpp"
#include "test_util.hpp"

using namespace curvediff;
using testutil::Rng;

namespace {

StratumSignature sig(std::initializer_list<int> orders) {
    StratumSignature s;
    s.orders = orders;
    return s;
}

} // namespace

TEST_CASE("divisor_of: frozen examples") {
    QPoly t = QPoly::t();
    SUBCASE("semicubic arc-length coefficient, k=2") {
        KDifferential d(2, QRatFunc(t * t * (QPoly(9) * t * t + QPoly(4))));
        Divisor div = divisor_of(d);
        REQUIRE(div.finite.size() == 2);
        CHECK(div.order_of(t) == 2);
        CHECK(div.order_of(t * t + QPoly(rat(4, 9))) == 1);
        CHECK(div.infinity_order == -8);
        CHECK(div.degree() == -4);
    }
    SUBCASE("constant coefficient, k=2") {
        KDifferential d(2, QRatFunc(1));
        Divisor div = divisor_of(d);
        CHECK(div.finite.empty());
        CHECK(div.infinity_order == -4);
    }
    SUBCASE("lemniscate affine cubic, k=3") {
        KDifferential d(3, QRatFunc(QPoly(-12) * t, (t.pow(4) + QPoly(1)).pow(2)));
        Divisor div = divisor_of(d);
        CHECK(div.order_of(t) == 1);
        CHECK(div.order_of(t.pow(4) + QPoly(1)) == -2);
        CHECK(div.infinity_order == 1);
        CHECK(div.degree() == -6);
    }
    SUBCASE("zero coefficient is rejected at construction") {
        CHECK_THROWS(KDifferential(2, QRatFunc(0)));
    }
}

TEST_CASE("stratum_of: frozen examples") {
    QPoly t = QPoly::t();
    SUBCASE("circle") {
        KDifferential d(2, QRatFunc(QPoly(4), (t * t + QPoly(1)).pow(2)));
        CHECK(stratum_of(d) == sig({-2, -2}));
    }
    SUBCASE("pythagorean-hodograph quintic") {
        KDifferential d(2, QRatFunc((t * t + QPoly(1)).pow(4)));
        CHECK(stratum_of(d) == sig({4, 4, -12}));
    }
    SUBCASE("many simple zeros") {
        QPoly sextic = t.pow(6) + QPoly(30) * t.pow(4) - QPoly(15) * t.pow(2) + QPoly(4);
        KDifferential d(2, QRatFunc(t * t * sextic, (t * t + QPoly(1)).pow(6)));
        CHECK(stratum_of(d) == sig({2, 1, 1, 1, 1, 1, 1, -6, -6}));
    }
}

TEST_CASE("stratum orders sum to -2k for random differentials") {
    Rng rng(31);
    for (int i = 0; i < 100; ++i) {
        int k = 1 + static_cast<int>(rng() % 3);
        QRatFunc coeff = testutil::random_ratfunc(rng, 5, true);
        KDifferential d(k, coeff);
        StratumSignature s = stratum_of(d);
        CHECK(s.sum() == -2 * k);
    }
}

TEST_CASE("divisor of a product is the sum of divisors") {
    Rng rng(37);
    for (int i = 0; i < 40; ++i) {
        int k1 = 1 + static_cast<int>(rng() % 2);
        int k2 = 1 + static_cast<int>(rng() % 2);
        KDifferential d1(k1, testutil::random_ratfunc(rng, 4, true));
        KDifferential d2(k2, testutil::random_ratfunc(rng, 4, true));
        Divisor sum = add_divisors(divisor_of(d1), divisor_of(d2));
        Divisor prod = divisor_of(d1 * d2);
        CHECK(same_divisor(sum, prod));
    }
}

TEST_CASE("stratum is invariant under the chart change t -> 1/t") {
    Rng rng(41);
    for (int i = 0; i < 50; ++i) {
        int k = 1 + static_cast<int>(rng() % 3);
        KDifferential d(k, testutil::random_ratfunc(rng, 5, true));
        StratumSignature here = stratum_of(d);
        StratumSignature there = stratum_of(d.chart_at_infinity());
        CHECK(here == there);
    }
}

TEST_CASE("monomial normal form") {
    QPoly t = QPoly::t();
    SUBCASE("9 t^4") {
        KDifferential d(2, QRatFunc(QPoly(9) * t.pow(4)));
        auto mono = monomial_normal_form(d);
        REQUIRE(mono.has_value());
        CHECK(mono->first == Rat(9));
        CHECK(mono->second == 4);
    }
    SUBCASE("negative exponent") {
        KDifferential d(2, QRatFunc(QPoly(3), t.pow(2)));
        auto mono = monomial_normal_form(d);
        REQUIRE(mono.has_value());
        CHECK(mono->first == Rat(3));
        CHECK(mono->second == -2);
    }
    SUBCASE("t^2 + 1 is not a monomial") {
        KDifferential d(2, QRatFunc(t * t + QPoly(1)));
        CHECK(!monomial_normal_form(d).has_value());
    }
    SUBCASE("exact non-monomial differential carries a k-divisible zero") {
        // semicubic: zeros at t (order 2, divisible by k=2) and t^2+4/9
        KDifferential d(2, QRatFunc(t * t * (QPoly(9) * t * t + QPoly(4))));
        CHECK(!monomial_normal_form(d).has_value());
        Divisor div = divisor_of(d);
        bool has_k_divisible_zero = false;
        for (const auto& [f, o] : div.finite)
            if (o > 0 && o % d.k == 0) has_k_divisible_zero = true;
        CHECK(has_k_divisible_zero);
    }
}
