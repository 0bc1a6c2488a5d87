#include <doctest.h>

#include <cmath>
#include <random>

#include "zetaderiv/dd.hpp"

using namespace zetaderiv;

TEST_CASE("dd arithmetic round trips against long double") {
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> dist(0.5, 2.0);
    for (int i = 0; i < 1000; ++i) {
        double a = dist(rng) * std::pow(10.0, int(rng() % 9));
        double b = dist(rng);
        DD s = add(DD{a}, DD{b});
        long double ref = static_cast<long double>(a) + b;
        CHECK(std::fabs(static_cast<double>(
                  (static_cast<long double>(s.hi) + s.lo) - ref)) <=
              std::fabs(a) * 1e-25 + 1e-25);
        DD p = mul(DD{a}, DD{b});
        long double refp = static_cast<long double>(a) * b;
        CHECK(std::fabs(static_cast<double>(
                  (static_cast<long double>(p.hi) + p.lo) - refp)) <=
              std::fabs(static_cast<double>(refp)) * 1e-25);
    }
}

TEST_CASE("dd_log matches std::log and refines it") {
    // hi part must agree with libm; hi+lo must be a strictly better log.
    for (double x : {2.0, 3.0, 10.0, 123456.0, 0.25, 6.283185307179586}) {
        DD l = dd_log(x);
        CHECK(l.hi == doctest::Approx(std::log(x)).epsilon(1e-15));
        // exp(hi)*exp(lo) == x to double roundoff
        double back = std::exp(l.hi) * std::exp(l.lo);
        CHECK(back == doctest::Approx(x).epsilon(1e-15));
    }
}

TEST_CASE("dd_log is additive to dd precision") {
    // log(a*b) = log(a) + log(b); residual must sit far below double eps.
    DD l6 = dd_log(6.0);
    DD lsum = add(dd_log(2.0), dd_log(3.0));
    DD diff = sub(l6, lsum);
    CHECK(std::fabs(diff.to_double()) < 1e-30);
}

TEST_CASE("mod_two_pi reduces large phases exactly") {
    // x = k * 2pi + r with known r, k large
    double r = 1.2345678901234567;
    for (double k : {1.0, 1e6, 1e9, 1e12}) {
        DD x = add(mul(dd_const::two_pi, k), r);
        DD red = mod_two_pi(x);
        CHECK(std::fabs(red.to_double() - r) < 1e-15 * (1.0 + k * 1e-12));
    }
}

TEST_CASE("mod_two_pi result lies in [0, 2pi)") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> dist(-1e9, 1e9);
    for (int i = 0; i < 2000; ++i) {
        DD red = mod_two_pi(DD{dist(rng)});
        CHECK(red.hi >= 0.0);
        CHECK(red.hi < 6.2831853071795865);
    }
}
