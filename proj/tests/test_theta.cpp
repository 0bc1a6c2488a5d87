#include <doctest.h>

#include <cmath>

#include "oracle.hpp"
#include "zetaderiv/errors.hpp"
#include "zetaderiv/theta.hpp"

using namespace zetaderiv;

namespace {
constexpr double kTwoPi = 6.283185307179586476925287;
}

TEST_CASE("theta rejects t below the cutoff") {
    CHECK_THROWS_AS(theta(6.9), DomainError);
    CHECK_THROWS_AS(theta(-3.0), DomainError);
    CHECK_NOTHROW(theta(7.0));
}

TEST_CASE("the two leading terms cancel at t = 2 pi e") {
    // log(t/2pi) = 1 there, so theta collapses to -pi/8 plus the tail.
    double t = kTwoPi * M_E;
    PhasePoint p = theta(t);
    CHECK(p.theta == doctest::Approx(-0.3914790493538979).epsilon(1e-12));
    double two_tail_terms = -M_PI / 8 + 1.0 / (48.0 * t) +
                            7.0 / (5760.0 * t * t * t);
    CHECK(p.theta == doctest::Approx(two_tail_terms).epsilon(1e-9));
}

TEST_CASE("theta(100) matches the Gamma-based oracle to >= 10 digits") {
    PhasePoint p = theta(100.0);
    long double ref = oracle::theta_gamma(100.0L);
    CHECK(std::fabs(p.theta - static_cast<double>(ref)) < 1e-11);
    // frozen reference value (independent multiprecision evaluation)
    CHECK(p.theta == doctest::Approx(87.97216523178721962548).epsilon(1e-14));
}

TEST_CASE("theta matches the Gamma-based oracle across heights") {
    // The asymptotic series carries an exponentially small remainder on the
    // order of e^{-pi t} (1.4e-10 at t=7, gone by t=10); the tolerance
    // includes it.
    for (double t : {7.0, 14.0, 33.7, 250.0, 4096.5, 99999.0}) {
        PhasePoint p = theta(t);
        long double ref = oracle::theta_gamma(t);
        double tol = 1e-11 * std::max(1.0, std::fabs(p.theta) * 1e-3) +
                     3e-10 * std::exp(-M_PI * (t - 7.0));
        CHECK(std::fabs(p.theta - static_cast<double>(ref)) < tol);
    }
}

TEST_CASE("dtheta agrees with a central difference") {
    double t = 1000.0, eps = 1e-4;
    PhasePoint p = theta(t);
    double fd = (theta(t + eps).theta - theta(t - eps).theta) / (2.0 * eps);
    CHECK(p.dtheta == doctest::Approx(fd).epsilon(1e-8));
    CHECK(p.dtheta > 0.0);
}

TEST_CASE("dtheta is positive from the cutoff upwards") {
    for (double t = 7.0; t < 1e6; t *= 1.7) {
        CHECK(theta(t).dtheta > 0.0);
    }
}

TEST_CASE("theta_mod is consistent with theta mod 2pi") {
    // 1000 points per decade over t in [10, 1e5]; the double `theta` field
    // itself carries eps*|theta| of phase noise, so the tolerance scales.
    for (double decade = 10.0; decade < 1e5; decade *= 10.0) {
        for (int i = 0; i < 1000; ++i) {
            double t = decade * (1.0 + 9.0 * i / 1000.0);
            PhasePoint p = theta(t);
            double ref = std::remainder(p.theta, kTwoPi);
            if (ref < 0) ref += kTwoPi;
            double diff = std::remainder(p.theta_mod - ref, kTwoPi);
            double tol = 1e-12 + 8.0 * 2.22e-16 * std::fabs(p.theta);
            CHECK(std::fabs(diff) <= tol);
        }
    }
}

TEST_CASE("theta_mod lies in [0, 2pi)") {
    for (double t = 7.0; t < 1e7; t *= 1.31) {
        PhasePoint p = theta(t);
        CHECK(p.theta_mod >= 0.0);
        CHECK(p.theta_mod < kTwoPi);
    }
}

TEST_CASE("unreachable phase precision raises PrecisionError") {
    PrecisionPolicy strict;
    strict.phase_digits = 12;
    CHECK_THROWS_AS(theta(1e21, strict), PrecisionError);
    CHECK_NOTHROW(theta(1e8, strict));
}
