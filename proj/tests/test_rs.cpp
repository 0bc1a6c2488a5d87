#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "oracle.hpp"
#include "zetaderiv/errors.hpp"
#include "zetaderiv/rs.hpp"

using namespace zetaderiv;

TEST_CASE("rs_z rejects t below the cutoff") {
    CHECK_THROWS_AS(rs_z(3.0), DomainError);
}

TEST_CASE("rs_z returns a real scalar at sample heights") {
    for (double t : {50.0, 500.0, 5000.0}) {
        ZEvaluation ev = rs_z(t);
        CHECK(std::isfinite(ev.z));
        CHECK(ev.main_sum_length >= 1);
        CHECK(ev.est_error >= 0.0);
    }
    // frozen reference values
    CHECK(rs_z(100.0).z == doctest::Approx(2.6926970566644634750).epsilon(1e-11));
    CHECK(rs_z(50.0).z == doctest::Approx(-0.34073500595502498275).epsilon(1e-11));
    CHECK(rs_z(5000.0).z == doctest::Approx(-0.80425723635293985).epsilon(1e-11));
}

TEST_CASE("the first zero is bracketed by a sign change") {
    CHECK(rs_z(14.0).z * rs_z(15.0).z < 0.0);
}

TEST_CASE("rs_z agrees with the Euler-Maclaurin oracle to 1e-8") {
    std::mt19937_64 rng(271828);
    std::uniform_real_distribution<double> dist(10.0, 1e4);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        double t = dist(rng);
        double err = std::fabs(rs_z(t).z - oracle::z_oracle(t));
        worst = std::max(worst, err);
        CHECK(err <= 1e-8);
    }
    MESSAGE("worst |rs_z - Z_em| over 100 samples: ", worst);
}

TEST_CASE("oracle-path realness: imag residue of e^{i theta} zeta") {
    for (double t : {12.0, 100.0, 987.0, 5000.0}) {
        auto [re, im] = oracle::z_em(t);
        ZEvaluation ev = rs_z(t);
        CHECK(std::fabs(static_cast<double>(im)) <=
              std::max(10.0 * ev.est_error, 1e-12));
        (void)re;
    }
}

TEST_CASE("est_error is weakly decreasing in the correction order") {
    PrecisionPolicy pol;
    pol.target_abs_error = 0.0;  // force the order to the cap
    for (double t : {10.0, 25.0, 100.0, 3333.0}) {
        double prev = HUGE_VAL;
        for (int j = 0; j <= 12; ++j) {
            pol.max_correction_order = j;
            ZEvaluation ev = rs_z(t, pol);
            CHECK(ev.correction_order == j);
            CHECK(ev.est_error <= prev * (1.0 + 1e-12));
            prev = ev.est_error;
        }
    }
}

TEST_CASE("raising the correction order never degrades accuracy beyond est") {
    PrecisionPolicy pol;
    pol.target_abs_error = 0.0;
    for (double t : {11.0, 14.9, 40.0, 320.0}) {
        double ref = oracle::z_oracle(t);
        pol.max_correction_order = 1;
        double prev_err = std::fabs(rs_z(t, pol).z - ref);
        double prev_est = rs_z(t, pol).est_error;
        for (int j = 2; j <= 12; ++j) {
            pol.max_correction_order = j;
            ZEvaluation ev = rs_z(t, pol);
            double err = std::fabs(ev.z - ref);
            CHECK(err <= prev_err + prev_est);
            prev_err = err;
            prev_est = ev.est_error;
        }
    }
}

TEST_CASE("observed error stays within est_error") {
    std::mt19937_64 rng(31415);
    std::uniform_real_distribution<double> dist(7.0, 2000.0);
    for (int i = 0; i < 200; ++i) {
        double t = dist(rng);
        ZEvaluation ev = rs_z(t);
        double err = std::fabs(ev.z - oracle::z_oracle(t));
        CHECK(err <= std::max(ev.est_error, 2e-13));
    }
}

TEST_CASE("zeta_critical modulus equals |Z|") {
    for (double t : {9.0, 77.7, 1234.5}) {
        CHECK(std::abs(zeta_critical(t)) ==
              doctest::Approx(std::fabs(rs_z(t).z)).epsilon(1e-15));
    }
}

TEST_CASE("zeta_critical vanishes at the first zero") {
    CHECK(std::abs(zeta_critical(14.134725141734694)) <= 1e-6);
}

TEST_CASE("zeta_critical(30) matches the oracle to >= 8 digits") {
    std::complex<double> v = zeta_critical(30.0);
    std::complex<long double> ref = oracle::zeta_em(30.0L);
    CHECK(std::abs(v - std::complex<double>(static_cast<double>(ref.real()),
                                            static_cast<double>(ref.imag()))) <
          1e-9);
    // frozen reference value
    CHECK(v.real() == doctest::Approx(-0.12064228759004369991).epsilon(1e-8));
    CHECK(v.imag() == doctest::Approx(-0.58369121476370628876).epsilon(1e-8));
}
