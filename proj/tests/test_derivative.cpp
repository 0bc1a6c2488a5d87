#include <doctest.h>

#include <cmath>
#include <complex>

#include "oracle.hpp"
#include "zetaderiv/derivative.hpp"
#include "zetaderiv/errors.hpp"

using namespace zetaderiv;

TEST_CASE("central difference is exact on quadratics") {
    auto q = [](double t) { return 3.25 * t * t - 11.0 * t + 7.5; };
    for (double t : {20.0, 137.0, 9999.0}) {
        auto [value, err] = z_prime_central(q, t, 0.125, 0.0);
        CHECK(value == doctest::Approx(6.5 * t - 11.0).epsilon(1e-12));
        CHECK(err < 1e-9);
    }
}

TEST_CASE("central difference rejects bad inputs") {
    CHECK_THROWS_AS(z_prime_central(10.0, -1e-5), DomainError);
    CHECK_THROWS_AS(z_prime_central(7.0, 0.5), DomainError);
}

TEST_CASE("halving the step keeps the value within the error estimate") {
    double g1 = 14.134725141734694;
    auto [v1, e1] = z_prime_central(g1, 1e-3);
    auto [v2, e2] = z_prime_central(g1, 5e-4);
    CHECK(std::fabs(v1 - v2) <= 4.0 * e1);
    (void)e2;
}

TEST_CASE("|Z'(gamma_1)| matches the oracle derivative to 6+ digits") {
    double g1 = 14.134725141734694;
    auto [value, err] = z_prime_central(g1, 1e-5);
    // oracle: central difference of the Euler-Maclaurin zeta in long double
    long double h = 1e-6L;
    std::complex<long double> dz =
        (oracle::zeta_em(g1 + h) - oracle::zeta_em(g1 - h)) / (2.0L * h);
    double ref = static_cast<double>(std::abs(dz));
    CHECK(std::fabs(value) == doctest::Approx(ref).epsilon(1e-6));
    CHECK(err < 5e-4);
}

TEST_CASE("main-sum derivative collapses to -2 theta' sin(theta) when nu = 1") {
    for (double t : {9.0, 12.3, 16.0}) {
        double direct = -2.0 * theta(t).dtheta * std::sin(theta(t).theta);
        CHECK(detail::main_sum_deriv(t, {}) ==
              doctest::Approx(direct).epsilon(1e-12));
    }
}

TEST_CASE("analytic and central derivatives agree at the first zeros") {
    auto [zeros, count] = scan_zeros(7.0, 200.0);
    REQUIRE(zeros.size() > 40);
    for (const auto& z : zeros) {
        auto [central, err] = z_prime_central(z.gamma, 1e-5);
        double analytic = z_prime_analytic(z.gamma);
        CHECK(std::fabs(central - analytic) <= 1e-4);
        CHECK(central * analytic > 0.0);  // sign agreement
        (void)err;
    }
}

TEST_CASE("zeta_prime_at_zero produces a consistent record") {
    ZeroRecord z = refine_zero(14.0, 15.0);
    z.index = 1;
    StepPolicy abs_step;
    abs_step.mode = StepPolicy::Mode::absolute;
    DerivativeRecord rec = zeta_prime_at_zero(z, abs_step);
    CHECK(rec.h == 1e-5);
    CHECK(rec.abs_zeta_prime == std::fabs(rec.zprime));
    CHECK(std::abs(rec.zeta_prime) ==
          doctest::Approx(rec.abs_zeta_prime).epsilon(1e-14));
    CHECK(rec.log_abs == doctest::Approx(std::log(rec.abs_zeta_prime)));
    CHECK(!rec.small_flagged);
    CHECK(rec.err_est >= 0.0);
    // relative mode picks h from the local mean spacing
    DerivativeRecord rel = zeta_prime_at_zero(z);
    CHECK(rel.h ==
          doctest::Approx(1e-4 * 2.0 * M_PI / std::log(z.gamma / (2 * M_PI))));
}

TEST_CASE("log_abs is stable under step halving near t = 1e4") {
    auto [zeros, count] = scan_zeros(10000.0, 10005.0);
    REQUIRE(!zeros.empty());
    StepPolicy a, b;
    a.h_rel = 1e-4;
    b.h_rel = 5e-5;
    DerivativeRecord ra = zeta_prime_at_zero(zeros[0], a);
    DerivativeRecord rb = zeta_prime_at_zero(zeros[0], b);
    CHECK(std::fabs(ra.log_abs - rb.log_abs) <= 1e-4);
}

TEST_CASE("richardson flag records the halve-h shift") {
    ZeroRecord z = refine_zero(21.0, 21.5);
    z.index = 2;
    StepPolicy st;
    st.richardson = true;
    DerivativeRecord rec = zeta_prime_at_zero(z, st);
    CHECK(rec.richardson_delta > 0.0);
    CHECK(rec.richardson_delta < 1e-5);
}

TEST_CASE("batch output is order-preserving and thread-count independent") {
    auto [zeros, count] = scan_zeros(100.0, 160.0);
    auto par = derivatives_batch(zeros, {}, {}, true);
    auto ser = derivatives_batch(zeros, {}, {}, false);
    REQUIRE(par.size() == zeros.size());
    for (std::size_t i = 0; i < par.size(); ++i) {
        CHECK(par[i].zprime == ser[i].zprime);  // bit identical
        CHECK(par[i].zero.index == zeros[i].index);
        CHECK(par[i].abs_zeta_prime > 0.0);
    }
}
