#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "annulus/kernel.hpp"
#include "annulus/linalg.hpp"
#include "annulus/stats.hpp"

using namespace annulus;
using Complex = std::complex<double>;

TEST_CASE("statistic catalog and polynomial statistics") {
    const auto s1 = stats::catalog_statistic("s_over_1_plus_s");
    CHECK(s1.alpha(1.0) == doctest::Approx(0.5));
    CHECK(s1.alpha_prime(1.0) == doctest::Approx(0.25));
    const auto s2 = stats::catalog_statistic("log1p_s");
    CHECK(s2.alpha(std::exp(1.0) - 1.0) == doctest::Approx(1.0));
    CHECK_THROWS(stats::catalog_statistic("no_such_statistic"));

    const auto poly = stats::polynomial_statistic({1.0, -2.0, 3.0});
    CHECK(poly.alpha(2.0) == doctest::Approx(1.0 - 4.0 + 12.0));
    CHECK(poly.alpha_prime(2.0) == doctest::Approx(-2.0 + 12.0));
    CHECK_THROWS(stats::polynomial_statistic({}));
}

TEST_CASE("finite differences validate against analytic derivatives") {
    auto stat = stats::catalog_statistic("log1p_s");
    const auto analytic = stat.alpha_prime;
    stat.alpha_prime = nullptr;
    for (double s : {0.3, 1.0, 4.0})
        CHECK(stats::statistic_derivative(stat, s) ==
              doctest::Approx(analytic(s)).epsilon(1e-9));
}

TEST_CASE("N=1 moments are the beta-prime closed forms") {
    // single j: s is beta-prime(a, b) with a = Q+1, b = q+1;
    // E s = a/(b-1), Var s = a(a+b-1)/((b-2)(b-1)^2)
    const ModelParams p{1, 2.0, 3.0, 0.5};
    const kernel::KernelEvaluator ev(p);
    const auto stat = stats::catalog_statistic("s");
    const double a = 3.0, b = 4.0;
    CHECK(stats::mean_exact(stat, ev) == doctest::Approx(a / (b - 1.0)).epsilon(1e-10));
    CHECK(stats::variance_functional_exact(stat, ev) ==
          doctest::Approx(a * (a + b - 1.0) / ((b - 2.0) * (b - 1.0) * (b - 1.0)))
              .epsilon(1e-10));
}

TEST_CASE("trivial statistics: constants and normalization") {
    const ModelParams p{30, 1.0, 1.0, 0.5};
    const kernel::KernelEvaluator ev(p);
    const auto one = stats::catalog_statistic("const");
    CHECK(stats::mean_exact(one, ev) == doctest::Approx(30.0).epsilon(1e-9));
    CHECK(stats::mean_limit_per_particle(one, p) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(stats::variance_functional_exact(one, ev) ==
          doctest::Approx(0.0).epsilon(1e-10));
    CHECK(stats::variance_limit(one, p) == doctest::Approx(0.0));
}

TEST_CASE("mean of s/(1+s) is N/2 when Q=q") {
    // the Q=q annulus is symmetric under s -> 1/s, and alpha + alpha o inv = 1
    const ModelParams p{40, 1.0, 1.0, 0.5};
    const kernel::KernelEvaluator ev(p);
    const auto stat = stats::catalog_statistic("s_over_1_plus_s");
    CHECK(stats::mean_exact(stat, ev) == doctest::Approx(20.0).epsilon(1e-10));
    CHECK(40.0 * stats::mean_limit_per_particle(stat, p) ==
          doctest::Approx(20.0).epsilon(1e-12));
}

TEST_CASE("variance limit: interval form equals the gradient form") {
    const ModelParams p{10, 1.0, 1.0, 0.5};
    for (const char* name : {"s", "s_over_1_plus_s", "log1p_s"}) {
        const auto stat = stats::catalog_statistic(name);
        CHECK(stats::variance_limit(stat, p) ==
              doctest::Approx(stats::variance_limit_gradient_form(stat, p))
                  .epsilon(1e-8));
    }
    // hand value for alpha(s)=s at Q=q=1: int_{1/2}^{2} s ds = 15/8
    CHECK(stats::variance_limit(stats::catalog_statistic("s"), p) ==
          doctest::Approx(15.0 / 8.0).epsilon(1e-12));
}

TEST_CASE("finite-N variance approaches the limit functional") {
    const auto stat = stats::catalog_statistic("s_over_1_plus_s");
    const ModelParams base{20, 1.0, 1.0, 0.5};
    const double lim = stats::variance_limit(stat, base);
    double prev_gap = 1e9;
    for (int N : {20, 50, 100}) {
        const ModelParams p{N, 1.0, 1.0, 0.5};
        const kernel::KernelEvaluator ev(p);
        const double gap = std::fabs(stats::variance_functional_exact(stat, ev) - lim);
        CHECK(gap < prev_gap);
        prev_gap = gap;
    }
    CHECK(prev_gap < 0.05 * lim);
}

TEST_CASE("characteristic function basics") {
    const ModelParams p{25, 1.0, 1.0, 0.5};
    const kernel::KernelEvaluator ev(p);
    const auto stat = stats::catalog_statistic("s_over_1_plus_s");
    CHECK(std::abs(stats::char_fn_exact(stat, 0.0, ev) - 1.0) < 1e-12);
    // constant statistic: pure phase e^{ikNc}
    const auto one = stats::catalog_statistic("const");
    const Complex cf = stats::char_fn_exact(one, 0.7, ev);
    CHECK(std::abs(cf - std::exp(Complex(0.0, 0.7 * 25.0))) < 1e-9);
    // modulus bounded by 1 and nonincreasing near 0
    double prev = 1.0;
    for (double k : {0.1, 0.2, 0.3, 0.4, 0.5}) {
        const double m = std::abs(stats::char_fn_exact(stat, k, ev));
        CHECK(m <= 1.0 + 1e-12);
        CHECK(m <= prev + 1e-12);
        prev = m;
    }
}

TEST_CASE("characteristic function against its Gaussian surrogate at N=50") {
    const ModelParams p{50, 1.0, 1.0, 0.5};
    const kernel::KernelEvaluator ev(p);
    const auto stat = stats::catalog_statistic("s_over_1_plus_s");
    const double k = 0.7;
    const Complex exact = stats::char_fn_exact(stat, k, ev);
    const Complex surrogate =
        std::exp(Complex(-0.5 * k * k * stats::variance_functional_exact(stat, ev),
                         k * stats::mean_exact(stat, ev)));
    CHECK(std::abs(exact - surrogate) < 0.05);
    const Complex gaussian = stats::gaussian_limit_char_fn(stat, k, p);
    CHECK(std::abs(gaussian) ==
          doctest::Approx(std::exp(-0.5 * k * k * stats::variance_limit(stat, p)))
              .epsilon(1e-12));
}

TEST_CASE("Anderson-Darling p-value behaves") {
    linalg::RngState rng(1234ULL);
    std::vector<double> normal, uniform;
    for (int i = 0; i < 500; ++i) {
        normal.push_back(rng.normal());
        uniform.push_back(rng.uniform());
    }
    CHECK(stats::anderson_darling_normality_p(normal) > 0.01);
    CHECK(stats::anderson_darling_normality_p(uniform) < 0.01);
    CHECK_THROWS(stats::anderson_darling_normality_p({1.0, 2.0, 3.0}));
}

TEST_CASE("Monte Carlo fluctuations agree with the exact moments") {
    const auto stat = stats::catalog_statistic("s_over_1_plus_s");
    const auto rep = stats::monte_carlo_fluctuations(stat, {10, 20, 20}, 2000, 8675309ULL);
    CHECK(std::fabs(rep.mc_mean - rep.mean_exact) <= 3.0 * rep.mc_mean_stderr);
    CHECK(std::fabs(rep.mc_variance - rep.variance_exact) <=
          3.0 * rep.mc_variance_stderr);
    CHECK(rep.normality_p > 0.01);
    CHECK(rep.mc_mean_stderr > 0.0);
    CHECK(rep.mc_variance_stderr > 0.0);
    CHECK(rep.replicas == 2000);
    CHECK_THROWS(stats::monte_carlo_fluctuations(stat, {10, 20, 20}, 50, 1ULL));
}

TEST_CASE("constant statistic is deterministic in Monte Carlo") {
    const auto one = stats::catalog_statistic("const");
    const auto rep = stats::monte_carlo_fluctuations(one, {4, 8, 8}, 200, 5ULL);
    CHECK(rep.mc_mean == doctest::Approx(4.0));
    CHECK(rep.mc_variance == doctest::Approx(0.0));
}
