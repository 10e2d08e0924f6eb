#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "annulus/kernel.hpp"
#include "annulus/linalg.hpp"
#include "annulus/plasma.hpp"
#include "annulus/quadrature.hpp"
#include "annulus/special.hpp"

using namespace annulus;
using Complex = std::complex<double>;

namespace {
constexpr double kPi = 3.141592653589793238462643383279503;
}

TEST_CASE("Q=q=0 polynomial sum collapses to the binomial closed form") {
    // I_j = B(j, N+1-j)/2 makes H(z) = N (1+z)^{N-1}
    const int N = 6;
    kernel::KernelEvaluator ev({N, 0.0, 0.0, 0.5});
    for (const Complex z : {Complex(0.3, 0.0), Complex(0.4, 1.1), Complex(-0.2, 0.7),
                            Complex(2.0, -1.5)}) {
        const Complex got = ev.kernel_H_sum(z).value();
        const Complex want = static_cast<double>(N) * std::pow(1.0 + z, N - 1);
        CHECK(std::abs(got - want) <= 1e-12 * std::abs(want));
    }
}

TEST_CASE("the two H representations differ by the z^{QN} monomial") {
    linalg::RngState rng(5ULL);
    for (const auto& p : {ModelParams{12, 1.0, 1.0, 0.5}, ModelParams{9, 2.0, 0.5, 0.5},
                          ModelParams{8, 0.5, 0.0, 0.5}}) {
        kernel::KernelEvaluator ev(p);
        for (int i = 0; i < 40; ++i) {
            const double r = 0.1 + 2.4 * rng.uniform();
            const double th = (2.0 * rng.uniform() - 1.0) * (kPi - 0.05);
            const Complex z = r * Complex(std::cos(th), std::sin(th));
            const Complex lhs = ev.kernel_H_tilde(z).value();
            const Complex rhs = std::pow(z, p.Q * p.N) * ev.kernel_H_sum(z).value();
            CHECK(std::abs(lhs - rhs) <= 1e-10 * std::abs(lhs));
        }
    }
}

TEST_CASE("complex J solves its defining differential equation") {
    // B(a,b) J'(z) = z^{a-1} (1+z)^{-a-b}, checked by central differences
    const special::BetaParams p{6.0, 9.0};
    const double log_norm = special::log_beta(p);
    for (const Complex z : {Complex(0.8, 0.5), Complex(-0.3, 0.9), Complex(1.7, -2.2)}) {
        const double h = 1e-5;
        const Complex d1 = (special::incomplete_beta_J(p, z + h) -
                            special::incomplete_beta_J(p, z - h)) /
                           (2.0 * h);
        const Complex want = std::exp((p.a - 1.0) * std::log(z) -
                                      (p.a + p.b) * std::log(1.0 + z) - log_norm);
        CHECK(std::abs(d1 - want) <= 1e-8 * std::abs(want));
    }
}

TEST_CASE("kernel is Hermitian with a real nonnegative diagonal") {
    kernel::KernelEvaluator ev({15, 1.0, 2.0, 0.5});
    const kernel::PlanarPoint pts[] = {{0.6, 0.1}, {0.9, 2.8}, {1.2, -1.3}};
    for (const auto& p1 : pts) {
        const Complex d = ev.kernel_K(p1, p1);
        CHECK(d.imag() == doctest::Approx(0.0).epsilon(1e-14));
        CHECK(d.real() >= 0.0);
        for (const auto& p2 : pts) {
            const Complex k12 = ev.kernel_K(p1, p2);
            const Complex k21 = ev.kernel_K(p2, p1);
            CHECK(std::abs(k12 - std::conj(k21)) <= 1e-12 * std::abs(k12));
        }
    }
}

TEST_CASE("diagonal kernel equals the density in both gauges") {
    kernel::KernelEvaluator ev({10, 1.0, 1.0, 0.5});
    for (double r : {0.75, 1.0, 1.3}) {
        const kernel::PlanarPoint p{r, 0.4};
        CHECK(ev.density_rho1(r) ==
              doctest::Approx(ev.kernel_K(p, p, kernel::Gauge::IncompleteBeta).real())
                  .epsilon(1e-11));
        CHECK(ev.density_rho1(r) ==
              doctest::Approx(ev.kernel_K(p, p, kernel::Gauge::Sum).real())
                  .epsilon(1e-11));
    }
}

TEST_CASE("reproducing property: int K(1,2) K(2,3) d2 = K(1,3)") {
    kernel::KernelEvaluator ev({6, 1.0, 1.0, 0.5});
    const kernel::PlanarPoint p1{0.8, 0.0}, p3{1.1, 0.9};
    auto integrand_theta = [&](double r2) {
        return quad::integrate_complex(
            [&](double th2) {
                const kernel::PlanarPoint p2{r2, th2};
                return ev.kernel_K(p1, p2) * ev.kernel_K(p2, p3);
            },
            0.0, 2.0 * kPi, 1e-9);
    };
    Complex total(0.0, 0.0);
    // split at the support scale; the outer tail is mapped to (0,1]
    total += quad::integrate_complex([&](double r2) { return r2 * integrand_theta(r2); },
                                     0.0, 4.0, 1e-9);
    total += quad::integrate_complex(
        [&](double u) {
            const double r2 = 4.0 + u / (1.0 - u);
            return r2 * integrand_theta(r2) / ((1.0 - u) * (1.0 - u));
        },
        0.0, 1.0, 1e-9);
    const Complex want = ev.kernel_K(p1, p3);
    CHECK(std::abs(total - want) <= 1e-7 * std::abs(want));
}

TEST_CASE("radial CDF is a CDF and integrates the density") {
    kernel::KernelEvaluator ev({8, 0.5, 2.0, 0.5});
    CHECK(ev.radial_cdf(0.0) == 0.0);
    CHECK(ev.radial_cdf(60.0) == doctest::Approx(1.0).epsilon(1e-12));
    double prev = 0.0;
    for (double r = 0.2; r <= 2.0; r += 0.2) {
        const double f = ev.radial_cdf(r);
        CHECK(f >= prev);
        prev = f;
        const double mass = 2.0 * kPi / 8.0 *
                            quad::integrate(
                                [&](double s) { return ev.density_rho1(s) * s; },
                                0.0, r, 1e-11);
        CHECK(f == doctest::Approx(mass).epsilon(1e-9));
    }
}

TEST_CASE("limit density and local scale") {
    const ModelParams p{50, 1.0, 1.0, 0.5};
    const auto g = plasma::geometry(p);
    CHECK(kernel::density_limit(0.5 * g.r_Q, p) == 0.0);
    CHECK(kernel::density_limit(2.0 * g.r_q, p) == 0.0);
    CHECK(kernel::density_limit(1.0, p) == doctest::Approx(kernel::rho_b(1.0, p)));
    CHECK_THROWS(kernel::density_limit(g.r_Q, p));
    CHECK(kernel::local_scale(1.0, p) ==
          doctest::Approx(std::sqrt(kPi * kernel::rho_b(1.0, p))).epsilon(1e-14));
}

TEST_CASE("two-point function is nonpositive and rho_k determinants match") {
    kernel::KernelEvaluator ev({12, 1.0, 1.0, 0.5});
    const kernel::PlanarPoint a{0.9, 0.0}, b{1.05, 0.7};
    CHECK(kernel::rho2_truncated(a, b, ev) <= 0.0);
    const double rho2 = kernel::rho_k({a, b}, ev);
    const double via_trunc = ev.density_rho1(a.r) * ev.density_rho1(b.r) +
                             kernel::rho2_truncated(a, b, ev);
    CHECK(rho2 == doctest::Approx(via_trunc).epsilon(1e-10));
    CHECK(kernel::rho_k({a}, ev) == doctest::Approx(ev.density_rho1(a.r)).epsilon(1e-12));
}

TEST_CASE("kernel stays finite across the angular cut") {
    kernel::KernelEvaluator ev({20, 1.0, 1.0, 0.5});
    const kernel::PlanarPoint a{1.1, 0.0};
    for (double dth : {kPi, kPi - 1e-9, -kPi + 1e-9}) {
        const Complex k = ev.kernel_K(a, {1.0, dth});
        CHECK(std::isfinite(k.real()));
        CHECK(std::isfinite(k.imag()));
    }
    // continuity: approaching the cut from both sides gives conjugate values
    const Complex up = ev.kernel_K(a, {1.0, kPi - 1e-7});
    const Complex dn = ev.kernel_K(a, {1.0, -kPi + 1e-7});
    CHECK(std::abs(up - std::conj(dn)) <= 1e-5 * std::abs(up));
}

TEST_CASE("scaled limits: bulk Gaussian, edge erf, and the edge two-point law") {
    CHECK(std::abs(kernel::bulk_limit_kernel(0.0, 0.0, 1.0, 0.5)) ==
          doctest::Approx(std::exp(-0.5 * 1.25)).epsilon(1e-14));
    // diagonal edge kernel interpolates 0 -> 1/2 -> 1
    CHECK(std::abs(kernel::edge_limit_kernel(-4.0, 0.0, -4.0, 0.0)) < 1e-6);
    CHECK(std::abs(kernel::edge_limit_kernel(0.0, 0.0, 0.0, 0.0)) ==
          doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(kernel::edge_limit_kernel(4.0, 0.0, 4.0, 0.0)) ==
          doctest::Approx(1.0).epsilon(1e-6));
    CHECK(kernel::edge_two_point_g(0.0, 0.0) == doctest::Approx(2.0 / kPi));
    CHECK(kernel::edge_two_point_limit(0.0, 0.0, kPi) ==
          doctest::Approx(-(2.0 / kPi) / (16.0 * kPi * kPi)).epsilon(1e-13));
    CHECK_THROWS(kernel::edge_two_point_limit(0.0, 0.0, 0.0));
}

TEST_CASE("finite-N edge profile approaches the erf law") {
    const ModelParams p{120, 1.0, 1.0, 0.5};
    kernel::KernelEvaluator ev(p);
    const double r0 = plasma::geometry(p).r_Q;
    const double sc = kernel::local_scale(r0, p);
    for (double X : {-1.0, 0.0, 1.0}) {
        const double r = r0 + X / sc;
        const double got = ev.density_rho1(r) / kernel::rho_b(r, p);
        CHECK(std::fabs(got - special::crossover_profile(2.0 * X)) < 0.02);
    }
}
