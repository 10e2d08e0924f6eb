#include "annulus/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <numeric>
#include <sstream>

#include "annulus/ensemble.hpp"
#include "annulus/kernel.hpp"
#include "annulus/plasma.hpp"
#include "annulus/quadrature.hpp"
#include "annulus/special.hpp"
#include "annulus/stats.hpp"

namespace annulus::verify {
namespace {

constexpr double kPi = 3.141592653589793238462643383279503;
using Complex = std::complex<double>;

void check(std::vector<CheckResult>& out, const std::string& name, double measured,
           double tolerance, bool passed) {
    out.push_back({name, measured, tolerance, passed});
}

// measured must not exceed tolerance
void check_le(std::vector<CheckResult>& out, const std::string& name, double measured,
              double tolerance) {
    check(out, name, measured, tolerance, measured <= tolerance);
}

// measured must be at least the threshold
void check_ge(std::vector<CheckResult>& out, const std::string& name, double measured,
              double threshold) {
    check(out, name, measured, threshold, measured >= threshold);
}

// --- criterion 1: with Q=q=0 the density is the uniform spherical one -------

std::vector<CheckResult> spherical_reduction() {
    std::vector<CheckResult> checks;
    for (int N : {5, 10, 30}) {
        kernel::KernelEvaluator ev({N, 0.0, 0.0, 0.5});
        double worst = 0.0;
        for (int i = 1; i <= 50; ++i) {
            const double r = 0.1 * i;
            const double u = 1.0 + r * r;
            worst = std::max(worst,
                             std::fabs(ev.density_rho1(r) * kPi * u * u / N - 1.0));
        }
        check_le(checks, "uniform_density_N" + std::to_string(N), worst, 1e-10);
    }
    return checks;
}

// --- criterion 2: 2*pi*int rho_(1) r dr = N ---------------------------------

std::vector<CheckResult> density_normalization() {
    std::vector<CheckResult> checks;
    const std::tuple<int, double, double> sets[] = {{10, 1.0, 1.0}, {20, 0.5, 2.0},
                                                    {15, 2.0, 0.5}};
    for (const auto& [N, Q, q] : sets) {
        kernel::KernelEvaluator ev({N, Q, q, 0.5});
        const double total = 2.0 * kPi * quad::integrate_to_inf(
            [&](double r) { return ev.density_rho1(r) * r; }, 0.0, 1e-11);
        std::ostringstream name;
        name << "normalization_N" << N << "_Q" << Q << "_q" << q;
        check_le(checks, name.str(), std::fabs(total - N), 1e-7);
    }
    return checks;
}

// --- criterion 3: power-sum and incomplete-beta kernel gauges agree ----------

std::vector<CheckResult> kernel_gauge_equivalence() {
    std::vector<CheckResult> checks;
    const std::tuple<int, double, double> sets[] = {{50, 1.0, 1.0}, {30, 0.5, 1.5}};
    linalg::RngState rng(987654321ULL);
    for (const auto& [N, Q, q] : sets) {
        kernel::KernelEvaluator ev({N, Q, q, 0.5});
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const double r = 0.05 + 2.95 * rng.uniform();
            const double th = (2.0 * rng.uniform() - 1.0) * (kPi - 0.1);
            const Complex z = r * Complex(std::cos(th), std::sin(th));
            const Complex lhs = ev.kernel_H_tilde(z).value();
            const Complex rhs = std::pow(z, Q * N) * ev.kernel_H_sum(z).value();
            worst = std::max(worst, std::abs(lhs - rhs) / std::abs(lhs));
        }
        std::ostringstream name;
        name << "H_representations_N" << N << "_Q" << Q << "_q" << q;
        check_le(checks, name.str(), worst, 1e-9);
    }
    // k-point determinants are gauge independent
    kernel::KernelEvaluator ev({40, 1.0, 1.0, 0.5});
    const std::vector<kernel::PlanarPoint> pts = {
        {0.8, 0.2}, {1.1, 1.9}, {1.3, -2.4}};
    double worst = 0.0;
    for (int k = 1; k <= 3; ++k) {
        const std::vector<kernel::PlanarPoint> sub(pts.begin(), pts.begin() + k);
        const double d1 = kernel::rho_k(sub, ev, kernel::Gauge::IncompleteBeta);
        const double d2 = kernel::rho_k(sub, ev, kernel::Gauge::Sum);
        worst = std::max(worst, std::fabs(d1 - d2) / std::fabs(d1));
    }
    check_le(checks, "determinant_gauge_invariance_k_le_3", worst, 1e-8);
    return checks;
}

// --- criterion 4: matrix sampler reproduces the exact radial/angular laws ----

std::vector<CheckResult> sampler_vs_theory() {
    std::vector<CheckResult> checks;
    const MatrixDims d{10, 20, 20};
    const int replicas = 1000;
    const auto samples = ensemble::sample_eigenvalues(d, replicas, 20240901ULL);
    std::vector<double> radii, angles;
    radii.reserve(replicas * d.M);
    for (const auto& s : samples)
        for (const Complex z : s.points) {
            radii.push_back(std::abs(z));
            angles.push_back(std::arg(z));
        }
    std::sort(radii.begin(), radii.end());
    const kernel::KernelEvaluator ev(params_from_dims(d));
    const double n = static_cast<double>(radii.size());
    double ks = 0.0;
    for (std::size_t i = 0; i < radii.size(); ++i) {
        const double f = ev.radial_cdf(radii[i]);
        ks = std::max(ks, std::max(f - i / n, (i + 1) / n - f));
    }
    check_le(checks, "radial_ks_distance", ks, 0.02);

    const double r_lo = 1.0 / std::sqrt(2.0), r_hi = std::sqrt(2.0);
    const auto inside = std::count_if(radii.begin(), radii.end(), [&](double r) {
        return r >= r_lo && r <= r_hi;
    });
    check_ge(checks, "annulus_mass_fraction", inside / n, 0.95);

    const int bins = 20;
    std::vector<double> counts(bins, 0.0);
    for (double a : angles) {
        int b = static_cast<int>((a + kPi) / (2.0 * kPi) * bins);
        counts[std::clamp(b, 0, bins - 1)] += 1.0;
    }
    const double expect = n / bins;
    double chi2 = 0.0;
    for (double c : counts) chi2 += (c - expect) * (c - expect) / expect;
    const double p = special::gamma_q((bins - 1) / 2.0, chi2 / 2.0);
    check_ge(checks, "angular_chi2_p", p, 0.01);
    return checks;
}

// --- criterion 5: partition function against a direct configuration integral -

std::vector<CheckResult> partition_function_oracle() {
    std::vector<CheckResult> checks;
    // N=2, Q=q=0: the two-body configuration integral over the sphere surface
    // measure R^2 sin(theta) dtheta dphi, phi reduced to the relative angle
    // (a 2*pi factor), done by nested adaptive quadrature. Radial weight per
    // particle: sin(theta) |u|^{2(N-1)+2qN} |v|^{2QN} = sin(theta) cos^2(theta/2).
    const ModelParams p2{2, 0.0, 0.0, 0.5};
    auto w = [](double th) {
        const double c = std::cos(0.5 * th);
        return std::sin(th) * c * c;
    };
    auto t = [](double th) { return std::tan(0.5 * th); };
    const double inner3 = quad::integrate(
        [&](double phi) {
            return quad::integrate(
                [&](double th1) {
                    return quad::integrate(
                        [&](double th2) {
                            const double t1 = t(th1), t2 = t(th2);
                            return w(th1) * w(th2) *
                                   (t1 * t1 + t2 * t2 -
                                    2.0 * t1 * t2 * std::cos(phi));
                        },
                        0.0, kPi, 1e-11);
                },
                0.0, kPi, 1e-10);
        },
        0.0, 2.0 * kPi, 1e-9);
    const double R = p2.R;
    const double log_z_brute = std::log(0.5) - 2.0 * std::log(2.0 * R) -
                               2.0 * plasma::boltzmann_constant_K(p2) +
                               4.0 * std::log(R) + std::log(2.0 * kPi) +
                               std::log(inner3);
    const double log_z = plasma::log_partition_exact(p2);
    check_le(checks, "brute_force_N2",
             std::fabs(log_z_brute - log_z) / std::fabs(log_z), 1e-6);

    // gamma-product and Barnes-G forms agree on a parameter grid
    const std::tuple<int, double, double> grid[] = {
        {5, 1.0, 1.0}, {8, 0.5, 2.0}, {12, 2.0, 0.5}, {10, 0.2, 0.4}, {20, 1.0, 1.0}};
    double worst = 0.0;
    for (const auto& [N, Q, q] : grid) {
        const ModelParams p{N, Q, q, 0.5};
        const double ze = plasma::log_partition_exact(p);
        const double zb = plasma::log_partition_barnes(p);
        worst = std::max(worst, std::fabs(ze - zb) / std::max(1.0, std::fabs(ze)));
    }
    check_le(checks, "gamma_vs_barnes_grid", worst, 1e-9);
    return checks;
}

// --- criterion 6: two-term free-energy asymptotics ---------------------------

std::vector<CheckResult> free_energy_asymptotics() {
    std::vector<CheckResult> checks;
    const int ns[] = {20, 40, 80, 160};
    std::vector<double> resid;
    for (int N : ns) {
        const ModelParams p{N, 1.0, 1.0, 0.5};
        resid.push_back(plasma::log_partition_exact(p) -
                        plasma::free_energy_asymptotic(p));
    }
    check_le(checks, "residual_ratio_80_vs_40",
             std::fabs(resid[2]) / std::fabs(resid[1]), 1.0);
    check_le(checks, "residual_ratio_160_vs_80",
             std::fabs(resid[3]) / std::fabs(resid[2]), 1.0);
    check_le(checks, "residual_at_160", std::fabs(resid[3]), 5e-3);

    // least-squares fit resid ~ b*sqrt(N) + c: a soft wall has no sqrt(N) term
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < resid.size(); ++i) {
        const double x = std::sqrt(static_cast<double>(ns[i]));
        sx += x; sy += resid[i]; sxx += x * x; sxy += x * resid[i];
    }
    const double m = resid.size();
    const double b_hat = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    check_le(checks, "sqrtN_coefficient", std::fabs(b_hat), 1e-2);
    return checks;
}

// --- criterion 7: error-function crossover of J at its step ------------------

std::vector<CheckResult> crossover_law() {
    std::vector<CheckResult> checks;
    const double N = 400.0, alpha = 1.0, beta = 2.0;
    const double c0 = beta * beta * beta / (alpha * (alpha + beta));
    double worst = 0.0;
    for (double X : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
        const double x = alpha / beta + X / std::sqrt(N * c0);
        const double j = special::incomplete_beta_J({alpha * N, beta * N}, x);
        worst = std::max(worst, std::fabs(j - special::crossover_profile(X)));
    }
    check_le(checks, "erf_profile_N400", worst, 2e-2);
    return checks;
}

// --- criterion 8: Ginibre-type bulk kernel limit -----------------------------

std::vector<CheckResult> kernel_bulk_universality() {
    std::vector<CheckResult> checks;
    const ModelParams p{200, 1.0, 1.0, 0.5};
    const kernel::KernelEvaluator ev(p);
    const double r0 = 1.0;  // mid-annulus
    const double sc = kernel::local_scale(r0, p);
    double worst = 0.0;
    for (double d = 0.25; d <= 2.0 + 1e-12; d += 0.25) {
        const kernel::PlanarPoint rad1{r0 - 0.5 * d / sc, 0.0};
        const kernel::PlanarPoint rad2{r0 + 0.5 * d / sc, 0.0};
        const kernel::PlanarPoint ang1{r0, -0.5 * d / (sc * r0)};
        const kernel::PlanarPoint ang2{r0, 0.5 * d / (sc * r0)};
        const double want = std::exp(-0.5 * d * d);
        for (const auto& [a, b] : {std::pair{rad1, rad2}, {ang1, ang2}}) {
            const double norm = std::sqrt(kernel::rho_b(a.r, p) * kernel::rho_b(b.r, p));
            worst = std::max(worst, std::fabs(std::abs(ev.kernel_K(a, b)) / norm - want));
        }
    }
    check_le(checks, "gaussian_falloff_d_le_2", worst, 5e-2);
    return checks;
}

// --- criterion 9: edge profile, edge two-point law, g normalization ----------

std::vector<CheckResult> kernel_edge_laws() {
    std::vector<CheckResult> checks;
    const ModelParams p{200, 1.0, 1.0, 0.5};
    const kernel::KernelEvaluator ev(p);
    const double r_edge = plasma::geometry(p).r_Q;  // inner edge radius
    const double sc = kernel::local_scale(r_edge, p);
    double worst = 0.0;
    for (double X : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
        const double r = r_edge + X / sc;
        const double got = ev.density_rho1(r) / kernel::rho_b(r, p);
        const double want = special::crossover_profile(2.0 * X);
        worst = std::max(worst, std::fabs(got - want));
    }
    check_le(checks, "edge_density_profile", worst, 3e-2);

    const double s1 = 0.0, s2 = 0.0, dth = kPi / 4.0;
    const kernel::PlanarPoint a{r_edge + s1 / sc, 0.0};
    const kernel::PlanarPoint b{r_edge + s2 / sc, dth};
    const double got = (r_edge * r_edge / (kPi * kernel::rho_b(r_edge, p))) *
                       kernel::rho2_truncated(a, b, ev);
    const double want = kernel::edge_two_point_limit(s1, s2, dth);
    check_le(checks, "edge_two_point_rel", std::fabs(got - want) / std::fabs(want), 0.10);

    const double half = quad::integrate_to_inf(
        [](double s) { return std::exp(-2.0 * s * s); }, 0.0, 1e-13);
    const double g_mass = (2.0 / kPi) * (2.0 * half) * (2.0 * half);
    check_le(checks, "g_normalization", std::fabs(g_mass - 1.0), 1e-12);
    return checks;
}

// --- criterion 10: linear-statistic fluctuations for alpha(s) = s ------------

std::vector<CheckResult> fluctuation_clt() {
    std::vector<CheckResult> checks;
    const auto stat = stats::catalog_statistic("s");
    const ModelParams p100{100, 1.0, 1.0, 0.5};
    const kernel::KernelEvaluator ev100(p100);

    const double var_lim = stats::variance_limit(stat, p100);
    check_le(checks, "variance_limit_equals_3_2", std::fabs(var_lim - 1.5), 1e-12);

    const double var_exact = stats::variance_functional_exact(stat, ev100);
    check_le(checks, "variance_exact_N100_vs_3_2",
             std::fabs(var_exact - 1.5) / 1.5, 0.05);

    const auto rep =
        stats::monte_carlo_fluctuations(stat, dims_from_params(p100), 2000, 424242ULL);
    check_le(checks, "mc_variance_sigmas",
             std::fabs(rep.mc_variance - var_exact) / rep.mc_variance_stderr, 3.0);
    check_ge(checks, "anderson_darling_p", rep.normality_p, 0.01);

    const ModelParams p200{200, 1.0, 1.0, 0.5};
    const kernel::KernelEvaluator ev200(p200);
    double worst = 0.0;
    for (double k = -1.0; k <= 1.0 + 1e-12; k += 0.25) {
        const Complex ce = stats::char_fn_exact(stat, k, ev200);
        const Complex cg = stats::gaussian_limit_char_fn(stat, k, p200);
        worst = std::max(worst, std::abs(ce - cg));
    }
    check_le(checks, "char_fn_vs_gaussian_N200", worst, 0.02);
    return checks;
}

// --- criterion 11: energy bookkeeping of the Boltzmann factor ----------------

std::vector<CheckResult> energy_consistency() {
    std::vector<CheckResult> checks;
    const std::tuple<int, double, double> sets[] = {{1, 1.0, 1.0}, {2, 1.0, 2.0},
                                                    {3, 0.5, 0.5}};
    double worst_k = 0.0, worst_v = 0.0;
    for (const auto& [N, Q, q] : sets) {
        const ModelParams p{N, Q, q, 0.5};
        const double k_closed = plasma::boltzmann_constant_K(p);
        const double k_quad = plasma::background_background_energy(p) +
                              N * plasma::background_constant_C(p);
        worst_k = std::max(worst_k,
                           std::fabs(k_closed - k_quad) / std::fabs(k_closed));
        const auto g = plasma::geometry(p);
        for (int i = 1; i <= 9; ++i) {
            const double th =
                g.theta_Q + i / 10.0 * (kPi - g.theta_q - g.theta_Q);
            const double direct = plasma::particle_background_potential(th, p);
            const double pieces = plasma::potential_piece_sphere(p) +
                                  plasma::potential_piece_north_cap(th, p) +
                                  plasma::potential_piece_south_cap(th, p);
            worst_v = std::max(worst_v, std::fabs(direct - pieces));
        }
    }
    check_le(checks, "boltzmann_constant_vs_quadrature", worst_k, 1e-6);
    check_le(checks, "potential_cap_decomposition", worst_v, 1e-10);
    return checks;
}

struct CriterionSpec {
    int id;
    const char* name;
    std::vector<CheckResult> (*run)();
};

const CriterionSpec kCriteria[] = {
    {1, "spherical_reduction", spherical_reduction},
    {2, "density_normalization", density_normalization},
    {3, "kernel_gauge_equivalence", kernel_gauge_equivalence},
    {4, "sampler_vs_theory", sampler_vs_theory},
    {5, "partition_function_oracle", partition_function_oracle},
    {6, "free_energy_asymptotics", free_energy_asymptotics},
    {7, "crossover_law", crossover_law},
    {8, "kernel_bulk_universality", kernel_bulk_universality},
    {9, "kernel_edge_laws", kernel_edge_laws},
    {10, "fluctuation_clt", fluctuation_clt},
    {11, "energy_consistency", energy_consistency},
};

bool selected(const CriterionSpec& c, const std::vector<std::string>& filter) {
    if (filter.empty()) return true;
    for (const std::string& f : filter) {
        if (f == std::to_string(c.id)) return true;
        if (std::string(c.name).find(f) != std::string::npos) return true;
    }
    return false;
}

}  // namespace

std::vector<std::string> criterion_names() {
    std::vector<std::string> out;
    for (const auto& c : kCriteria) out.push_back(c.name);
    return out;
}

std::vector<CriterionResult> run_criteria(const std::vector<std::string>& filter) {
    std::vector<CriterionResult> out;
    for (const auto& c : kCriteria) {
        if (!selected(c, filter)) continue;
        const auto t0 = std::chrono::steady_clock::now();
        CriterionResult r;
        r.id = c.id;
        r.name = c.name;
        r.checks = c.run();
        r.passed = std::all_of(r.checks.begin(), r.checks.end(),
                               [](const CheckResult& cr) { return cr.passed; });
        r.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
        out.push_back(std::move(r));
    }
    return out;
}

std::string format_report(const std::vector<CriterionResult>& results) {
    std::ostringstream out;
    for (const auto& r : results) {
        out << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << " ("
            << r.name << ") [" << r.wall_time_ms << " ms]\n";
        for (const auto& c : r.checks) {
            out << "  " << (c.passed ? "pass" : "FAIL") << " " << c.name
                << ": measured " << c.measured << " vs tolerance " << c.tolerance
                << "\n";
        }
    }
    const int failed = static_cast<int>(
        std::count_if(results.begin(), results.end(),
                      [](const CriterionResult& r) { return !r.passed; }));
    out << (failed == 0 ? "ALL CRITERIA PASSED"
                        : std::to_string(failed) + " CRITERIA FAILED")
        << " (" << results.size() << " run)\n";
    return out.str();
}

bool all_passed(const std::vector<CriterionResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CriterionResult& r) { return r.passed; });
}

}  // namespace annulus::verify
