#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "annulus/kernel.hpp"
#include "annulus/params.hpp"

namespace annulus::stats {

using Complex = std::complex<double>;

// Rotationally invariant linear statistic a(r) = alpha(r^2). alpha_prime may
// be empty; it is then replaced by validated central finite differences.
struct RadialStatistic {
    std::function<double(double)> alpha;
    std::function<double(double)> alpha_prime;
    std::string description;
};

struct FluctuationReport {
    double mean_exact;
    double mean_limit_per_particle;
    double variance_exact;
    double variance_limit;
    double mc_mean;
    double mc_mean_stderr;
    double mc_variance;
    double mc_variance_stderr;
    double normality_p;
    int replicas;
};

// Built-in catalog: "s_over_1_plus_s", "s", "log1p_s", "const".
RadialStatistic catalog_statistic(const std::string& name);
// alpha(s) = sum_i coeffs[i] * s^i.
RadialStatistic polynomial_statistic(const std::vector<double>& coeffs);

// alpha'(s), analytic if supplied, else Richardson finite differences with a
// two-step agreement check.
double statistic_derivative(const RadialStatistic& stat, double s);

double mean_exact(const RadialStatistic& stat, const kernel::KernelEvaluator& ev);
double mean_limit_per_particle(const RadialStatistic& stat, const ModelParams& p);

// Exact finite-N variance of A = sum alpha(|z_l|^2).
double variance_functional_exact(const RadialStatistic& stat,
                                 const kernel::KernelEvaluator& ev);
double variance_limit(const RadialStatistic& stat, const ModelParams& p);
// Same limit computed from the squared gradient of a(r) over the annulus.
double variance_limit_gradient_form(const RadialStatistic& stat, const ModelParams& p);

Complex char_fn_exact(const RadialStatistic& stat, double k,
                      const kernel::KernelEvaluator& ev);
Complex gaussian_limit_char_fn(const RadialStatistic& stat, double k,
                               const ModelParams& p);

// Anderson-Darling normality p-value (mean and variance estimated from data).
double anderson_darling_normality_p(std::vector<double> x);

FluctuationReport monte_carlo_fluctuations(const RadialStatistic& stat,
                                           const MatrixDims& d, int replicas,
                                           std::uint64_t seed);

}  // namespace annulus::stats
