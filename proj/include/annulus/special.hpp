#pragma once

#include <complex>
#include <stdexcept>

namespace annulus::special {

using Complex = std::complex<double>;

// Positive exponent pair (a,b) of the weight t^{a-1}(1+t)^{-a-b}.
struct BetaParams {
    double a;
    double b;
};

double log_gamma(double x);                 // x > 0
double log_beta(const BetaParams& p);       // a, b > 0

// Normalized incomplete integral J(a,b;z) = (1/B(a,b)) * int_0^z t^{a-1} (1+t)^{-a-b} dt,
// taken along the straight segment from 0 to z with principal branches.
// Degenerate limits: J(0,b;z) = 1 and J(a,0;z) = 0 for z != 0.
Complex incomplete_beta_J(const BetaParams& p, Complex z);
double incomplete_beta_J(const BetaParams& p, double x);  // real x >= 0

// N->infty limit of J(alpha*N, beta*N; x): a step at x = alpha/beta.
double incomplete_beta_limit_indicator(double alpha, double beta, double x);

// 1/2 + 1/2 erf(X/sqrt(2)): the soft-edge density profile.
double crossover_profile(double x);

// erf analytically continued; accuracy documented for |Im z| <= 10.
Complex erf_complex(Complex z);

enum class BarnesMode { ExactProduct, Asymptotic };

// log G(x) for the Barnes G-function. ExactProduct requires x-1 a nonnegative
// integer; Asymptotic requires x >= 10.
double log_barnes_g(double x, BarnesMode mode);

// Regularized incomplete gamma Q(a,x) (upper); used for chi-square p-values.
double gamma_q(double a, double x);

}  // namespace annulus::special
