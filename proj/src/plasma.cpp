#include "annulus/plasma.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "annulus/quadrature.hpp"
#include "annulus/special.hpp"

namespace annulus::plasma {
namespace {

constexpr double kPi = 3.141592653589793238462643383279503;

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

void check_charges(const ModelParams& p) {
    if (p.Q < 0.0 || p.q < 0.0) throw std::domain_error("Q and q must be nonnegative");
    if (p.N < 1) throw std::domain_error("N must be positive");
    if (!(p.R > 0.0)) throw std::domain_error("R must be positive");
}

}  // namespace

AnnulusGeometry geometry(const ModelParams& p) {
    check_charges(p);
    const double S = 1.0 + p.Q + p.q;
    AnnulusGeometry g;
    g.theta_Q = std::acos(std::clamp((1.0 + p.q - p.Q) / S, -1.0, 1.0));
    // cos(pi - theta_q) = (q - 1 - Q)/S from the south-cap area fraction
    g.theta_q = kPi - std::acos(std::clamp((p.q - 1.0 - p.Q) / S, -1.0, 1.0));
    g.r_Q = std::sqrt(p.Q / (1.0 + p.q));
    g.r_q = p.q > 0.0 ? std::sqrt((1.0 + p.Q) / p.q)
                      : std::numeric_limits<double>::infinity();
    g.rho_b_coefficient = p.N * S / kPi;
    return g;
}

double pair_potential(const SphericalPoint& p1, const SphericalPoint& p2, double R) {
    const double cos_alpha =
        std::cos(p1.theta) * std::cos(p2.theta) +
        std::sin(p1.theta) * std::sin(p2.theta) * std::cos(p1.phi - p2.phi);
    const double sin_half = std::sqrt(std::max(0.0, 0.5 * (1.0 - cos_alpha)));
    if (sin_half == 0.0) throw std::domain_error("pair potential is infinite at coincident points");
    return -std::log(2.0 * R * sin_half);
}

double pair_potential_cayley_klein(const SphericalPoint& p1, const SphericalPoint& p2,
                                   double R) {
    using C = std::complex<double>;
    const C u1 = std::cos(p1.theta / 2.0) * std::exp(C(0.0, p1.phi / 2.0));
    const C v1 = C(0.0, -1.0) * std::sin(p1.theta / 2.0) * std::exp(C(0.0, -p1.phi / 2.0));
    const C u2 = std::cos(p2.theta / 2.0) * std::exp(C(0.0, p2.phi / 2.0));
    const C v2 = C(0.0, -1.0) * std::sin(p2.theta / 2.0) * std::exp(C(0.0, -p2.phi / 2.0));
    const double chord = std::abs(u2 * v1 - u1 * v2);
    if (chord == 0.0) throw std::domain_error("pair potential is infinite at coincident points");
    return -std::log(2.0 * R * chord);
}

double background_constant_C(const ModelParams& p) {
    check_charges(p);
    const double S = 1.0 + p.Q + p.q;
    const double N = p.N;
    return -N / 2.0 + (N / 2.0) * (1.0 + p.q) * std::log((1.0 + p.q) / S) +
           (N / 2.0) * (1.0 + p.Q) * std::log((1.0 + p.Q) / S);
}

double potential_piece_sphere(const ModelParams& p) {
    check_charges(p);
    return -(p.N / 2.0) * (1.0 + p.Q + p.q);
}

double potential_piece_north_cap(double theta_prime, const ModelParams& p) {
    check_charges(p);
    const double S = 1.0 + p.Q + p.q;
    const double sin_term =
        p.Q > 0.0 ? -p.N * p.Q * std::log(std::sin(theta_prime / 2.0)) : 0.0;
    return sin_term +
           (p.N / 2.0) * (p.Q + (1.0 + p.q) * std::log((1.0 + p.q) / S));
}

double potential_piece_south_cap(double theta_prime, const ModelParams& p) {
    check_charges(p);
    const double S = 1.0 + p.Q + p.q;
    const double cos_term =
        p.q > 0.0 ? -p.N * p.q * std::log(std::cos(theta_prime / 2.0)) : 0.0;
    return cos_term +
           (p.N / 2.0) * (p.q + (1.0 + p.Q) * std::log((1.0 + p.Q) / S));
}

double particle_background_potential(double theta_prime, const ModelParams& p) {
    check_charges(p);
    if (theta_prime < 0.0 || theta_prime > kPi)
        throw std::domain_error("theta' must lie in [0, pi]");
    if (theta_prime == 0.0 && p.Q > 0.0)
        throw std::domain_error("V diverges at the north pole for Q > 0");
    if (theta_prime == kPi && p.q > 0.0)
        throw std::domain_error("V diverges at the south pole for q > 0");
    const double sin_term =
        p.Q > 0.0 ? -p.N * p.Q * std::log(std::sin(theta_prime / 2.0)) : 0.0;
    const double cos_term =
        p.q > 0.0 ? -p.N * p.q * std::log(std::cos(theta_prime / 2.0)) : 0.0;
    return background_constant_C(p) + sin_term + cos_term;
}

double boltzmann_constant_K(const ModelParams& p) {
    check_charges(p);
    const double S = 1.0 + p.Q + p.q;
    const double n2_over_4 = p.N * static_cast<double>(p.N) / 4.0;
    return n2_over_4 * (-S - 2.0 * xlogx(S) + (1.0 + p.q) * xlogx(1.0 + p.q) +
                        (1.0 + p.Q) * xlogx(1.0 + p.Q) - p.Q * xlogx(p.Q) -
                        p.q * xlogx(p.q));
}

double background_background_energy(const ModelParams& p) {
    check_charges(p);
    const AnnulusGeometry g = geometry(p);
    const double S = 1.0 + p.Q + p.q;
    const double integral = quad::integrate(
        [&](double theta) {
            return std::sin(theta) * particle_background_potential(theta, p);
        },
        g.theta_Q, kPi - g.theta_q, 1e-12);
    return -(p.N * S / 4.0) * integral;
}

double log_partition_exact(const ModelParams& p) {
    check_charges(p);
    const double S = 1.0 + p.Q + p.q;
    double sum = 0.0;
    for (int l = 0; l < p.N; ++l) {
        sum += special::log_gamma(l + p.N * p.Q + 1.0) +
               special::log_gamma(l + p.N * p.q + 1.0) -
               special::log_gamma(p.N * S + 1.0);
    }
    return p.N * std::log(2.0 * kPi * p.R) - 2.0 * boltzmann_constant_K(p) + sum;
}

double log_partition_barnes(const ModelParams& p) {
    check_charges(p);
    const double S = 1.0 + p.Q + p.q;
    const double NQ = p.N * p.Q, Nq = p.N * p.q;
    const bool integral_caps =
        std::fabs(NQ - std::round(NQ)) < 1e-9 && std::fabs(Nq - std::round(Nq)) < 1e-9;
    const auto mode = integral_caps ? special::BarnesMode::ExactProduct
                                    : special::BarnesMode::Asymptotic;
    const double g_terms = special::log_barnes_g(p.N * (1.0 + p.Q) + 1.0, mode) -
                           special::log_barnes_g(NQ + 1.0, mode) +
                           special::log_barnes_g(p.N * (1.0 + p.q) + 1.0, mode) -
                           special::log_barnes_g(Nq + 1.0, mode);
    return p.N * std::log(2.0 * kPi * p.R) - 2.0 * boltzmann_constant_K(p) -
           p.N * special::log_gamma(p.N * S + 1.0) + g_terms;
}

double free_energy_asymptotic(const ModelParams& p) {
    check_charges(p);
    if (!(p.Q > 0.0) || !(p.q > 0.0))
        throw std::domain_error(
            "asymptotic free energy requires Q, q > 0 (annulus geometry)");
    const double S = 1.0 + p.Q + p.q;
    const double rho_b = p.N * S / (4.0 * kPi * p.R * p.R);
    return -(p.N / 2.0) * std::log(rho_b / (2.0 * kPi * kPi)) +
           std::log(p.Q / (1.0 + p.Q)) / 12.0 + std::log(p.q / (1.0 + p.q)) / 12.0 -
           1.0 / (12.0 * S);
}

}  // namespace annulus::plasma
