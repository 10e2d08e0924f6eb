#pragma once

#include "annulus/params.hpp"

namespace annulus::plasma {

// Spherical annulus between azimuthal angles theta_Q (north cap edge) and
// pi - theta_q (south cap edge), and its planar image under stereographic
// projection. rho_b_coefficient = N(1+Q+q)/pi is the background density in
// the 2R=1 normalization.
struct AnnulusGeometry {
    double theta_Q;
    double theta_q;
    double r_Q;  // inner planar radius, 0 when Q=0
    double r_q;  // outer planar radius, +inf when q=0
    double rho_b_coefficient;
};

struct SphericalPoint {
    double theta;  // [0, pi]
    double phi;    // [0, 2*pi)
};

AnnulusGeometry geometry(const ModelParams& p);

// -log(2R sin(alpha/2)) with alpha the relative angle between the points.
double pair_potential(const SphericalPoint& p1, const SphericalPoint& p2, double R);
// Same quantity via the Cayley-Klein parameterization -log(2R |u'v - uv'|).
double pair_potential_cayley_klein(const SphericalPoint& p1, const SphericalPoint& p2,
                                   double R);

// Particle-background potential V(theta') and its constant.
double particle_background_potential(double theta_prime, const ModelParams& p);
double background_constant_C(const ModelParams& p);

// The three additive pieces of V: uniform whole-sphere background, north
// compensating cap, south compensating cap.
double potential_piece_sphere(const ModelParams& p);
double potential_piece_north_cap(double theta_prime, const ModelParams& p);
double potential_piece_south_cap(double theta_prime, const ModelParams& p);

// Fixed (configuration-independent) constant K_N in the Boltzmann factor.
double boltzmann_constant_K(const ModelParams& p);

// Background-background energy by adaptive quadrature of the defining
// integral; the closed forms above are tested against this value.
double background_background_energy(const ModelParams& p);

double log_partition_exact(const ModelParams& p);
double log_partition_barnes(const ModelParams& p);

// Two-term large-N value of log Z; requires Q, q > 0.
double free_energy_asymptotic(const ModelParams& p);

}  // namespace annulus::plasma
