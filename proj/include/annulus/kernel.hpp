#pragma once

#include <complex>
#include <vector>

#include "annulus/params.hpp"

namespace annulus::kernel {

using Complex = std::complex<double>;

// Complex value carried as (log magnitude, phase) so that N-scaled exponents
// never overflow during assembly.
struct LogComplex {
    double log_mag;  // -inf encodes zero
    double arg;
    Complex value() const;
};

struct PlanarPoint {
    double r;      // >= 0
    double theta;  // radians
};

// Which pair (weight, polynomial-sum) is used to assemble kernel entries.
// The two differ by a phase that cancels in every determinant.
enum class Gauge { Sum, IncompleteBeta };

class KernelEvaluator {
public:
    explicit KernelEvaluator(const ModelParams& p);

    const ModelParams& params() const { return p_; }
    const std::vector<double>& log_norms() const { return log_norms_; }

    double log_weight_h(double r) const;        // log h(r), -inf at r=0 with Q>0
    double log_weight_h_tilde(double r) const;  // log h~(r)

    LogComplex kernel_H_sum(Complex z) const;    // power-sum form of H(z)
    LogComplex kernel_H_tilde(Complex z) const;  // incomplete-beta form of H~(z)

    Complex kernel_K(const PlanarPoint& p1, const PlanarPoint& p2,
                     Gauge g = Gauge::IncompleteBeta) const;

    double density_rho1(double r) const;
    // P(|z| <= r) for a point drawn from rho_(1)/N.
    double radial_cdf(double r) const;

private:
    LogComplex kernel_entry(const PlanarPoint& p1, const PlanarPoint& p2, Gauge g) const;

    ModelParams p_;
    std::vector<double> log_norms_;
};

// Limiting background density: rho_b(r) on the open annulus, 0 outside.
double density_limit(double r, const ModelParams& p);
// rho_b(r) itself, defined for every r.
double rho_b(double r, const ModelParams& p);
// Conversion factor between physical radial displacements and the O(1)
// variables of the scaling limits: one scaled unit = 1/local_scale(r).
double local_scale(double r, const ModelParams& p);

double rho_k(const std::vector<PlanarPoint>& points, const KernelEvaluator& ev,
             Gauge g = Gauge::IncompleteBeta);
double rho2_truncated(const PlanarPoint& p1, const PlanarPoint& p2,
                      const KernelEvaluator& ev);

// Scaled bulk kernel entry at cartesian O(1) coordinates.
Complex bulk_limit_kernel(double x1, double y1, double x2, double y2);
// Scaled inner-edge kernel entry; diagonal tends to 1 (X -> +inf, bulk) and
// 0 (X -> -inf, outside).
Complex edge_limit_kernel(double X1, double Y1, double X2, double Y2);

// Edge two-point profile g(s1,s2) and the assembled angular limit law
// -g(s1,s2)/(4 pi^2 |1-e^{i dtheta}|^2).
double edge_two_point_g(double s1, double s2);
double edge_two_point_limit(double s1, double s2, double dtheta);

}  // namespace annulus::kernel
