#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>

namespace annulus::quad {

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Adaptive Gauss-Kronrod (G7/K15) on a finite real interval. The integrand
// may return double or std::complex<double>.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-12, double abs_tol = 0.0, int max_depth = 60);

std::complex<double> integrate_complex(const std::function<std::complex<double>(double)>& f,
                                       double a, double b, double rel_tol = 1e-12,
                                       double abs_tol = 0.0, int max_depth = 60);

// Integral over [a, +inf), mapped to (0,1] via t = a + u/(1-u).
double integrate_to_inf(const std::function<double(double)>& f, double a,
                        double rel_tol = 1e-12, double abs_tol = 0.0);

}  // namespace annulus::quad
