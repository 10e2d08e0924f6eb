#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "annulus/linalg.hpp"
#include "annulus/params.hpp"

namespace annulus::ensemble {

using Complex = std::complex<double>;

// One replica of eigenvalues in planar coordinates z~ = z/(2R).
struct EigenSample {
    std::vector<Complex> points;
    int replica_id;
    std::uint64_t seed;
};

struct SpherePoint {
    double theta;
    double phi;
    double x, y, z;  // unit vector
};

// G = U (Y Y^dag)^{1/2} with Y = A^{-1/2} X, A = a^dag a Wishart.
linalg::ComplexMatrix sample_G(const MatrixDims& d, linalg::RngState& rng);

// Independent replicas; replica r draws from stream r of the given seed.
std::vector<EigenSample> sample_eigenvalues(const MatrixDims& d, int replicas,
                                            std::uint64_t seed);

// log of the normalization of the matrix-element PDF.
double element_pdf_log_normalization(const MatrixDims& d);
// log of the normalization of the joint eigenvalue PDF.
double eigenvalue_pdf_log_normalization(const MatrixDims& d);

// Inverse stereographic projection of the planar points to the unit sphere.
std::vector<SpherePoint> lift_to_sphere(const EigenSample& s);

}  // namespace annulus::ensemble
