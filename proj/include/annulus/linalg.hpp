#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace annulus::linalg {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

// Deterministic RNG handle. Identical (seed, stream) reproduces identical
// draw sequences bit-exactly; distinct streams are for independent replicas.
class RngState {
public:
    RngState(std::uint64_t seed, std::uint64_t stream = 0);

    // Standard real normal, mean 0 variance 1 (Box-Muller; the std
    // distribution objects are implementation-defined, this one is not).
    double normal();
    Complex complex_gaussian();  // x+iy, x,y ~ N(0, 1/2), so E|.|^2 = 1
    double uniform();            // [0,1)

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

ComplexMatrix sample_complex_gaussian(int rows, int cols, RngState& rng);

// Haar-distributed unitary via QR of a complex Gaussian with the phase fix
// R_jj -> |R_jj| absorbed into Q (without it the distribution is not Haar).
ComplexMatrix sample_haar_unitary(int m, RngState& rng);

struct HermitianEig {
    std::vector<double> eigenvalues;  // ascending
    ComplexMatrix eigenvectors;       // columns
};

// Rejects input that is not Hermitian within 1e-12 (relative to max entry).
HermitianEig hermitian_eig(const ComplexMatrix& H);

// H^{+1/2} or H^{-1/2} for Hermitian positive definite H; throws with a
// condition estimate when min eigenvalue <= 1e-12 * max eigenvalue.
ComplexMatrix psd_power(const ComplexMatrix& H, double exponent);

// Eigenvalues of a general (non-normal) complex matrix, unordered.
std::vector<Complex> general_eigenvalues(const ComplexMatrix& G);

}  // namespace annulus::linalg
