#include "annulus/ensemble.hpp"

#include <cmath>
#include <stdexcept>

#include "annulus/special.hpp"

namespace annulus {

namespace {

void check_dims(const MatrixDims& d) {
    if (d.M < 1) throw std::invalid_argument("M must be positive");
    if (d.N_cols < d.M) throw std::invalid_argument("N_cols must be >= M");
    if (d.n < d.M) throw std::invalid_argument("n must be >= M");
}

}  // namespace

ModelParams params_from_dims(const MatrixDims& d) {
    check_dims(d);
    return {d.M, static_cast<double>(d.N_cols - d.M) / d.M,
            static_cast<double>(d.n - d.M) / d.M, 0.5};
}

MatrixDims dims_from_params(const ModelParams& p) {
    if (p.N < 1) throw std::invalid_argument("N must be positive");
    const double QN = p.Q * p.N, qN = p.q * p.N;
    if (QN < 0.0 || qN < 0.0 || std::fabs(QN - std::round(QN)) > 1e-9 ||
        std::fabs(qN - std::round(qN)) > 1e-9)
        throw std::invalid_argument("Q*N and q*N must be nonnegative integers");
    return {p.N, p.N + static_cast<int>(std::round(QN)),
            p.N + static_cast<int>(std::round(qN))};
}

namespace ensemble {

linalg::ComplexMatrix sample_G(const MatrixDims& d, linalg::RngState& rng) {
    check_dims(d);
    const linalg::ComplexMatrix a = linalg::sample_complex_gaussian(d.n, d.M, rng);
    const linalg::ComplexMatrix A = a.adjoint() * a;
    const linalg::ComplexMatrix X = linalg::sample_complex_gaussian(d.M, d.N_cols, rng);
    const linalg::ComplexMatrix Y = linalg::psd_power(A, -0.5) * X;
    const linalg::ComplexMatrix U = linalg::sample_haar_unitary(d.M, rng);
    return U * linalg::psd_power(Y * Y.adjoint(), 0.5);
}

std::vector<EigenSample> sample_eigenvalues(const MatrixDims& d, int replicas,
                                            std::uint64_t seed) {
    check_dims(d);
    if (replicas < 1) throw std::invalid_argument("replicas must be >= 1");
    std::vector<EigenSample> out;
    out.reserve(replicas);
    for (int r = 0; r < replicas; ++r) {
        linalg::RngState rng(seed, static_cast<std::uint64_t>(r));
        const linalg::ComplexMatrix G = sample_G(d, rng);
        out.push_back({linalg::general_eigenvalues(G), r, seed});
    }
    return out;
}

double element_pdf_log_normalization(const MatrixDims& d) {
    check_dims(d);
    const double M = d.M, N = d.N_cols, n = d.n;
    double sum = M * M * std::log(M_PI);
    for (int j = 0; j < d.M; ++j) {
        sum += special::log_gamma(N - M + 1 + j) + special::log_gamma(n - M + 1 + j) -
               special::log_gamma(n + N - M + 1 + j) - special::log_gamma(1.0 + j);
    }
    return sum;
}

double eigenvalue_pdf_log_normalization(const MatrixDims& d) {
    check_dims(d);
    const double M = d.M, N = d.N_cols, n = d.n;
    double sum = special::log_gamma(M + 1.0) + M * std::log(M_PI);
    for (int j = 0; j < d.M; ++j) {
        sum += special::log_gamma(N - M + 1 + j) + special::log_gamma(n - M + 1 + j) -
               special::log_gamma(n + N - M + 1.0);
    }
    return sum;
}

std::vector<SpherePoint> lift_to_sphere(const EigenSample& s) {
    std::vector<SpherePoint> out;
    out.reserve(s.points.size());
    for (const Complex z : s.points) {
        const double theta = 2.0 * std::atan(std::abs(z));
        const double phi = std::arg(z);
        out.push_back({theta, phi, std::sin(theta) * std::cos(phi),
                       std::sin(theta) * std::sin(phi), std::cos(theta)});
    }
    return out;
}

}  // namespace ensemble
}  // namespace annulus
