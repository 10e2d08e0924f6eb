#include "annulus/linalg.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace annulus::linalg {

RngState::RngState(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    gen_.seed(seq);
}

double RngState::uniform() {
    // 53-bit mantissa in [0,1)
    return (gen_() >> 11) * 0x1.0p-53;
}

double RngState::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u, v, s;
    do {
        u = 2.0 * uniform() - 1.0;
        v = 2.0 * uniform() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    have_spare_ = true;
    return u * f;
}

Complex RngState::complex_gaussian() {
    const double scale = std::sqrt(0.5);
    const double x = scale * normal();
    const double y = scale * normal();
    return {x, y};
}

ComplexMatrix sample_complex_gaussian(int rows, int cols, RngState& rng) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("matrix dimensions must be >= 1");
    ComplexMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = rng.complex_gaussian();
    return m;
}

ComplexMatrix sample_haar_unitary(int m, RngState& rng) {
    const ComplexMatrix g = sample_complex_gaussian(m, m, rng);
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < m; ++j) {
        const Complex rjj = r(j, j);
        const double mag = std::abs(rjj);
        const Complex phase = mag > 0.0 ? rjj / mag : Complex(1.0, 0.0);
        q.col(j) *= phase;
    }
    return q;
}

HermitianEig hermitian_eig(const ComplexMatrix& H) {
    if (H.rows() != H.cols()) throw std::invalid_argument("hermitian_eig requires a square matrix");
    const double scale = std::max(1.0, H.cwiseAbs().maxCoeff());
    const double dev = (H - H.adjoint()).cwiseAbs().maxCoeff();
    if (dev > 1e-12 * scale) {
        std::ostringstream msg;
        msg << "matrix is not Hermitian: max |H - H^dag| = " << dev;
        throw std::invalid_argument(msg.str());
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(H);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("Hermitian eigensolver failed to converge");
    HermitianEig out;
    out.eigenvalues.assign(solver.eigenvalues().data(),
                           solver.eigenvalues().data() + H.rows());
    out.eigenvectors = solver.eigenvectors();
    return out;
}

ComplexMatrix psd_power(const ComplexMatrix& H, double exponent) {
    if (exponent != 0.5 && exponent != -0.5)
        throw std::invalid_argument("psd_power supports exponents +1/2 and -1/2");
    const HermitianEig eig = hermitian_eig(H);
    const double lo = eig.eigenvalues.front();
    const double hi = eig.eigenvalues.back();
    if (!(lo > 1e-12 * hi)) {
        std::ostringstream msg;
        msg << "matrix is not safely positive definite: min eigenvalue " << lo
            << ", condition estimate " << (lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity());
        throw std::runtime_error(msg.str());
    }
    Eigen::VectorXd powers(H.rows());
    for (int i = 0; i < H.rows(); ++i) powers[i] = std::pow(eig.eigenvalues[i], exponent);
    return eig.eigenvectors * powers.asDiagonal() * eig.eigenvectors.adjoint();
}

std::vector<Complex> general_eigenvalues(const ComplexMatrix& G) {
    if (G.rows() != G.cols())
        throw std::invalid_argument("general_eigenvalues requires a square matrix");
    Eigen::ComplexEigenSolver<ComplexMatrix> solver(G, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigenvalue iteration did not converge");
    const auto& vals = solver.eigenvalues();
    return {vals.data(), vals.data() + G.rows()};
}

}  // namespace annulus::linalg
