#include "annulus/kernel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Dense>

#include "annulus/plasma.hpp"
#include "annulus/special.hpp"

namespace annulus::kernel {
namespace {

constexpr double kPi = 3.141592653589793238462643383279503;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double reduce_angle(double a) {
    a = std::fmod(a, 2.0 * kPi);
    if (a > kPi) a -= 2.0 * kPi;
    if (a <= -kPi) a += 2.0 * kPi;
    return a;
}

}  // namespace

Complex LogComplex::value() const {
    if (log_mag == kNegInf) return {0.0, 0.0};
    return std::exp(log_mag) * Complex(std::cos(arg), std::sin(arg));
}

KernelEvaluator::KernelEvaluator(const ModelParams& p) : p_(p) {
    if (p.N < 1 || p.Q < 0.0 || p.q < 0.0)
        throw std::invalid_argument("invalid kernel parameters");
    log_norms_.reserve(p.N);
    const double QN = p.Q * p.N;
    const double qp1N = (p.q + 1.0) * p.N;
    // extended precision: phase cancellation in the power sum amplifies any
    // absolute error in these logs by several orders of magnitude
    for (int j = 1; j <= p.N; ++j) {
        const long double a = QN + j, b = qp1N + 1.0 - j;
        log_norms_.push_back(static_cast<double>(
            std::log(0.5L) + std::lgammal(a) + std::lgammal(b) - std::lgammal(a + b)));
    }
}

double KernelEvaluator::log_weight_h(double r) const {
    const double QN = p_.Q * p_.N;
    if (r == 0.0) return QN > 0.0 ? kNegInf : log_weight_h_tilde(0.0);
    return 2.0 * QN * std::log(r) + log_weight_h_tilde(r);
}

double KernelEvaluator::log_weight_h_tilde(double r) const {
    const double SN1 = (p_.Q + p_.q + 1.0) * p_.N + 1.0;
    return -SN1 * std::log1p(r * r);
}

LogComplex KernelEvaluator::kernel_H_sum(Complex z) const {
    if (std::abs(z) == 0.0) return {std::log(0.5) - log_norms_[0], 0.0};
    const Complex log_z = std::log(z);
    // factor the running maximum out of the power sum; accumulate in long
    // double, the terms cancel by a few orders of magnitude off the real axis
    double max_log = kNegInf;
    for (int j = 0; j < p_.N; ++j)
        max_log = std::max(max_log, j * log_z.real() - log_norms_[j]);
    std::complex<long double> acc(0.0L, 0.0L);
    for (int j = 0; j < p_.N; ++j) {
        const long double lm = static_cast<long double>(j) * log_z.real() -
                               log_norms_[j] - max_log;
        const long double ph = static_cast<long double>(j) * log_z.imag();
        acc += std::exp(lm) * std::complex<long double>(std::cos(ph), std::sin(ph));
    }
    if (std::abs(acc) == 0.0L) return {kNegInf, 0.0};
    return {std::log(0.5) + max_log + static_cast<double>(std::log(std::abs(acc))),
            static_cast<double>(std::arg(acc))};
}

LogComplex KernelEvaluator::kernel_H_tilde(Complex z) const {
    const double N = p_.N;
    const double SN = (p_.Q + p_.q + 1.0) * N;
    const Complex j1 = special::incomplete_beta_J({p_.Q * N, (p_.q + 1.0) * N}, z);
    const Complex j2 = special::incomplete_beta_J({(p_.Q + 1.0) * N, p_.q * N}, z);
    const Complex diff = j1 - j2;
    if (std::abs(diff) == 0.0) return {kNegInf, 0.0};
    const Complex log1pz = std::log(1.0 + z);
    return {std::log(SN) + (SN - 1.0) * log1pz.real() + std::log(std::abs(diff)),
            (SN - 1.0) * log1pz.imag() + std::arg(diff)};
}

LogComplex KernelEvaluator::kernel_entry(const PlanarPoint& p1, const PlanarPoint& p2,
                                         Gauge g) const {
    const double dtheta = reduce_angle(p1.theta - p2.theta);
    Complex z = p1.r * p2.r * Complex(std::cos(dtheta), std::sin(dtheta));
    // The incomplete-beta representation has a cut on (-inf,-1]; deform to the
    // side continuous with dtheta -> pi-+ (accuracy degrades within ~1e-6 of
    // the cut, documented behaviour).
    if (std::fabs(z.imag()) < 1e-12 * std::abs(z) && z.real() <= -1.0) {
        const double side = dtheta >= 0.0 ? 1.0 : -1.0;
        z += Complex(0.0, side * 1e-8 * std::abs(z));
    }
    const LogComplex H =
        g == Gauge::IncompleteBeta ? kernel_H_tilde(z) : kernel_H_sum(z);
    const double log_w = g == Gauge::IncompleteBeta
                             ? 0.5 * (log_weight_h_tilde(p1.r) + log_weight_h_tilde(p2.r))
                             : 0.5 * (log_weight_h(p1.r) + log_weight_h(p2.r));
    if (H.log_mag == kNegInf || log_w == kNegInf) return {kNegInf, 0.0};
    return {-std::log(kPi) + log_w + H.log_mag, H.arg};
}

Complex KernelEvaluator::kernel_K(const PlanarPoint& p1, const PlanarPoint& p2,
                                  Gauge g) const {
    return kernel_entry(p1, p2, g).value();
}

double KernelEvaluator::density_rho1(double r) const {
    if (r < 0.0) throw std::domain_error("radius must be nonnegative");
    const double N = p_.N;
    const double S = p_.Q + p_.q + 1.0;
    const double s = r * r;
    const double j1 = special::incomplete_beta_J({p_.Q * N, (p_.q + 1.0) * N}, s);
    const double j2 = special::incomplete_beta_J({(p_.Q + 1.0) * N, p_.q * N}, s);
    const double v = S * N / (kPi * (1.0 + s) * (1.0 + s)) * (j1 - j2);
    return std::max(0.0, v);
}

double KernelEvaluator::radial_cdf(double r) const {
    if (r < 0.0) throw std::domain_error("radius must be nonnegative");
    const double QN = p_.Q * p_.N;
    const double qp1N = (p_.q + 1.0) * p_.N;
    const double s = r * r;
    double sum = 0.0;
    for (int j = 1; j <= p_.N; ++j)
        sum += special::incomplete_beta_J({QN + j, qp1N + 1.0 - j}, s);
    return sum / p_.N;
}

double rho_b(double r, const ModelParams& p) {
    const double S = 1.0 + p.Q + p.q;
    return p.N * S / (kPi * (1.0 + r * r) * (1.0 + r * r));
}

double density_limit(double r, const ModelParams& p) {
    const plasma::AnnulusGeometry g = plasma::geometry(p);
    if (r == g.r_Q || r == g.r_q)
        throw std::domain_error("limit density is discontinuous at the annulus boundary");
    return (r > g.r_Q && r < g.r_q) ? rho_b(r, p) : 0.0;
}

double local_scale(double r, const ModelParams& p) {
    return std::sqrt(kPi * rho_b(r, p));
}

double rho_k(const std::vector<PlanarPoint>& points, const KernelEvaluator& ev, Gauge g) {
    const int k = static_cast<int>(points.size());
    if (k < 1) throw std::invalid_argument("need at least one point");
    if (k > ev.params().N) throw std::invalid_argument("k exceeds the particle count");
    Eigen::MatrixXcd m(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m(i, j) = ev.kernel_K(points[i], points[j], g);
    return m.determinant().real();
}

double rho2_truncated(const PlanarPoint& p1, const PlanarPoint& p2,
                      const KernelEvaluator& ev) {
    const Complex off = ev.kernel_K(p1, p2);
    return -std::norm(off);
}

Complex bulk_limit_kernel(double x1, double y1, double x2, double y2) {
    const double dx = x1 - x2, dy = y1 - y2;
    return std::exp(Complex(-0.5 * (dx * dx + dy * dy), x2 * y1 - x1 * y2));
}

Complex edge_limit_kernel(double X1, double Y1, double X2, double Y2) {
    const double dX = X1 - X2, dY = Y1 - Y2;
    const Complex gauss = std::exp(Complex(-0.5 * (dX * dX + dY * dY), X2 * Y1 - X1 * Y2));
    const Complex arg = Complex(X1 + X2, Y1 - Y2) / std::sqrt(2.0);
    return gauss * (0.5 + 0.5 * special::erf_complex(arg));
}

double edge_two_point_g(double s1, double s2) {
    return (2.0 / kPi) * std::exp(-2.0 * s1 * s1 - 2.0 * s2 * s2);
}

double edge_two_point_limit(double s1, double s2, double dtheta) {
    const double d = std::norm(1.0 - std::exp(Complex(0.0, dtheta)));
    if (d == 0.0) throw std::domain_error("angular separation must be nonzero");
    return -edge_two_point_g(s1, s2) / (4.0 * kPi * kPi * d);
}

}  // namespace annulus::kernel
