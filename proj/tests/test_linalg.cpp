#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "annulus/linalg.hpp"
#include "annulus/special.hpp"

using annulus::linalg::Complex;
using annulus::linalg::ComplexMatrix;
using annulus::linalg::RngState;

TEST_CASE("rng determinism") {
    RngState a(1234, 7), b(1234, 7);
    const ComplexMatrix ma = annulus::linalg::sample_complex_gaussian(5, 3, a);
    const ComplexMatrix mb = annulus::linalg::sample_complex_gaussian(5, 3, b);
    CHECK(ma == mb);  // bit-exact
    RngState c(1234, 8);
    const ComplexMatrix mc = annulus::linalg::sample_complex_gaussian(5, 3, c);
    CHECK(ma != mc);
}

TEST_CASE("complex gaussian moments") {
    RngState rng(42);
    const int n = 1'000'000;
    double sum_sq = 0.0;
    Complex sum = 0.0;
    for (int i = 0; i < n; ++i) {
        const Complex z = rng.complex_gaussian();
        sum += z;
        sum_sq += std::norm(z);
    }
    CHECK(sum_sq / n == doctest::Approx(1.0).epsilon(0.01));
    CHECK(std::fabs(sum.real() / n) < 0.01);
    CHECK(std::fabs(sum.imag() / n) < 0.01);
}

TEST_CASE("haar unitary is unitary") {
    RngState rng(7);
    for (int m : {1, 2, 8, 64}) {
        const ComplexMatrix u = annulus::linalg::sample_haar_unitary(m, rng);
        const double dev =
            (u.adjoint() * u - ComplexMatrix::Identity(m, m)).cwiseAbs().maxCoeff();
        CHECK(dev <= 1e-12);
    }
}

TEST_CASE("haar phase uniformity, m=1") {
    RngState rng(11);
    const int draws = 10'000;
    const int bins = 20;
    std::vector<int> hist(bins, 0);
    for (int i = 0; i < draws; ++i) {
        const ComplexMatrix u = annulus::linalg::sample_haar_unitary(1, rng);
        CHECK(std::fabs(std::abs(u(0, 0)) - 1.0) < 1e-12);
        const double phase = std::arg(u(0, 0));  // (-pi, pi]
        int b = static_cast<int>((phase + M_PI) / (2.0 * M_PI) * bins);
        b = std::clamp(b, 0, bins - 1);
        ++hist[b];
    }
    const double expect = static_cast<double>(draws) / bins;
    double chi2 = 0.0;
    for (int c : hist) chi2 += (c - expect) * (c - expect) / expect;
    const double p = annulus::special::gamma_q((bins - 1) / 2.0, chi2 / 2.0);
    CHECK(p > 0.01);
}

TEST_CASE("haar column norm symmetry, m=2") {
    RngState rng(13);
    double sum = 0.0;
    const int draws = 10'000;
    for (int i = 0; i < draws; ++i) {
        const ComplexMatrix u = annulus::linalg::sample_haar_unitary(2, rng);
        sum += std::norm(u(0, 0));
    }
    CHECK(sum / draws == doctest::Approx(0.5).epsilon(0.04));
}

TEST_CASE("hermitian eigendecomposition") {
    ComplexMatrix id = ComplexMatrix::Identity(4, 4);
    auto eig = annulus::linalg::hermitian_eig(id);
    for (double v : eig.eigenvalues) CHECK(v == doctest::Approx(1.0).epsilon(1e-14));

    ComplexMatrix d = ComplexMatrix::Zero(3, 3);
    d(0, 0) = 3.0;
    d(1, 1) = 1.0;
    d(2, 2) = 2.0;
    eig = annulus::linalg::hermitian_eig(d);
    CHECK(eig.eigenvalues[0] == doctest::Approx(1.0));
    CHECK(eig.eigenvalues[1] == doctest::Approx(2.0));
    CHECK(eig.eigenvalues[2] == doctest::Approx(3.0));

    RngState rng(21);
    const ComplexMatrix g = annulus::linalg::sample_complex_gaussian(8, 8, rng);
    const ComplexMatrix h = (g + g.adjoint()) / 2.0;
    eig = annulus::linalg::hermitian_eig(h);
    Eigen::VectorXd lam(8);
    for (int i = 0; i < 8; ++i) lam[i] = eig.eigenvalues[i];
    const ComplexMatrix back =
        eig.eigenvectors * lam.asDiagonal() * eig.eigenvectors.adjoint();
    CHECK((back - h).cwiseAbs().maxCoeff() <= 1e-10 * h.cwiseAbs().maxCoeff());

    ComplexMatrix bad = h;
    bad(0, 1) += Complex(0.0, 1e-6);
    CHECK_THROWS_AS(annulus::linalg::hermitian_eig(bad), std::invalid_argument);
}

TEST_CASE("psd powers") {
    ComplexMatrix id = ComplexMatrix::Identity(3, 3);
    CHECK((annulus::linalg::psd_power(id, 0.5) - id).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((annulus::linalg::psd_power(id, -0.5) - id).cwiseAbs().maxCoeff() < 1e-14);

    ComplexMatrix d = ComplexMatrix::Zero(2, 2);
    d(0, 0) = 4.0;
    d(1, 1) = 9.0;
    const ComplexMatrix rt = annulus::linalg::psd_power(d, 0.5);
    CHECK(std::abs(rt(0, 0) - 2.0) < 1e-13);
    CHECK(std::abs(rt(1, 1) - 3.0) < 1e-13);

    RngState rng(33);
    const ComplexMatrix a = annulus::linalg::sample_complex_gaussian(6, 6, rng);
    const ComplexMatrix w = a.adjoint() * a;  // Wishart, PD almost surely
    const ComplexMatrix half = annulus::linalg::psd_power(w, 0.5);
    const ComplexMatrix inv_half = annulus::linalg::psd_power(w, -0.5);
    const double scale = w.cwiseAbs().maxCoeff();
    CHECK((half * half - w).cwiseAbs().maxCoeff() <= 1e-9 * scale);
    CHECK((inv_half * w * inv_half - ComplexMatrix::Identity(6, 6)).cwiseAbs().maxCoeff() <=
          1e-9);

    ComplexMatrix singular = ComplexMatrix::Zero(2, 2);
    singular(0, 0) = 1.0;
    CHECK_THROWS(annulus::linalg::psd_power(singular, 0.5));
}

TEST_CASE("general eigenvalues") {
    ComplexMatrix tri = ComplexMatrix::Zero(3, 3);
    tri(0, 0) = Complex(1.0, 2.0);
    tri(1, 1) = Complex(-3.0, 0.5);
    tri(2, 2) = Complex(0.0, -1.0);
    tri(0, 1) = 5.0;
    tri(0, 2) = -2.0;
    tri(1, 2) = 1.0;
    auto vals = annulus::linalg::general_eigenvalues(tri);
    std::sort(vals.begin(), vals.end(),
              [](Complex x, Complex y) { return x.real() < y.real(); });
    CHECK(std::abs(vals[0] - Complex(-3.0, 0.5)) < 1e-12);
    CHECK(std::abs(vals[1] - Complex(0.0, -1.0)) < 1e-12);
    CHECK(std::abs(vals[2] - Complex(1.0, 2.0)) < 1e-12);

    // companion matrix of z^2 - 1
    ComplexMatrix comp = ComplexMatrix::Zero(2, 2);
    comp(0, 1) = 1.0;
    comp(1, 0) = 1.0;
    vals = annulus::linalg::general_eigenvalues(comp);
    std::sort(vals.begin(), vals.end(),
              [](Complex x, Complex y) { return x.real() < y.real(); });
    CHECK(std::abs(vals[0] + 1.0) < 1e-13);
    CHECK(std::abs(vals[1] - 1.0) < 1e-13);

    // trace/determinant identities on a random 10x10
    RngState rng(55);
    const ComplexMatrix g = annulus::linalg::sample_complex_gaussian(10, 10, rng);
    vals = annulus::linalg::general_eigenvalues(g);
    Complex sum = 0.0, prod = 1.0;
    for (Complex v : vals) {
        sum += v;
        prod *= v;
    }
    const Complex tr = g.trace();
    const Complex det = g.determinant();
    CHECK(std::abs(sum - tr) <= 1e-8 * (1.0 + std::abs(tr)));
    CHECK(std::abs(prod - det) <= 1e-6 * (1.0 + std::abs(det)));
}
