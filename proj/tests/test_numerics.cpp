// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mmwsim/numerics.hpp"

using namespace mmwsim;

namespace {

CMatrix random_cmatrix(int rows, int cols, RandomStream &rs) {
    CMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m(i, j) = rs.complex_normal();
    return m;
}

// Independent oracle: sum of log2(1 + scale * lambda_i) over eigenvalues of
// h h^H, computed by a Hermitian eigen-decomposition.
double logdet_eigen_oracle(const CMatrix &h, double scale) {
    const CMatrix gram = h * h.adjoint();
    Eigen::SelfAdjointEigenSolver<CMatrix> es(gram);
    double sum = 0.0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
        sum += std::log2(1.0 + scale * std::max(0.0, es.eigenvalues()[i]));
    return sum;
}

// Bisection on erf.
double erf_inv_bisect(double x) {
    double lo = -7.0, hi = 7.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (std::erf(mid) < x ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

TEST_CASE("logdet2_capacity trivial cases") {
    CHECK(logdet2_capacity(CMatrix::Zero(3, 4), 2.5) == doctest::Approx(0.0));
    CHECK(logdet2_capacity(CMatrix::Identity(2, 2), 1.0) ==
          doctest::Approx(2.0));
}

TEST_CASE("logdet2_capacity matches the eigenvalue oracle") {
    RandomStream rs(42, 0);
    const CMatrix h = random_cmatrix(3, 2, rs);
    CHECK(logdet2_capacity(h, 0.7) ==
          doctest::Approx(logdet_eigen_oracle(h, 0.7)).epsilon(1e-10));
}

TEST_CASE("logdet2_capacity rejects non-finite input") {
    CMatrix h = CMatrix::Ones(2, 2);
    h(0, 0) = Complex(std::nan(""), 0.0);
    CHECK_THROWS_AS(logdet2_capacity(h, 1.0), std::domain_error);
}

TEST_CASE("logdet2_capacity is invariant under unitary transforms") {
    RandomStream rs(7, 3);
    const CMatrix h = random_cmatrix(5, 4, rs);
    // Unitary factor from the QR of a random matrix.
    const CMatrix a = random_cmatrix(5, 5, rs);
    Eigen::HouseholderQR<CMatrix> qr(a);
    const CMatrix u = qr.householderQ();
    REQUIRE((u.adjoint() * u - CMatrix::Identity(5, 5)).cwiseAbs().maxCoeff() <
            1e-10);
    CHECK(logdet2_capacity(u * h, 0.4) ==
          doctest::Approx(logdet2_capacity(h, 0.4)).epsilon(1e-9));
}

TEST_CASE("determinant lemma for an appended row") {
    RandomStream rs(11, 5);
    const double s = 0.8;
    const CMatrix h = random_cmatrix(3, 6, rs);
    const CMatrix g = random_cmatrix(1, 6, rs);
    CMatrix stacked(4, 6);
    stacked << h, g;

    const CMatrix m = CMatrix::Identity(6, 6) + s * (h.adjoint() * h);
    const Eigen::VectorXcd gv = g.row(0).adjoint();
    const double quad = std::real(gv.dot(m.llt().solve(gv)));

    const double lhs = logdet2_capacity(stacked, s);
    const double rhs = logdet2_capacity(h, s) + std::log2(1.0 + s * quad);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
}

TEST_CASE("erf_inv basics") {
    CHECK(erf_inv(0.0) == 0.0);
    CHECK(erf_inv(std::erf(1.0)) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(std::erf(erf_inv(0.5)) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(erf_inv(0.5) ==
          doctest::Approx(erf_inv_bisect(0.5)).epsilon(1e-12));
    CHECK(erf_inv(-0.3) == doctest::Approx(-erf_inv(0.3)));
    CHECK_THROWS_AS(erf_inv(1.0), std::domain_error);
    CHECK_THROWS_AS(erf_inv(-1.5), std::domain_error);
}

TEST_CASE("erf_inv round trip near the edge of the domain") {
    for (double x : {0.9, 0.99, 0.999999, 1.0 - 1e-12}) {
        CHECK(std::abs(std::erf(erf_inv(x)) - x) < 1e-12);
        CHECK(std::abs(std::erf(erf_inv(-x)) + x) < 1e-12);
    }
}

TEST_CASE("integrate_to_infinity known integrals") {
    const double tol = 1e-9;
    CHECK(integrate_to_infinity([](double x) { return std::exp(-x); }, 0.0,
                                tol) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(integrate_to_infinity(
              [](double x) { return x * std::exp(-x * x); }, 0.0, tol) ==
          doctest::Approx(0.5).epsilon(1e-8));
}

TEST_CASE("integrate_to_infinity reports non-decaying integrands") {
    CHECK_THROWS_AS(
        integrate_to_infinity([](double) { return 1.0; }, 0.0, 1e-8),
        ConvergenceError);
}

TEST_CASE("random streams are reproducible and stream-distinct") {
    RandomStream a(123, 456), b(123, 456), c(123, 457);
    bool identical = true;
    bool distinct = false;
    for (int i = 0; i < 1000; ++i) {
        const double xa = a.uniform();
        identical = identical && (xa == b.uniform());
        distinct = distinct || (xa != c.uniform());
    }
    CHECK(identical);
    CHECK(distinct);
}

TEST_CASE("complex normal draws have the CN(0,1) moments") {
    RandomStream rs(99, 1);
    const int n = 200000;
    double p = 0.0;
    Complex m = 0.0;
    for (int i = 0; i < n; ++i) {
        const Complex z = rs.complex_normal();
        p += std::norm(z);
        m += z;
    }
    CHECK(p / n == doctest::Approx(1.0).epsilon(0.02));
    CHECK(std::abs(m) / n < 0.01);
}
