// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "mmwsim/beamspace.hpp"
#include "mmwsim/channel.hpp"

using namespace mmwsim;

namespace {

CMatrix random_cmatrix(int rows, int cols, RandomStream &rs) {
    CMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m(i, j) = rs.complex_normal();
    return m;
}

double captured_power(const CMatrix &hv, const BeamMask &mask) {
    double p = 0.0;
    for (int i : mask.rx_beams)
        for (int j : mask.tx_beams)
            p += std::norm(hv(i, j));
    return p;
}

} // namespace

TEST_CASE("dft_basis scalar and center beam") {
    const CMatrix one = dft_basis(1, 0.5);
    CHECK(std::abs(one(0, 0) - Complex(1.0, 0.0)) < 1e-15);

    const CMatrix a3 = dft_basis(3, 0.5);
    // Grid is {-1/3, 0, 1/3}; the middle row is the broadside beam.
    const double v = 1.0 / std::sqrt(3.0);
    for (int k = 0; k < 3; ++k)
        CHECK(std::abs(a3(1, k) - Complex(v, 0.0)) < 1e-14);
}

TEST_CASE("dft_basis is unitary at n = 17") {
    const CMatrix a = dft_basis(17, 0.5);
    const CMatrix gram = a.adjoint() * a;
    CHECK((gram - CMatrix::Identity(17, 17)).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("dft_basis rejects sub-critical spacing") {
    CHECK_THROWS_AS(dft_basis(9, 0.4), std::domain_error);
    CHECK_NOTHROW(dft_basis(9, 0.5));
    CHECK_NOTHROW(dft_basis(9, 0.8));
}

TEST_CASE("to_virtual inverts the synthesis transform") {
    RandomStream rs(5, 0);
    const CMatrix ar = dft_basis(7, 0.5);
    const CMatrix at = dft_basis(5, 0.5);
    const CMatrix e = random_cmatrix(7, 5, rs);
    const CMatrix h = ar * e * at.adjoint();
    CHECK((to_virtual(h, ar, at) - e).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("broadside channel concentrates on the center beam pair") {
    const int n = 9;
    const CMatrix h = CMatrix::Ones(n, n);
    const VirtualChannel v = make_virtual(h, 0.5);
    const int c = (n - 1) / 2;
    CHECK(std::abs(v.full(c, c) - Complex(double(n), 0.0)) < 1e-9);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != c || j != c)
                CHECK(std::abs(v.full(i, j)) < 1e-9);
}

TEST_CASE("to_virtual preserves the Frobenius norm") {
    RandomStream rs(8, 1);
    const CMatrix h = random_cmatrix(9, 9, rs);
    const VirtualChannel v = make_virtual(h, 0.5);
    CHECK(v.full.norm() == doctest::Approx(h.norm()).epsilon(1e-10));
}

TEST_CASE("to_virtual rejects mismatched dimensions") {
    CHECK_THROWS_AS(
        to_virtual(CMatrix::Ones(3, 3), dft_basis(4, 0.5), dft_basis(3, 0.5)),
        std::invalid_argument);
}

TEST_CASE("magnitude mask on an ordered diagonal") {
    CMatrix hv = CMatrix::Zero(5, 5);
    for (int i = 0; i < 5; ++i)
        hv(i, i) = Complex(5.0 - i, 0.0);
    const BeamMask mask = magnitude_mask(hv, 3, 3);
    CHECK(mask.rx_beams == std::vector<int>{0, 1, 2});
    CHECK(mask.tx_beams == std::vector<int>{0, 1, 2});
}

TEST_CASE("magnitude mask finds a single nonzero entry") {
    CMatrix hv = CMatrix::Zero(8, 9);
    hv(4, 7) = Complex(0.0, 2.0);
    const BeamMask mask = magnitude_mask(hv, 1, 1);
    CHECK(mask.rx_beams == std::vector<int>{4});
    CHECK(mask.tx_beams == std::vector<int>{7});
}

TEST_CASE("magnitude mask matches a sort-based oracle") {
    RandomStream rs(21, 4);
    const CMatrix hv = random_cmatrix(9, 9, rs);
    const BeamMask mask = magnitude_mask(hv, 2, 2);

    // Oracle: sort row powers, then column powers over the chosen rows.
    std::vector<std::pair<double, int>> rows;
    for (int i = 0; i < 9; ++i)
        rows.push_back({-hv.row(i).squaredNorm(), i});
    std::sort(rows.begin(), rows.end());
    std::vector<int> rsel{rows[0].second, rows[1].second};
    std::sort(rsel.begin(), rsel.end());
    CHECK(mask.rx_beams == rsel);

    std::vector<std::pair<double, int>> cols;
    for (int j = 0; j < 9; ++j) {
        double p = 0.0;
        for (int i : rsel)
            p += std::norm(hv(i, j));
        cols.push_back({-p, j});
    }
    std::sort(cols.begin(), cols.end());
    std::vector<int> csel{cols[0].second, cols[1].second};
    std::sort(csel.begin(), csel.end());
    CHECK(mask.tx_beams == csel);
}

TEST_CASE("extract submatrices") {
    RandomStream rs(33, 2);
    const CMatrix hv = random_cmatrix(5, 5, rs);

    BeamMask full;
    for (int i = 0; i < 5; ++i) {
        full.rx_beams.push_back(i);
        full.tx_beams.push_back(i);
    }
    CHECK((extract(hv, full) - hv).cwiseAbs().maxCoeff() == 0.0);

    BeamMask single{{1}, {2}};
    const CMatrix sub = extract(hv, single);
    REQUIRE(sub.rows() == 1);
    CHECK(sub(0, 0) == hv(1, 2));

    BeamMask arbitrary{{4, 0, 2}, {3, 1}};
    const CMatrix m = extract(hv, arbitrary);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 2; ++b)
            CHECK(m(a, b) == hv(arbitrary.rx_beams[a], arbitrary.tx_beams[b]));

    BeamMask bad{{9}, {0}};
    CHECK_THROWS_AS(extract(hv, bad), std::out_of_range);
}

TEST_CASE("rate is unitarily equivalent between antenna and beamspace") {
    SystemConfig cfg;
    cfg.n_r = cfg.n_t = 17;
    cfg.psi = 1;
    cfg.seed = 3;
    const CMatrix h = realize_channels(cfg, 0).matrices[0];
    const VirtualChannel v = make_virtual(h, cfg.spacing_ratio);
    CHECK(logdet2_capacity(h, 0.2) ==
          doctest::Approx(logdet2_capacity(v.full, 0.2)).epsilon(1e-9));
}

TEST_CASE("magnitude mask beats random masks on separable matrices") {
    RandomStream rs(55, 6);
    CMatrix hv = CMatrix::Zero(9, 9);
    for (int i = 0; i < 9; ++i)
        hv(i, i) = Complex(rs.uniform(0.5, 3.0), rs.uniform(-1.0, 1.0));
    const BeamMask mask = magnitude_mask(hv, 3, 3);
    const double p = captured_power(hv, mask);
    for (int trial = 0; trial < 1000; ++trial) {
        BeamMask rnd;
        while (static_cast<int>(rnd.rx_beams.size()) < 3) {
            const int i = static_cast<int>(rs.uniform(0.0, 9.0));
            if (std::find(rnd.rx_beams.begin(), rnd.rx_beams.end(), i) ==
                rnd.rx_beams.end())
                rnd.rx_beams.push_back(i);
        }
        while (static_cast<int>(rnd.tx_beams.size()) < 3) {
            const int j = static_cast<int>(rs.uniform(0.0, 9.0));
            if (std::find(rnd.tx_beams.begin(), rnd.tx_beams.end(), j) ==
                rnd.tx_beams.end())
                rnd.tx_beams.push_back(j);
        }
        CHECK(p >= captured_power(hv, rnd) - 1e-12);
    }
}

TEST_CASE("clustered channels concentrate beamspace power") {
    SystemConfig cfg;  // defaults: 17x17, 10 clusters, 3 deg spread
    cfg.psi = 1;
    cfg.seed = 17;
    const int trials = 200;
    double frac_sum = 0.0;
    for (int t = 0; t < trials; ++t) {
        const CMatrix h = realize_channels(cfg, t).matrices[0];
        const VirtualChannel v = make_virtual(h, cfg.spacing_ratio);
        const BeamMask mask = magnitude_mask(v.full, cfg.l_r, cfg.l_t);
        frac_sum += captured_power(v.full, mask) / v.full.squaredNorm();
    }
    const double uniform_frac =
        double(cfg.l_r * cfg.l_t) / (cfg.n_r * cfg.n_t);
    CHECK(frac_sum / trials > uniform_frac);
}
