// SPDX-License-Identifier: Apache-2.0

#include "mmwsim/beamspace.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace mmwsim {

CMatrix dft_basis(int n, double spacing_ratio) {
    if (n < 1)
        throw std::domain_error("dft_basis: n must be >= 1");
    CMatrix a(n, n);
    const double norm = 1.0 / std::sqrt(static_cast<double>(n));
    const double center = (n - 1) / 2.0;
    for (int i = 0; i < n; ++i) {
        const double vartheta = (i - center) / n;
        // The grid beam must map to a physical angle via asin(vartheta / ratio).
        if (std::abs(vartheta) > spacing_ratio)
            throw std::domain_error(
                "dft_basis: beam index " + std::to_string(i) +
                " has |vartheta| = " + std::to_string(std::abs(vartheta)) +
                " > spacing_ratio; no physical angle exists");
        // Element phases are referenced to the array center so that the
        // matrix is symmetric: the row-of-beams and column-of-beams views
        // coincide, and the analysis transform A^H H A aligns beam i with
        // grid direction vartheta_i (broadside lands on the center beam).
        for (int k = 0; k < n; ++k) {
            const double phase = -2.0 * M_PI * vartheta * (k - center);
            a(i, k) = norm * Complex(std::cos(phase), std::sin(phase));
        }
    }
    return a;
}

CMatrix to_virtual(const CMatrix &h, const CMatrix &basis_rx,
                   const CMatrix &basis_tx) {
    if (basis_rx.rows() != h.rows() || basis_tx.rows() != h.cols())
        throw std::invalid_argument("to_virtual: dimension mismatch");
    return basis_rx.adjoint() * h * basis_tx;
}

VirtualChannel make_virtual(const CMatrix &h, double spacing_ratio) {
    VirtualChannel v;
    v.basis_rx = dft_basis(static_cast<int>(h.rows()), spacing_ratio);
    v.basis_tx = dft_basis(static_cast<int>(h.cols()), spacing_ratio);
    v.full = to_virtual(h, v.basis_rx, v.basis_tx);
    return v;
}

namespace {

// Indices of the k largest values; ties go to the lower index.
std::vector<int> top_k(const std::vector<double> &vals, int k) {
    std::vector<int> idx(vals.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&vals](int a, int b) { return vals[a] > vals[b]; });
    idx.resize(k);
    std::sort(idx.begin(), idx.end());
    return idx;
}

} // namespace

BeamMask magnitude_mask(const CMatrix &hv, int l_r, int l_t) {
    const int rows = static_cast<int>(hv.rows());
    const int cols = static_cast<int>(hv.cols());
    if (l_r < 1 || l_r > rows || l_t < 1 || l_t > cols)
        throw std::invalid_argument("magnitude_mask: invalid mask size");

    std::vector<double> row_power(rows);
    for (int i = 0; i < rows; ++i)
        row_power[i] = hv.row(i).squaredNorm();

    BeamMask mask;
    mask.rx_beams = top_k(row_power, l_r);

    std::vector<double> col_power(cols, 0.0);
    for (int j = 0; j < cols; ++j)
        for (int i : mask.rx_beams)
            col_power[j] += std::norm(hv(i, j));
    mask.tx_beams = top_k(col_power, l_t);
    return mask;
}

CMatrix extract(const CMatrix &hv, const BeamMask &mask) {
    CMatrix sub(mask.rx_beams.size(), mask.tx_beams.size());
    for (std::size_t a = 0; a < mask.rx_beams.size(); ++a) {
        const int i = mask.rx_beams[a];
        if (i < 0 || i >= hv.rows())
            throw std::out_of_range("extract: rx beam index out of range");
        for (std::size_t b = 0; b < mask.tx_beams.size(); ++b) {
            const int j = mask.tx_beams[b];
            if (j < 0 || j >= hv.cols())
                throw std::out_of_range("extract: tx beam index out of range");
            sub(a, b) = hv(i, j);
        }
    }
    return sub;
}

} // namespace mmwsim
