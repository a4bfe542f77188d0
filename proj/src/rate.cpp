// SPDX-License-Identifier: Apache-2.0

#include "mmwsim/rate.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace mmwsim {

namespace {

double binom(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i)
        r *= static_cast<double>(n - k + i) / i;
    return r;
}

// Advances a k-combination in lexicographic order; false when exhausted.
bool next_combination(std::vector<int> &c, int n) {
    const int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (int j = i + 1; j < k; ++j)
                c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

double rate_of(const CMatrix &sub, double rho, int l_t) {
    return logdet2_capacity(sub, rho / l_t);
}

SelectionOutcome best_submatrix_exhaustive(const CMatrix &hv, int l_r, int l_t,
                                           double rho,
                                           std::uint64_t enum_cap) {
    const int rows = static_cast<int>(hv.rows());
    const int cols = static_cast<int>(hv.cols());
    if (l_r < 1 || l_r > rows || l_t < 1 || l_t > cols)
        throw std::invalid_argument("best_submatrix_exhaustive: invalid sizes");

    const double pairs = binom(rows, l_r) * binom(cols, l_t);
    if (pairs > static_cast<double>(enum_cap))
        throw CapacityError(
            "best_submatrix_exhaustive: " + std::to_string(pairs) +
            " submatrix pairs exceed the enumeration cap of " +
            std::to_string(enum_cap) +
            "; use desk-scale parameters or the fast selector");

    SelectionOutcome best;
    best.rate_bits = -1.0;

    std::vector<int> rset(l_r);
    std::iota(rset.begin(), rset.end(), 0);
    do {
        CMatrix rows_mat(l_r, cols);
        for (int a = 0; a < l_r; ++a)
            rows_mat.row(a) = hv.row(rset[a]);

        std::vector<int> cset(l_t);
        std::iota(cset.begin(), cset.end(), 0);
        do {
            CMatrix sub(l_r, l_t);
            for (int b = 0; b < l_t; ++b)
                sub.col(b) = rows_mat.col(cset[b]);
            const double r = rate_of(sub, rho, l_t);
            // Strict inequality keeps the lexicographically first maximizer.
            if (r > best.rate_bits) {
                best.rate_bits = r;
                best.mask.rx_beams = rset;
                best.mask.tx_beams = cset;
                best.sub_channel = sub;
            }
        } while (next_combination(cset, cols));
    } while (next_combination(rset, rows));

    return best;
}

SelectionOutcome best_state_exhaustive(const ChannelSet &channels,
                                       const SystemConfig &cfg) {
    SelectionOutcome best;
    best.rate_bits = -1.0;
    const double rho = cfg.rho();
    for (std::size_t s = 0; s < channels.matrices.size(); ++s) {
        const CMatrix hv =
            make_virtual(channels.matrices[s], cfg.spacing_ratio).full;
        SelectionOutcome cand =
            best_submatrix_exhaustive(hv, cfg.l_r, cfg.l_t, rho, cfg.enum_cap);
        if (cand.rate_bits > best.rate_bits) {
            best = std::move(cand);
            best.state = static_cast<int>(s);
        }
    }
    return best;
}

} // namespace mmwsim
