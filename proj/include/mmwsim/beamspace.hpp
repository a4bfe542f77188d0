// SPDX-License-Identifier: Apache-2.0

#ifndef MMWSIM_BEAMSPACE_HPP
#define MMWSIM_BEAMSPACE_HPP

#include <vector>

#include "mmwsim/numerics.hpp"

namespace mmwsim {

/// Selected receive/transmit beam index sets (0-based). Order is
/// meaningful: greedy selectors record indices in selection order.
struct BeamMask {
    std::vector<int> rx_beams;
    std::vector<int> tx_beams;
};

/// Unitary beamspace transform basis for one side of the link.
struct VirtualChannel {
    CMatrix full;      // n_r x n_t beamspace matrix
    CMatrix basis_rx;  // n_r x n_r
    CMatrix basis_tx;  // n_t x n_t
};

/// Unitary DFT beam basis. Row i is (1/sqrt(n)) * a(theta_i)^T with beam
/// grid vartheta_i = (i - (n-1)/2)/n. Throws std::domain_error (naming the
/// index) when a grid point has no physical angle, i.e. |vartheta_i| >
/// spacing_ratio.
CMatrix dft_basis(int n, double spacing_ratio);

/// A_R^H * h * A_T. Throws std::invalid_argument on dimension mismatch.
CMatrix to_virtual(const CMatrix &h, const CMatrix &basis_rx,
                   const CMatrix &basis_tx);

VirtualChannel make_virtual(const CMatrix &h, double spacing_ratio);

/// Keeps the l_r rows with the largest row power, then the l_t columns with
/// the largest column power restricted to those rows. Ties break toward the
/// lower index; returned indices are ascending.
BeamMask magnitude_mask(const CMatrix &hv, int l_r, int l_t);

/// Submatrix of hv in mask order. Throws std::out_of_range on bad indices.
CMatrix extract(const CMatrix &hv, const BeamMask &mask);

} // namespace mmwsim

#endif
