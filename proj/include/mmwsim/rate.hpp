// SPDX-License-Identifier: Apache-2.0

#ifndef MMWSIM_RATE_HPP
#define MMWSIM_RATE_HPP

#include "mmwsim/beamspace.hpp"
#include "mmwsim/channel.hpp"

namespace mmwsim {

/// Result of a state/beam selection: chosen state (-1 when not applicable),
/// beam mask, low-dimensional sub-channel, and the achieved rate.
struct SelectionOutcome {
    int state = -1;
    BeamMask mask;
    CMatrix sub_channel;
    double rate_bits = 0.0;
};

/// log2|I + (rho/l_t) sub sub^H|.
double rate_of(const CMatrix &sub, double rho, int l_t);

/// Enumerates every (row set, column set) pair of size (l_r, l_t) and
/// returns the rate maximizer; ties go to the lexicographically smallest
/// mask. Throws CapacityError when the pair count exceeds enum_cap.
SelectionOutcome best_submatrix_exhaustive(const CMatrix &hv, int l_r, int l_t,
                                           double rho,
                                           std::uint64_t enum_cap = 10'000'000);

/// Exhaustive beam selection on every state's beamspace matrix, then argmax
/// over states (ties -> lowest state).
SelectionOutcome best_state_exhaustive(const ChannelSet &channels,
                                       const SystemConfig &cfg);

} // namespace mmwsim

#endif
