// SPDX-License-Identifier: Apache-2.0

#ifndef MMWSIM_FASTSEL_HPP
#define MMWSIM_FASTSEL_HPP

#include "mmwsim/rate.hpp"

namespace mmwsim {

/// argmax over states of log2|I + (rho/l_t) H H^H| on the full (not
/// beam-selected) channel matrices; ties -> lowest state.
int select_state_fast(const ChannelSet &channels, double rho, int l_t);

/// Greedy receive-beam selection. First pick maximizes the row power; later
/// picks maximize h_j (I + scale * Hsel^H Hsel)^{-1} h_j^H over unselected
/// rows, Hsel stacking the selected rows of hv. Returned indices are in
/// selection order. `scale` is rho/n_t in the verbatim formulation,
/// rho/l_t in the consistent one.
std::vector<int> issa_receive(const CMatrix &hv, int l_r, double scale);

/// Greedy transmit-beam selection on the row-reduced matrix (l_r x n_t).
/// First pick maximizes the column power; later picks maximize
/// h_j^H (I - scale * Hsel (I + scale * Hsel^H Hsel)^{-1} Hsel^H) h_j with
/// Hsel the selected columns. `scale` is rho/l_t.
std::vector<int> issa_transmit(const CMatrix &hsub, int l_t, double scale);

/// Full fast selection: state shortcut, beamspace transform, receive then
/// transmit greedy selection, sub-channel extraction, rate.
SelectionOutcome fast_select(const ChannelSet &channels,
                             const SystemConfig &cfg);

/// Per-state fast rate: greedy beam selection on one beamspace matrix
/// (no state shortcut), returning the achieved rate.
double fast_rate_of_state(const CMatrix &hv, const SystemConfig &cfg);

} // namespace mmwsim

#endif
