// SPDX-License-Identifier: Apache-2.0

#include "mmwsim/fastsel.hpp"

#include <cmath>

namespace mmwsim {

int select_state_fast(const ChannelSet &channels, double rho, int l_t) {
    int best = 0;
    double best_rate = -1.0;
    for (std::size_t s = 0; s < channels.matrices.size(); ++s) {
        const double r = logdet2_capacity(channels.matrices[s], rho / l_t);
        if (r > best_rate) {
            best_rate = r;
            best = static_cast<int>(s);
        }
    }
    return best;
}

std::vector<int> issa_receive(const CMatrix &hv, int l_r, double scale) {
    const int rows = static_cast<int>(hv.rows());
    const int cols = static_cast<int>(hv.cols());
    if (l_r < 1 || l_r > rows)
        throw std::invalid_argument("issa_receive: invalid l_r");

    std::vector<int> selected;
    std::vector<bool> taken(rows, false);

    // First pick: largest row power. Zero channels fall back to index 0.
    int pick = 0;
    double best = -1.0;
    for (int j = 0; j < rows; ++j) {
        const double p = hv.row(j).squaredNorm();
        if (p > best) {
            best = p;
            pick = j;
        }
    }
    selected.push_back(pick);
    taken[pick] = true;

    for (int step = 1; step < l_r; ++step) {
        CMatrix hsel(step, cols);
        for (int a = 0; a < step; ++a)
            hsel.row(a) = hv.row(selected[a]);
        const CMatrix m = CMatrix::Identity(cols, cols) +
                          scale * (hsel.adjoint() * hsel);
        Eigen::LLT<CMatrix> llt(m);

        pick = -1;
        best = -1.0;
        for (int j = 0; j < rows; ++j) {
            if (taken[j])
                continue;
            const Eigen::VectorXcd hj = hv.row(j).adjoint();
            const double g = std::real(hj.dot(llt.solve(hj)));
            if (g > best) {
                best = g;
                pick = j;
            }
        }
        selected.push_back(pick);
        taken[pick] = true;
    }
    return selected;
}

std::vector<int> issa_transmit(const CMatrix &hsub, int l_t, double scale) {
    const int rows = static_cast<int>(hsub.rows());
    const int cols = static_cast<int>(hsub.cols());
    if (l_t < 1 || l_t > cols)
        throw std::invalid_argument("issa_transmit: invalid l_t");

    std::vector<int> selected;
    std::vector<bool> taken(cols, false);

    int pick = 0;
    double best = -1.0;
    for (int j = 0; j < cols; ++j) {
        const double p = hsub.col(j).squaredNorm();
        if (p > best) {
            best = p;
            pick = j;
        }
    }
    selected.push_back(pick);
    taken[pick] = true;

    for (int step = 1; step < l_t; ++step) {
        CMatrix hsel(rows, step);
        for (int a = 0; a < step; ++a)
            hsel.col(a) = hsub.col(selected[a]);
        const CMatrix gram = CMatrix::Identity(step, step) +
                             scale * (hsel.adjoint() * hsel);
        Eigen::LLT<CMatrix> llt(gram);

        pick = -1;
        best = -1.0;
        for (int j = 0; j < cols; ++j) {
            if (taken[j])
                continue;
            const Eigen::VectorXcd hj = hsub.col(j);
            const Eigen::VectorXcd w = hsel.adjoint() * hj;
            const double c = hj.squaredNorm() -
                             scale * std::real(w.dot(llt.solve(w)));
            if (c > best) {
                best = c;
                pick = j;
            }
        }
        selected.push_back(pick);
        taken[pick] = true;
    }
    return selected;
}

namespace {

SelectionOutcome fast_select_on_virtual(const CMatrix &hv,
                                        const SystemConfig &cfg) {
    const double rho = cfg.rho();
    const double rx_scale = cfg.issa_scale == IssaScale::full_array
                                ? rho / cfg.n_t
                                : rho / cfg.l_t;
    SelectionOutcome out;
    out.mask.rx_beams = issa_receive(hv, cfg.l_r, rx_scale);

    CMatrix hsub(cfg.l_r, hv.cols());
    for (int a = 0; a < cfg.l_r; ++a)
        hsub.row(a) = hv.row(out.mask.rx_beams[a]);
    out.mask.tx_beams = issa_transmit(hsub, cfg.l_t, rho / cfg.l_t);

    out.sub_channel = extract(hv, out.mask);
    out.rate_bits = rate_of(out.sub_channel, rho, cfg.l_t);
    return out;
}

} // namespace

SelectionOutcome fast_select(const ChannelSet &channels,
                             const SystemConfig &cfg) {
    const int state = select_state_fast(channels, cfg.rho(), cfg.l_t);
    const CMatrix hv =
        make_virtual(channels.matrices[state], cfg.spacing_ratio).full;
    SelectionOutcome out = fast_select_on_virtual(hv, cfg);
    out.state = state;
    return out;
}

double fast_rate_of_state(const CMatrix &hv, const SystemConfig &cfg) {
    return fast_select_on_virtual(hv, cfg).rate_bits;
}

} // namespace mmwsim
