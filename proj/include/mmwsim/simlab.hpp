// SPDX-License-Identifier: Apache-2.0

#ifndef MMWSIM_SIMLAB_HPP
#define MMWSIM_SIMLAB_HPP

#include <string>
#include <vector>

#include "mmwsim/analysis.hpp"
#include "mmwsim/fastsel.hpp"

namespace mmwsim {

enum class Selector { exhaustive, fast };
enum class Execution { serial, parallel };

/// Per-trial, per-state beam-selected rates under one selector. Row t holds
/// the first cfg.psi states of trial t; all Psi-prefix statistics are taken
/// from this one table (common random numbers).
struct RateTable {
    std::vector<std::vector<double>> rates;  // [trial][state]
    Selector selector = Selector::fast;
};

/// Per-trial single-state and best-state rate samples.
struct RateSamples {
    std::vector<double> single;  // R of state 1
    std::vector<double> best;    // max over all states
    Selector selector = Selector::fast;
};

struct Histogram {
    std::vector<double> bin_center;
    std::vector<double> density;      // normalized histogram
    std::vector<double> fit_density;  // N(mu, var) fit on the same grid
};

/// Computes the rate table. The trial loop runs under OpenMP when exec is
/// parallel; results are stored by trial index, so serial and parallel runs
/// are bit-identical. The exhaustive selector enforces the enumeration cap.
RateTable compute_rate_table(const SystemConfig &cfg, Selector selector,
                             Execution exec = Execution::parallel);

RateSamples samples_from_table(const RateTable &table);

/// Sample mean and unbiased variance of the single-state rates. Throws
/// std::invalid_argument with fewer than 2 samples.
GaussianRateModel fit_rate_model(const RateSamples &samples);

/// Mean prefix-maximum rate over the first psi states divided by the mean
/// state-1 rate, for each psi in psi_list, all from one table.
std::vector<double> empirical_avg_gain(const RateTable &table,
                                       const std::vector<int> &psi_list);

/// Ratio of eps-quantiles (k-th order statistic, k = floor(eps * n)) of the
/// prefix-maximum rates to the state-1 rates. Requires trials * eps >= 20.
std::vector<double> empirical_outage_gain(const RateTable &table,
                                          const std::vector<int> &psi_list,
                                          double eps);

/// Average throughput loss of the full fast selection algorithm (state
/// shortcut + greedy beams) against exhaustive search, per psi prefix:
/// (mean exhaustive - mean fast) / mean exhaustive, common random numbers.
std::vector<double> loss_ratio(const SystemConfig &cfg,
                               const std::vector<int> &psi_list,
                               Execution exec = Execution::parallel);

Histogram pdf_export(const std::vector<double> &samples, int bins);

} // namespace mmwsim

#endif
