// SPDX-License-Identifier: Apache-2.0

#include "mmwsim/simlab.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numeric>

namespace mmwsim {

namespace {

double mean_of(const std::vector<double> &v) {
    return std::accumulate(v.begin(), v.end(), 0.0) / v.size();
}

// Lower order statistic honoring P(R < r) <= eps.
double lower_quantile(std::vector<double> v, double eps) {
    const int n = static_cast<int>(v.size());
    int k = static_cast<int>(std::floor(eps * n));
    if (k < 1)
        throw std::invalid_argument(
            "empirical_outage_gain: trials * eps too small for a quantile");
    std::nth_element(v.begin(), v.begin() + (k - 1), v.end());
    return v[k - 1];
}

// Runs body(t) for every trial, optionally under OpenMP. Exceptions are
// captured and rethrown after the loop so the parallel region stays clean.
template <typename Body>
void for_each_trial(int trials, Execution exec, const Body &body) {
    std::exception_ptr error;
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int t = 0; t < trials; ++t) {
            try {
                body(t);
            } catch (...) {
#pragma omp critical
                if (!error)
                    error = std::current_exception();
            }
        }
    } else {
        for (int t = 0; t < trials; ++t)
            body(t);
    }
    if (error)
        std::rethrow_exception(error);
}

} // namespace

RateTable compute_rate_table(const SystemConfig &cfg, Selector selector,
                             Execution exec) {
    cfg.validate();
    RateTable table;
    table.selector = selector;
    table.rates.assign(cfg.trials, std::vector<double>(cfg.psi, 0.0));
    const double rho = cfg.rho();

    for_each_trial(cfg.trials, exec, [&](int t) {
        const ChannelSet channels = realize_channels(cfg, t);
        for (int s = 0; s < cfg.psi; ++s) {
            const CMatrix hv =
                make_virtual(channels.matrices[s], cfg.spacing_ratio).full;
            if (selector == Selector::exhaustive)
                table.rates[t][s] = best_submatrix_exhaustive(
                                        hv, cfg.l_r, cfg.l_t, rho, cfg.enum_cap)
                                        .rate_bits;
            else
                table.rates[t][s] = fast_rate_of_state(hv, cfg);
        }
    });
    return table;
}

RateSamples samples_from_table(const RateTable &table) {
    RateSamples out;
    out.selector = table.selector;
    out.single.reserve(table.rates.size());
    out.best.reserve(table.rates.size());
    for (const auto &row : table.rates) {
        out.single.push_back(row.front());
        out.best.push_back(*std::max_element(row.begin(), row.end()));
    }
    return out;
}

GaussianRateModel fit_rate_model(const RateSamples &samples) {
    const std::size_t n = samples.single.size();
    if (n < 2)
        throw std::invalid_argument("fit_rate_model: need at least 2 samples");
    GaussianRateModel model;
    model.mu = mean_of(samples.single);
    double ss = 0.0;
    for (double r : samples.single)
        ss += (r - model.mu) * (r - model.mu);
    model.var = ss / (n - 1);
    return model;
}

std::vector<double> empirical_avg_gain(const RateTable &table,
                                       const std::vector<int> &psi_list) {
    const int psi_max = static_cast<int>(table.rates.front().size());
    double denom = 0.0;
    for (const auto &row : table.rates)
        denom += row.front();
    denom /= table.rates.size();

    std::vector<double> gains;
    gains.reserve(psi_list.size());
    for (int psi : psi_list) {
        if (psi < 1 || psi > psi_max)
            throw std::invalid_argument("empirical_avg_gain: psi out of range");
        double numer = 0.0;
        for (const auto &row : table.rates)
            numer += *std::max_element(row.begin(), row.begin() + psi);
        gains.push_back(numer / table.rates.size() / denom);
    }
    return gains;
}

std::vector<double> empirical_outage_gain(const RateTable &table,
                                          const std::vector<int> &psi_list,
                                          double eps) {
    const int n = static_cast<int>(table.rates.size());
    if (n * eps < 20.0)
        throw std::invalid_argument(
            "empirical_outage_gain: need trials * eps >= 20");
    const int psi_max = static_cast<int>(table.rates.front().size());

    std::vector<double> single;
    single.reserve(n);
    for (const auto &row : table.rates)
        single.push_back(row.front());
    const double denom = lower_quantile(single, eps);

    std::vector<double> gains;
    gains.reserve(psi_list.size());
    for (int psi : psi_list) {
        if (psi < 1 || psi > psi_max)
            throw std::invalid_argument(
                "empirical_outage_gain: psi out of range");
        std::vector<double> best;
        best.reserve(n);
        for (const auto &row : table.rates)
            best.push_back(*std::max_element(row.begin(), row.begin() + psi));
        gains.push_back(lower_quantile(best, eps) / denom);
    }
    return gains;
}

std::vector<double> loss_ratio(const SystemConfig &cfg,
                               const std::vector<int> &psi_list,
                               Execution exec) {
    cfg.validate();
    const double rho = cfg.rho();
    const int trials = cfg.trials;
    const int psi_max = cfg.psi;

    // Per trial and state: exhaustive rate, fast (greedy) rate, and the
    // full-channel log-det driving the fast state choice.
    std::vector<std::vector<double>> exh(trials), fast(trials), fullld(trials);

    for_each_trial(trials, exec, [&](int t) {
        const ChannelSet channels = realize_channels(cfg, t);
        exh[t].resize(psi_max);
        fast[t].resize(psi_max);
        fullld[t].resize(psi_max);
        for (int s = 0; s < psi_max; ++s) {
            const CMatrix hv =
                make_virtual(channels.matrices[s], cfg.spacing_ratio).full;
            exh[t][s] = best_submatrix_exhaustive(hv, cfg.l_r, cfg.l_t, rho,
                                                  cfg.enum_cap)
                            .rate_bits;
            fast[t][s] = fast_rate_of_state(hv, cfg);
            fullld[t][s] = logdet2_capacity(channels.matrices[s],
                                            rho / cfg.l_t);
        }
    });

    std::vector<double> ratios;
    ratios.reserve(psi_list.size());
    for (int psi : psi_list) {
        if (psi < 1 || psi > psi_max)
            throw std::invalid_argument("loss_ratio: psi out of range");
        double mean_exh = 0.0;
        double mean_fast = 0.0;
        for (int t = 0; t < trials; ++t) {
            mean_exh +=
                *std::max_element(exh[t].begin(), exh[t].begin() + psi);
            const int state = static_cast<int>(
                std::max_element(fullld[t].begin(), fullld[t].begin() + psi) -
                fullld[t].begin());
            mean_fast += fast[t][state];
        }
        mean_exh /= trials;
        mean_fast /= trials;
        ratios.push_back((mean_exh - mean_fast) / mean_exh);
    }
    return ratios;
}

Histogram pdf_export(const std::vector<double> &samples, int bins) {
    if (bins < 5)
        throw std::invalid_argument("pdf_export: need at least 5 bins");
    const auto [mn_it, mx_it] =
        std::minmax_element(samples.begin(), samples.end());
    double lo = *mn_it;
    double hi = *mx_it;
    if (hi <= lo)
        hi = lo + 1.0;  // all-equal samples occupy one bin
    const double width = (hi - lo) / bins;

    Histogram h;
    h.bin_center.resize(bins);
    h.density.assign(bins, 0.0);
    for (double x : samples) {
        int b = static_cast<int>((x - lo) / width);
        b = std::clamp(b, 0, bins - 1);
        h.density[b] += 1.0;
    }
    const double scale = 1.0 / (samples.size() * width);
    for (int b = 0; b < bins; ++b) {
        h.bin_center[b] = lo + (b + 0.5) * width;
        h.density[b] *= scale;
    }

    RateSamples rs;
    rs.single = samples;
    rs.best = samples;
    const GaussianRateModel fit = fit_rate_model(rs);
    h.fit_density.resize(bins);
    const double sigma = std::sqrt(std::max(fit.var, 1e-300));
    for (int b = 0; b < bins; ++b) {
        const double z = (h.bin_center[b] - fit.mu) / sigma;
        h.fit_density[b] =
            std::exp(-0.5 * z * z) / (sigma * std::sqrt(2.0 * M_PI));
    }
    return h;
}

} // namespace mmwsim
