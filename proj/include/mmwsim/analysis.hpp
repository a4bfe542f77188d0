// SPDX-License-Identifier: Apache-2.0

#ifndef MMWSIM_ANALYSIS_HPP
#define MMWSIM_ANALYSIS_HPP

#include "mmwsim/numerics.hpp"

namespace mmwsim {

/// Gaussian fit N(mu, var) of the per-state throughput distribution.
struct GaussianRateModel {
    double mu = 0.0;   // bits/s/Hz
    double var = 0.0;  // bits^2/s^2/Hz^2
};

/// Average throughput gain by numerical integration of
///   1/mu - (1/(2^psi mu)) (1 + erf((x - mu)/sqrt(2 var)))^psi
/// over [0, inf). Equals E[max of psi iid N(mu, var)]/mu up to the
/// (negligible for mu >> sigma) probability mass below zero.
double avg_gain_integral(const GaussianRateModel &model, int psi,
                         double abs_tol = 1e-9);

/// Exact mean of the maximum of n iid standard normals, n in 1..5:
/// E1 = 0, E2 = 1/sqrt(pi), E3 = (3/2)/sqrt(pi),
/// E4 = 3 pi^(-3/2) arccos(-1/3), E5 = (5/2) pi^(-3/2) arccos(-23/27).
double gauss_max_mean_exact(int n);

/// Closed form for psi <= 5: 1 + (sigma/mu) * E_psi.
double avg_gain_small(const GaussianRateModel &model, int psi);

/// Gumbel (Fisher-Tippett) approximation for large psi:
/// 1 + (sqrt(2 var)/mu) ((1-beta) erfinv(1 - 2/psi) + beta erfinv(1 - 2/(e psi)))
/// with beta the Euler-Mascheroni constant.
double avg_gain_large(const GaussianRateModel &model, int psi);

/// Leading-order asymptotic: (sqrt(2 var)/mu) sqrt(ln psi).
double avg_gain_asymptotic(const GaussianRateModel &model, int psi);

/// Outage-throughput gain at level eps:
/// (mu - sqrt(2 var) erfinv(1 - 2 eps^(1/psi))) / (mu - sqrt(2 var) erfinv(1 - 2 eps)).
/// Throws std::domain_error when the single-state outage throughput
/// (the denominator) is not positive.
double outage_gain(const GaussianRateModel &model, int psi, double eps);

/// Asymptotic outage gain: sqrt(2 var) sqrt(ln psi) / (mu - sqrt(2 var) erfinv(1 - 2 eps)).
double outage_gain_asymptotic(const GaussianRateModel &model, int psi,
                              double eps);

} // namespace mmwsim

#endif
