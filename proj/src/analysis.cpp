// SPDX-License-Identifier: Apache-2.0

#include "mmwsim/analysis.hpp"

#include <cmath>

namespace mmwsim {

namespace {

constexpr double kEuler = 0.577215664901533;

void check_model(const GaussianRateModel &model) {
    if (!(model.mu > 0.0) || !(model.var >= 0.0) ||
        !std::isfinite(model.mu) || !std::isfinite(model.var))
        throw std::domain_error("analysis: model requires mu > 0, var >= 0");
}

} // namespace

double avg_gain_integral(const GaussianRateModel &model, int psi,
                         double abs_tol) {
    check_model(model);
    if (psi < 1)
        throw std::domain_error("avg_gain_integral: psi must be >= 1");
    if (model.var == 0.0)
        return 1.0;

    const double mu = model.mu;
    const double denom = std::sqrt(2.0 * model.var);
    // (1 + erf(z))^psi / 2^psi = (1 - erfc(z)/2)^psi, evaluated through
    // log1p/expm1 so the integrand stays accurate deep in the upper tail.
    auto integrand = [mu, denom, psi](double x) {
        const double z = (x - mu) / denom;
        const double u = 0.5 * std::erfc(z);
        return -std::expm1(psi * std::log1p(-u)) / mu;
    };
    return integrate_to_infinity(integrand, 0.0, abs_tol);
}

double gauss_max_mean_exact(int n) {
    const double inv_sqrt_pi = 1.0 / std::sqrt(M_PI);
    const double pi_neg32 = std::pow(M_PI, -1.5);
    switch (n) {
    case 1:
        return 0.0;
    case 2:
        return inv_sqrt_pi;
    case 3:
        return 1.5 * inv_sqrt_pi;
    case 4:
        return 3.0 * pi_neg32 * std::acos(-1.0 / 3.0);
    case 5:
        return 2.5 * pi_neg32 * std::acos(-23.0 / 27.0);
    default:
        throw std::domain_error("gauss_max_mean_exact: n must be in 1..5");
    }
}

double avg_gain_small(const GaussianRateModel &model, int psi) {
    check_model(model);
    return 1.0 + std::sqrt(model.var) / model.mu * gauss_max_mean_exact(psi);
}

double avg_gain_large(const GaussianRateModel &model, int psi) {
    check_model(model);
    if (psi < 2)
        throw std::domain_error("avg_gain_large: psi must be >= 2");
    const double s = std::sqrt(2.0 * model.var) / model.mu;
    const double e_max =
        (1.0 - kEuler) * erf_inv(1.0 - 2.0 / psi) +
        kEuler * erf_inv(1.0 - 2.0 / (M_E * psi));
    return 1.0 + s * e_max;
}

double avg_gain_asymptotic(const GaussianRateModel &model, int psi) {
    check_model(model);
    if (psi < 2)
        throw std::domain_error("avg_gain_asymptotic: psi must be >= 2");
    return std::sqrt(2.0 * model.var) / model.mu *
           std::sqrt(std::log(static_cast<double>(psi)));
}

double outage_gain(const GaussianRateModel &model, int psi, double eps) {
    check_model(model);
    if (psi < 1)
        throw std::domain_error("outage_gain: psi must be >= 1");
    if (!(eps > 0.0 && eps < 1.0))
        throw std::domain_error("outage_gain: eps must lie in (0, 1)");
    const double spread = std::sqrt(2.0 * model.var);
    const double denom = model.mu - spread * erf_inv(1.0 - 2.0 * eps);
    if (!(denom > 0.0))
        throw std::domain_error(
            "outage_gain: single-state outage throughput is not positive at "
            "this eps");
    const double numer =
        model.mu - spread * erf_inv(1.0 - 2.0 * std::pow(eps, 1.0 / psi));
    return numer / denom;
}

double outage_gain_asymptotic(const GaussianRateModel &model, int psi,
                              double eps) {
    check_model(model);
    if (psi < 2)
        throw std::domain_error("outage_gain_asymptotic: psi must be >= 2");
    if (!(eps > 0.0 && eps < 1.0))
        throw std::domain_error("outage_gain_asymptotic: eps must lie in (0, 1)");
    const double spread = std::sqrt(2.0 * model.var);
    const double denom = model.mu - spread * erf_inv(1.0 - 2.0 * eps);
    if (!(denom > 0.0))
        throw std::domain_error(
            "outage_gain_asymptotic: single-state outage throughput is not "
            "positive at this eps");
    return spread * std::sqrt(std::log(static_cast<double>(psi))) / denom;
}

} // namespace mmwsim
