// SPDX-License-Identifier: Apache-2.0

#ifndef MMWSIM_CHANNEL_HPP
#define MMWSIM_CHANNEL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mmwsim/numerics.hpp"

namespace mmwsim {

enum class ClusterProfile { equal, exponential };
/// SNR scale used inside the receive-side greedy beam criterion:
/// `full_array` divides by the transmit array size, `per_stream` by the
/// stream count (matching the rate expression).
enum class IssaScale { full_array, per_stream };

/// Scenario parameters. Defaults follow the common mmWave evaluation setup:
/// 17x17 ULA, 5 RF chains per side, 10 clusters of 8 rays, 3 deg spread,
/// half-wavelength spacing, 5000 trials.
struct SystemConfig {
    int n_r = 17;                ///< receive antennas
    int n_t = 17;                ///< transmit antennas
    int l_r = 5;                 ///< receive RF chains
    int l_t = 5;                 ///< transmit RF chains
    int psi = 1;                 ///< reconfiguration states
    double rho_db = 0.0;         ///< transmit power to noise ratio [dB]
    int n_cl = 10;               ///< clusters per state
    int n_ray = 8;               ///< rays per cluster
    double sigma_aoa_deg = 3.0;  ///< AOA angular spread (std dev) [deg]
    double sigma_aod_deg = 3.0;  ///< AOD angular spread (std dev) [deg]
    double spacing_ratio = 0.5;  ///< element spacing d/lambda
    int trials = 5000;
    std::uint64_t seed = 1;

    ClusterProfile cluster_profile = ClusterProfile::equal;
    double cluster_decay = 0.5;  ///< exponential profile decay per cluster
    IssaScale issa_scale = IssaScale::full_array;
    std::uint64_t enum_cap = 10'000'000;  ///< exhaustive enumeration cap

    double rho() const;  ///< linear rho
    /// Throws ConfigError naming the offending field. Returns warnings
    /// (e.g. even array sizes, where the beam grid formula still applies).
    std::vector<std::string> validate() const;
};

/// Per-state cluster/ray geometry for one realization.
struct ClusterGeometry {
    std::vector<double> mean_aoa;       // [cluster]
    std::vector<double> mean_aod;       // [cluster]
    std::vector<double> cluster_power;  // [cluster], sums to gamma
    std::vector<double> ray_aoa;        // [cluster * n_ray]
    std::vector<double> ray_aod;        // [cluster * n_ray]
    std::vector<Complex> ray_gain;      // [cluster * n_ray]
};

/// The per-state channel matrices of one realization.
struct ChannelSet {
    std::vector<CMatrix> matrices;  // psi matrices, each n_r x n_t
};

/// ULA steering vector: entry k = exp(-j 2 pi * spacing_ratio * sin(angle) * k).
CMatrix steering_vector(double angle, int n, double spacing_ratio);

/// Cluster means ~ U[-pi/2, pi/2]; ray offsets ~ U[-sqrt(3) sigma, sqrt(3) sigma]
/// (uniform with standard deviation sigma), clipped to [-pi/2, pi/2];
/// ray gains ~ CN(0, cluster_power[i]). Cluster powers sum to 1/n_ray so
/// that E||H||_F^2 = n_r * n_t.
ClusterGeometry draw_geometry(const SystemConfig &cfg, RandomStream &stream);

/// Deterministic in (cfg.seed, trial_index); state psi uses the stream keyed
/// by (trial_index, psi) so states are independent.
ChannelSet realize_channels(const SystemConfig &cfg, int trial_index);

nlohmann::json config_to_json(const SystemConfig &cfg);
SystemConfig config_from_json(const nlohmann::json &j);
nlohmann::json channel_set_to_json(const SystemConfig &cfg, int trial_index,
                                   const ChannelSet &set);

} // namespace mmwsim

#endif
