// SPDX-License-Identifier: Apache-2.0

#include "mmwsim/channel.hpp"

#include <algorithm>
#include <cmath>

namespace mmwsim {

namespace {

constexpr double kHalfPi = M_PI / 2.0;

double deg2rad(double d) { return d * M_PI / 180.0; }

std::uint64_t stream_id_for(int trial_index, int state) {
    return (static_cast<std::uint64_t>(trial_index) << 32) |
           static_cast<std::uint64_t>(state);
}

} // namespace

double SystemConfig::rho() const { return std::pow(10.0, rho_db / 10.0); }

std::vector<std::string> SystemConfig::validate() const {
    auto fail = [](const std::string &msg) { throw ConfigError(msg); };
    if (n_r < 1) fail("n_r must be >= 1");
    if (n_t < 1) fail("n_t must be >= 1");
    if (l_r < 1 || l_r > n_r) fail("l_r must satisfy 1 <= l_r <= n_r");
    if (l_t < 1 || l_t > n_t) fail("l_t must satisfy 1 <= l_t <= n_t");
    if (l_t > l_r) fail("l_t must satisfy l_t <= l_r");
    if (psi < 1) fail("psi must be >= 1");
    if (n_cl < 1) fail("n_cl must be >= 1");
    if (n_ray < 1) fail("n_ray must be >= 1");
    if (!(spacing_ratio > 0.0)) fail("spacing_ratio must be > 0");
    if (sigma_aoa_deg < 0.0) fail("sigma_aoa_deg must be >= 0");
    if (sigma_aod_deg < 0.0) fail("sigma_aod_deg must be >= 0");
    if (trials < 1) fail("trials must be >= 1");
    if (!std::isfinite(rho_db)) fail("rho_db must be finite");
    if (cluster_profile == ClusterProfile::exponential && cluster_decay < 0.0)
        fail("cluster_decay must be >= 0");

    std::vector<std::string> warnings;
    if (n_r % 2 == 0 || n_t % 2 == 0)
        warnings.push_back(
            "even array size: the beam grid formula assumes odd element "
            "counts; proceeding with the same grid");
    return warnings;
}

CMatrix steering_vector(double angle, int n, double spacing_ratio) {
    const double vartheta = spacing_ratio * std::sin(angle);
    CMatrix a(n, 1);
    for (int k = 0; k < n; ++k) {
        const double phase = -2.0 * M_PI * vartheta * k;
        a(k, 0) = Complex(std::cos(phase), std::sin(phase));
    }
    return a;
}

ClusterGeometry draw_geometry(const SystemConfig &cfg, RandomStream &stream) {
    ClusterGeometry g;
    const int nc = cfg.n_cl;
    const int nr = cfg.n_ray;
    g.mean_aoa.resize(nc);
    g.mean_aod.resize(nc);
    g.cluster_power.resize(nc);
    g.ray_aoa.resize(static_cast<std::size_t>(nc) * nr);
    g.ray_aod.resize(static_cast<std::size_t>(nc) * nr);
    g.ray_gain.resize(static_cast<std::size_t>(nc) * nr);

    // Cluster powers sum to gamma = 1/n_ray, making E||H||_F^2 = n_r * n_t.
    const double gamma = 1.0 / nr;
    if (cfg.cluster_profile == ClusterProfile::equal) {
        std::fill(g.cluster_power.begin(), g.cluster_power.end(), gamma / nc);
    } else {
        double sum = 0.0;
        for (int i = 0; i < nc; ++i) {
            g.cluster_power[i] = std::exp(-cfg.cluster_decay * i);
            sum += g.cluster_power[i];
        }
        for (int i = 0; i < nc; ++i)
            g.cluster_power[i] *= gamma / sum;
    }

    const double half_r = std::sqrt(3.0) * deg2rad(cfg.sigma_aoa_deg);
    const double half_t = std::sqrt(3.0) * deg2rad(cfg.sigma_aod_deg);

    for (int i = 0; i < nc; ++i) {
        g.mean_aoa[i] = stream.uniform(-kHalfPi, kHalfPi);
        g.mean_aod[i] = stream.uniform(-kHalfPi, kHalfPi);
        const double amp = std::sqrt(g.cluster_power[i]);
        for (int l = 0; l < nr; ++l) {
            const std::size_t idx = static_cast<std::size_t>(i) * nr + l;
            const double aoa = g.mean_aoa[i] + stream.uniform(-half_r, half_r);
            const double aod = g.mean_aod[i] + stream.uniform(-half_t, half_t);
            g.ray_aoa[idx] = std::clamp(aoa, -kHalfPi, kHalfPi);
            g.ray_aod[idx] = std::clamp(aod, -kHalfPi, kHalfPi);
            g.ray_gain[idx] = amp * stream.complex_normal();
        }
    }
    return g;
}

ChannelSet realize_channels(const SystemConfig &cfg, int trial_index) {
    ChannelSet set;
    set.matrices.reserve(cfg.psi);
    for (int state = 0; state < cfg.psi; ++state) {
        RandomStream stream(cfg.seed, stream_id_for(trial_index, state));
        const ClusterGeometry g = draw_geometry(cfg, stream);
        CMatrix h = CMatrix::Zero(cfg.n_r, cfg.n_t);
        for (std::size_t p = 0; p < g.ray_gain.size(); ++p) {
            const CMatrix ar = steering_vector(g.ray_aoa[p], cfg.n_r,
                                               cfg.spacing_ratio);
            const CMatrix at = steering_vector(g.ray_aod[p], cfg.n_t,
                                               cfg.spacing_ratio);
            h.noalias() += g.ray_gain[p] * (ar * at.adjoint());
        }
        set.matrices.push_back(std::move(h));
    }
    return set;
}

nlohmann::json config_to_json(const SystemConfig &cfg) {
    return nlohmann::json{
        {"n_r", cfg.n_r},
        {"n_t", cfg.n_t},
        {"l_r", cfg.l_r},
        {"l_t", cfg.l_t},
        {"psi", cfg.psi},
        {"rho_db", cfg.rho_db},
        {"n_cl", cfg.n_cl},
        {"n_ray", cfg.n_ray},
        {"sigma_aoa_deg", cfg.sigma_aoa_deg},
        {"sigma_aod_deg", cfg.sigma_aod_deg},
        {"spacing_ratio", cfg.spacing_ratio},
        {"trials", cfg.trials},
        {"seed", cfg.seed},
        {"cluster_profile",
         cfg.cluster_profile == ClusterProfile::equal ? "equal" : "exponential"},
        {"cluster_decay", cfg.cluster_decay},
        {"issa_scale",
         cfg.issa_scale == IssaScale::full_array ? "full_array"
                                                 : "per_stream"},
        {"enum_cap", cfg.enum_cap},
    };
}

SystemConfig config_from_json(const nlohmann::json &j) {
    SystemConfig cfg;
    auto get = [&j](const char *key, auto &out) {
        if (j.contains(key))
            out = j.at(key).get<std::decay_t<decltype(out)>>();
    };
    get("n_r", cfg.n_r);
    get("n_t", cfg.n_t);
    get("l_r", cfg.l_r);
    get("l_t", cfg.l_t);
    get("psi", cfg.psi);
    get("rho_db", cfg.rho_db);
    get("n_cl", cfg.n_cl);
    get("n_ray", cfg.n_ray);
    get("sigma_aoa_deg", cfg.sigma_aoa_deg);
    get("sigma_aod_deg", cfg.sigma_aod_deg);
    get("spacing_ratio", cfg.spacing_ratio);
    get("trials", cfg.trials);
    get("seed", cfg.seed);
    get("cluster_decay", cfg.cluster_decay);
    get("enum_cap", cfg.enum_cap);
    if (j.contains("cluster_profile")) {
        const std::string p = j.at("cluster_profile").get<std::string>();
        if (p == "equal")
            cfg.cluster_profile = ClusterProfile::equal;
        else if (p == "exponential")
            cfg.cluster_profile = ClusterProfile::exponential;
        else
            throw ConfigError("cluster_profile must be 'equal' or 'exponential'");
    }
    if (j.contains("issa_scale")) {
        const std::string s = j.at("issa_scale").get<std::string>();
        if (s == "full_array")
            cfg.issa_scale = IssaScale::full_array;
        else if (s == "per_stream")
            cfg.issa_scale = IssaScale::per_stream;
        else
            throw ConfigError(
                "issa_scale must be 'full_array' or 'per_stream'");
    }
    return cfg;
}

nlohmann::json channel_set_to_json(const SystemConfig &cfg, int trial_index,
                                   const ChannelSet &set) {
    nlohmann::json states = nlohmann::json::array();
    for (const CMatrix &h : set.matrices) {
        nlohmann::json entries = nlohmann::json::array();
        for (Eigen::Index r = 0; r < h.rows(); ++r)
            for (Eigen::Index c = 0; c < h.cols(); ++c)
                entries.push_back({h(r, c).real(), h(r, c).imag()});
        states.push_back({{"rows", h.rows()},
                          {"cols", h.cols()},
                          {"entries", entries}});
    }
    return nlohmann::json{{"schema", 1},
                          {"config", config_to_json(cfg)},
                          {"trial_index", trial_index},
                          {"states", states}};
}

} // namespace mmwsim
