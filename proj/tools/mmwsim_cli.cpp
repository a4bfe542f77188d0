// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: channel simulation experiments (pdf, gain-avg,
// gain-outage, loss-ratio), pure formula evaluation (analytic), and channel
// dumps. Same config + seed gives byte-identical output files; timing goes
// to stderr only.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mmwsim/simlab.hpp"

namespace {

using namespace mmwsim;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::vector<int> parse_psi_list(const std::string &spec) {
    std::vector<int> out;
    std::stringstream ss(spec);
    std::string part;
    while (std::getline(ss, part, ',')) {
        const auto dots = part.find("..");
        if (dots != std::string::npos) {
            const int lo = std::stoi(part.substr(0, dots));
            const int hi = std::stoi(part.substr(dots + 2));
            if (lo < 1 || hi < lo)
                throw ConfigError("psi: bad range '" + part + "'");
            for (int p = lo; p <= hi; ++p)
                out.push_back(p);
        } else {
            const int p = std::stoi(part);
            if (p < 1)
                throw ConfigError("psi: must be >= 1");
            out.push_back(p);
        }
    }
    if (out.empty())
        throw ConfigError("psi: empty list");
    return out;
}

void write_text(const std::string &path, const std::string &content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw ConfigError("out: cannot open '" + path + "' for writing");
    f << content;
}

struct CommonOpts {
    std::string config_path;
    std::string out = "-";
    std::string report;
    std::string psi_spec;
    std::optional<std::uint64_t> seed;
    std::optional<int> trials;
    std::optional<double> rho_db;
    std::string selector = "fast";
    bool serial = false;
};

void add_common(CLI::App *cmd, CommonOpts &o, bool with_selector = true) {
    cmd->add_option("--config", o.config_path, "JSON config file");
    cmd->add_option("--seed", o.seed, "RNG seed");
    cmd->add_option("--trials", o.trials, "Monte Carlo trials");
    cmd->add_option("--psi", o.psi_spec, "states: N, A..B, or comma list");
    cmd->add_option("--rho-db", o.rho_db, "transmit power to noise ratio [dB]");
    cmd->add_option("--out", o.out, "output path ('-' = stdout)");
    cmd->add_option("--report", o.report, "JSON report path");
    if (with_selector)
        cmd->add_option("--selector", o.selector, "fast | exhaustive")
            ->check(CLI::IsMember({"fast", "exhaustive"}));
    cmd->add_flag("--serial", o.serial, "disable the OpenMP trial loop");
}

SystemConfig load_config(const CommonOpts &o, int psi_max) {
    SystemConfig cfg;
    if (!o.config_path.empty()) {
        std::ifstream f(o.config_path);
        if (!f)
            throw ConfigError("config: cannot read '" + o.config_path + "'");
        nlohmann::json j;
        f >> j;
        cfg = config_from_json(j);
    }
    if (o.seed)
        cfg.seed = *o.seed;
    if (o.trials)
        cfg.trials = *o.trials;
    if (o.rho_db)
        cfg.rho_db = *o.rho_db;
    cfg.psi = psi_max;
    for (const std::string &w : cfg.validate())
        std::cerr << "warning: " << w << "\n";
    return cfg;
}

void maybe_report(const CommonOpts &o, const SystemConfig &cfg,
                  const std::string &subcommand, nlohmann::json extra) {
    if (o.report.empty())
        return;
    nlohmann::json j{{"schema", 1},
                     {"subcommand", subcommand},
                     {"config", config_to_json(cfg)}};
    j.update(extra);
    write_text(o.report, j.dump(2) + "\n");
}

int run_pdf(const CommonOpts &o, int bins) {
    const int psi_max = o.psi_spec.empty()
                            ? 1
                            : parse_psi_list(o.psi_spec).back();
    SystemConfig cfg = load_config(o, psi_max);
    const Selector sel =
        o.selector == "fast" ? Selector::fast : Selector::exhaustive;
    const Execution exec = o.serial ? Execution::serial : Execution::parallel;

    const RateTable table = compute_rate_table(cfg, sel, exec);
    const RateSamples samples = samples_from_table(table);
    const GaussianRateModel model = fit_rate_model(samples);
    const Histogram h = pdf_export(samples.single, bins);

    std::string csv = "bin_center,density,fit_density\n";
    for (std::size_t b = 0; b < h.bin_center.size(); ++b)
        csv += fmt(h.bin_center[b]) + "," + fmt(h.density[b]) + "," +
               fmt(h.fit_density[b]) + "\n";
    write_text(o.out, csv);
    maybe_report(o, cfg, "pdf",
                 {{"mu", model.mu}, {"var", model.var}, {"bins", bins}});
    return 0;
}

int run_gain_avg(const CommonOpts &o) {
    const std::vector<int> psi_list =
        parse_psi_list(o.psi_spec.empty() ? "1..8" : o.psi_spec);
    SystemConfig cfg = load_config(o, psi_list.back());
    const Selector sel =
        o.selector == "fast" ? Selector::fast : Selector::exhaustive;
    const Execution exec = o.serial ? Execution::serial : Execution::parallel;

    const RateTable table = compute_rate_table(cfg, sel, exec);
    const GaussianRateModel model = fit_rate_model(samples_from_table(table));
    const std::vector<double> emp = empirical_avg_gain(table, psi_list);

    std::string csv =
        "psi,gain_empirical,gain_integral,gain_small,gain_large\n";
    for (std::size_t i = 0; i < psi_list.size(); ++i) {
        const int psi = psi_list[i];
        csv += std::to_string(psi) + "," + fmt(emp[i]) + "," +
               fmt(avg_gain_integral(model, psi, 1e-9)) + ",";
        csv += psi <= 5 ? fmt(avg_gain_small(model, psi)) : std::string();
        csv += ",";
        csv += psi >= 2 ? fmt(avg_gain_large(model, psi)) : std::string();
        csv += "\n";
    }
    write_text(o.out, csv);
    maybe_report(o, cfg, "gain-avg", {{"mu", model.mu}, {"var", model.var}});
    return 0;
}

int run_gain_outage(const CommonOpts &o, std::vector<double> eps_list) {
    const std::vector<int> psi_list =
        parse_psi_list(o.psi_spec.empty() ? "1..8" : o.psi_spec);
    SystemConfig cfg = load_config(o, psi_list.back());
    const Selector sel =
        o.selector == "fast" ? Selector::fast : Selector::exhaustive;
    const Execution exec = o.serial ? Execution::serial : Execution::parallel;

    const RateTable table = compute_rate_table(cfg, sel, exec);
    const GaussianRateModel model = fit_rate_model(samples_from_table(table));

    std::string csv = "psi,eps,gain_empirical,gain_prop2\n";
    for (double eps : eps_list) {
        const std::vector<double> emp =
            empirical_outage_gain(table, psi_list, eps);
        for (std::size_t i = 0; i < psi_list.size(); ++i)
            csv += std::to_string(psi_list[i]) + "," + fmt(eps) + "," +
                   fmt(emp[i]) + "," +
                   fmt(outage_gain(model, psi_list[i], eps)) + "\n";
    }
    write_text(o.out, csv);
    maybe_report(o, cfg, "gain-outage",
                 {{"mu", model.mu}, {"var", model.var}});
    return 0;
}

int run_loss_ratio(const CommonOpts &o) {
    const std::vector<int> psi_list =
        parse_psi_list(o.psi_spec.empty() ? "2,4,8" : o.psi_spec);
    SystemConfig cfg = load_config(o, psi_list.back());
    const Execution exec = o.serial ? Execution::serial : Execution::parallel;

    const std::vector<double> ratios = loss_ratio(cfg, psi_list, exec);
    std::string csv = "psi,delta_r\n";
    for (std::size_t i = 0; i < psi_list.size(); ++i)
        csv += std::to_string(psi_list[i]) + "," + fmt(ratios[i]) + "\n";
    write_text(o.out, csv);
    maybe_report(o, cfg, "loss-ratio", {});
    return 0;
}

int run_analytic(const CommonOpts &o, double mu, double var, double eps,
                 double tol) {
    const std::vector<int> psi_list =
        parse_psi_list(o.psi_spec.empty() ? "1" : o.psi_spec);
    const GaussianRateModel model{mu, var};

    std::string csv =
        "psi,avg_gain_integral,avg_gain_small,avg_gain_large,"
        "avg_gain_asymptotic,outage_gain,outage_gain_asymptotic\n";
    for (int psi : psi_list) {
        csv += std::to_string(psi) + "," +
               fmt(avg_gain_integral(model, psi, tol)) + ",";
        csv += psi <= 5 ? fmt(avg_gain_small(model, psi)) : std::string();
        csv += ",";
        csv += psi >= 2 ? fmt(avg_gain_large(model, psi)) : std::string();
        csv += ",";
        csv += psi >= 2 ? fmt(avg_gain_asymptotic(model, psi)) : std::string();
        csv += "," + fmt(outage_gain(model, psi, eps)) + ",";
        csv += psi >= 2 ? fmt(outage_gain_asymptotic(model, psi, eps))
                        : std::string();
        csv += "\n";
    }
    write_text(o.out, csv);
    return 0;
}

int run_dump_channels(const CommonOpts &o, int trial) {
    const int psi_max = o.psi_spec.empty()
                            ? 1
                            : parse_psi_list(o.psi_spec).back();
    SystemConfig cfg = load_config(o, psi_max);
    const ChannelSet set = realize_channels(cfg, trial);
    write_text(o.out, channel_set_to_json(cfg, trial, set).dump(2) + "\n");
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"mmWave reconfigurable-antenna MIMO simulation toolkit"};
    app.require_subcommand(1);

    CommonOpts pdf_o, avg_o, out_o, loss_o, ana_o, dump_o;

    auto *pdf = app.add_subcommand("pdf", "per-state rate histogram + fit");
    add_common(pdf, pdf_o);
    int bins = 50;
    pdf->add_option("--bins", bins, "histogram bins");

    auto *gavg = app.add_subcommand("gain-avg", "average throughput gain");
    add_common(gavg, avg_o);

    auto *gout = app.add_subcommand("gain-outage", "outage throughput gain");
    add_common(gout, out_o);
    std::vector<double> eps_list{0.01, 0.05, 0.1};
    gout->add_option("--eps", eps_list, "outage levels");

    auto *loss = app.add_subcommand("loss-ratio",
                                    "fast vs exhaustive throughput loss");
    add_common(loss, loss_o, /*with_selector=*/false);

    auto *ana = app.add_subcommand("analytic", "formula evaluation");
    add_common(ana, ana_o, /*with_selector=*/false);
    double mu = 0.0, var = 0.0, eps = 0.05, tol = 1e-9;
    ana->add_option("--mu", mu, "rate mean")->required();
    ana->add_option("--var", var, "rate variance")->required();
    ana->add_option("--eps", eps, "outage level");
    ana->add_option("--tol", tol, "integration tolerance");

    auto *dump = app.add_subcommand("dump-channels", "channel matrices JSON");
    add_common(dump, dump_o, /*with_selector=*/false);
    int trial = 0;
    dump->add_option("--trial", trial, "trial index");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }

    const auto t0 = std::chrono::steady_clock::now();
    int rc = 0;
    try {
        if (pdf->parsed())
            rc = run_pdf(pdf_o, bins);
        else if (gavg->parsed())
            rc = run_gain_avg(avg_o);
        else if (gout->parsed())
            rc = run_gain_outage(out_o, eps_list);
        else if (loss->parsed())
            rc = run_loss_ratio(loss_o);
        else if (ana->parsed())
            rc = run_analytic(ana_o, mu, var, eps, tol);
        else if (dump->parsed())
            rc = run_dump_channels(dump_o, trial);
    } catch (const mmwsim::ConfigError &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const mmwsim::CapacityError &e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return 3;
    } catch (const mmwsim::ConvergenceError &e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 4;
    } catch (const std::domain_error &e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    const std::chrono::duration<double> dt =
        std::chrono::steady_clock::now() - t0;
    std::cerr << "done in " << dt.count() << " s\n";
    return rc;
}
