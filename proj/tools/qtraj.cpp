// Command line front end for the two-site cavity trajectory simulator.
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qtraj/commands.hpp"

namespace {

// flags shared by several subcommands; only flags the user passed override
// the config file
struct Cli {
    std::string config_path;
    std::string out;
    long long seed = -1;
    int trajectories = -1;
    long long steps = -1;
    std::string backend;
    std::string kind;
    int bins = -1;
    double tau_max = -1;
    bool steady_norm = false;
};

void add_common(CLI::App* app, Cli& cli) {
    app->add_option("--config", cli.config_path, "key = value config file");
    app->add_option("--seed", cli.seed, "RNG seed");
    app->add_option("--trajectories", cli.trajectories, "ensemble size");
    app->add_option("--steps", cli.steps, "time steps per trajectory");
    app->add_option("--backend", cli.backend, "analytic or rk4");
    app->add_option("--kind", cli.kind, "g1g1, g1g2, g2g1, g2g2, gany or kk");
    app->add_option("--bins", cli.bins, "histogram bins");
    app->add_option("--tau-max", cli.tau_max, "histogram range");
    app->add_flag("--steady-norm", cli.steady_norm,
                  "rescale by the long-delay plateau");
    app->add_option("--out", cli.out, "output path (default stdout)");
}

qtraj::RunConfig build_config(const Cli& cli) {
    qtraj::RunConfig cfg;
    if (!cli.config_path.empty()) cfg = qtraj::load_config(cli.config_path);
    if (cli.seed >= 0) cfg.model.seed = static_cast<std::uint64_t>(cli.seed);
    if (cli.trajectories >= 0) cfg.n_trajectories = cli.trajectories;
    if (cli.steps >= 0) cfg.model.n_steps = cli.steps;
    if (!cli.backend.empty()) cfg.backend = qtraj::parse_backend(cli.backend);
    if (!cli.kind.empty()) cfg.kind = cli.kind;
    if (cli.bins >= 0) cfg.n_bins = cli.bins;
    if (cli.tau_max >= 0) cfg.tau_max = cli.tau_max;
    if (cli.steady_norm) cfg.steady_norm = true;
    if (!cli.out.empty()) cfg.out = cli.out;
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum-jump trajectory simulator for a tunneling atom in a "
                 "driven lossy cavity"};
    app.require_subcommand(1);
    Cli cli;

    auto* sim = app.add_subcommand("simulate", "run trajectories, emit jump records");
    add_common(sim, cli);

    auto* g2 = app.add_subcommand("g2", "build a g2 histogram from a record file");
    std::string records_path;
    g2->add_option("records", records_path, "record CSV from simulate")->required();
    add_common(g2, cli);

    auto* th = app.add_subcommand("theory", "emit a closed-form curve as tau,value");
    std::string curve = "g2_f_11";
    int n_points = 201;
    th->add_option("curve", curve,
                   "g2_f_11, g2_f_12, g2_f_21, g2_f_22, g2_gamma or g2_kappa");
    th->add_option("--points", n_points, "grid size");
    add_common(th, cli);

    auto* ss = app.add_subcommand("statespace", "basis counts and enumeration");
    int n_atoms = 1, n_sites = 2;
    ss->add_option("--atoms", n_atoms, "atom count");
    ss->add_option("--sites", n_sites, "lattice sites");

    auto* mg = app.add_subcommand("merge", "merge record files with disjoint ids");
    std::vector<std::string> merge_inputs;
    std::string merge_out;
    mg->add_option("inputs", merge_inputs, "record CSVs")->required();
    mg->add_option("--out", merge_out, "output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sim->parsed()) {
            qtraj::cmd_simulate(build_config(cli), std::cerr);
        } else if (g2->parsed()) {
            qtraj::cmd_g2(records_path, build_config(cli));
        } else if (th->parsed()) {
            qtraj::RunConfig cfg = build_config(cli);
            if (cfg.out.empty()) {
                qtraj::cmd_theory(cfg, curve, n_points, std::cout);
            } else {
                std::ofstream os(cfg.out);
                if (!os) throw std::runtime_error("cannot open: " + cfg.out);
                qtraj::cmd_theory(cfg, curve, n_points, os);
            }
        } else if (ss->parsed()) {
            qtraj::cmd_statespace(n_atoms, n_sites, std::cout);
        } else if (mg->parsed()) {
            qtraj::cmd_merge(merge_inputs, merge_out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
