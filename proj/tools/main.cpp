#include "memchan/channel.hpp"
#include "memchan/cli_runner.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

int main(int argc, char** argv) {
    CLI::App app{"Capacities of a lossy bosonic memory channel"};
    app.require_subcommand(1);

    memchan::RunConfig cfg;
    std::string setup_name = "EE";

    const auto setup_check = CLI::IsMember({"EE", "AB", "AE", "EB"});

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--output", cfg.output, "Write to this path instead of stdout");
        sub->add_option("--format", cfg.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
    };
    auto add_channel = [&](CLI::App* sub) {
        sub->add_option("--epsilon", cfg.epsilon, "Memory transmissivity in [0, 1]")->required();
        sub->add_option("--eta", cfg.eta, "Signal transmissivity in [0, 1]")->required();
    };
    auto add_tols = [&](CLI::App* sub) {
        sub->add_option("--quad-tol", cfg.quad_tol, "Quadrature tolerance");
        sub->add_option("--lagrange-tol", cfg.lagrange_tol, "Photon allocation tolerance");
    };

    auto* spectrum =
        app.add_subcommand("spectrum", "Sample the limiting symbol tau(z) over [0, 2pi]");
    add_channel(spectrum);
    add_common(spectrum);
    spectrum->add_option("--samples", cfg.samples, "Grid points, both endpoints included");

    auto* eigs =
        app.add_subcommand("eigs", "Effective transmissivities of the n-use memory matrix");
    add_channel(eigs);
    add_common(eigs);
    eigs->add_option("--n", cfg.n, "Channel uses")->required();
    eigs->add_option("--setup", setup_name, "EE, AB, AE, or EB")->check(setup_check);

    auto* cc = app.add_subcommand("capacity-classical",
                                  "Classical capacity at mean photon number N per use");
    add_channel(cc);
    add_common(cc);
    add_tols(cc);
    cc->add_option("--photons", cfg.photons, "Mean photon number per use")->required();

    auto* cq =
        app.add_subcommand("capacity-quantum", "Quantum capacity, constrained or unconstrained");
    add_channel(cq);
    add_common(cq);
    add_tols(cq);
    cq->add_option("--photons", cfg.photons, "Mean photon number per use");
    cq->add_flag("--unconstrained", cfg.unconstrained, "Drop the input power constraint");

    auto* bounds =
        app.add_subcommand("bounds", "Block lower/upper bounds on the classical capacity");
    add_channel(bounds);
    add_common(bounds);
    add_tols(bounds);
    bounds->add_option("--photons", cfg.photons, "Mean photon number per use")->required();
    bounds->add_option("--blocks", cfg.blocks, "Block count J");

    auto* verify =
        app.add_subcommand("verify", "Monte Carlo check of the product-channel unraveling");
    add_channel(verify);
    add_common(verify);
    verify->add_option("--n", cfg.n, "Channel uses")->required();
    verify->add_option("--setup", setup_name, "EE or AB")->check(setup_check);
    verify->add_option("--trials", cfg.trials, "Random input states");
    verify->add_option("--seed", cfg.seed, "Master RNG seed");
    verify->add_option("--verify-tol", cfg.verify_tol, "Maximum allowed deviation");

    auto* sweep = app.add_subcommand("sweep", "Capacity over the (epsilon, eta) unit grid");
    add_common(sweep);
    add_tols(sweep);
    sweep->add_option("--photons", cfg.photons, "Mean photon number per use");
    sweep->add_option("--step", cfg.grid_step, "Grid step over [0, 1]");
    sweep->add_option("--kind", cfg.sweep_kind, "classical, quantum, or quantum-unconstrained")
        ->check(CLI::IsMember({"classical", "quantum", "quantum-unconstrained"}));

    CLI11_PARSE(app, argc, argv);

    cfg.subcommand = app.get_subcommands().front()->get_name();
    cfg.setup = memchan::setup_from_string(setup_name);
    return memchan::run(cfg, std::cout, std::cerr);
}
