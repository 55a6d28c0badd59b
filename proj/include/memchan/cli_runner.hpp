#pragma once

#include "memchan/channel.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>

namespace memchan {

struct RunConfig {
    std::string subcommand;  // spectrum, eigs, capacity-classical, capacity-quantum,
                             // bounds, verify, sweep
    double epsilon = 0.0;
    double eta = 0.0;
    double photons = 8.0;
    int n = 20;
    int blocks = 8;
    Setup setup = Setup::EE;
    int samples = 512;
    int trials = 50;
    std::uint64_t seed = 12345;
    double grid_step = 0.05;
    bool unconstrained = false;
    std::string sweep_kind = "classical";  // classical, quantum, quantum-unconstrained
    double quad_tol = 1e-9;
    double lagrange_tol = 1e-10;
    double verify_tol = 1e-10;
    std::string output;  // empty: write to the stream passed to run()
    std::string format;  // "csv", "json", or empty for the subcommand default
};

/// Executes one subcommand, writing its table or object to `out` (or to
/// config.output when set) and diagnostics to `err`. Output is byte-identical
/// for identical configs.
///
/// Exit codes: 0 success, 1 unknown subcommand, 2 invalid parameter,
/// 3 non-convergence, 4 unwritable output, 5 verify deviation above tolerance.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Shortest round-trip decimal; "inf"/"-inf"/"nan" for non-finite values.
std::string format_double(double v);

}  // namespace memchan
