#pragma once

#include "memchan/spectral.hpp"

#include <functional>
#include <vector>

namespace memchan {

enum class AllocationKind { discrete, continuous };

/// Water-filling solution of a constrained photon-allocation problem:
/// per-mode photon numbers (discrete) or a photon density over the symbol
/// angle (continuous), together with the Lagrange multiplier enforcing the
/// mean-photon budget. A quantum problem whose active set is empty returns
/// the zero allocation with lagrange = 0; the budget then goes unused.
struct PhotonAllocation {
    AllocationKind kind = AllocationKind::discrete;
    std::vector<double> values;             // discrete: N_j per mode
    std::function<double(double)> density;  // continuous: z -> N(z)
    double lagrange = 0.0;
    double budget = 0.0;                    // requested mean photon number
};

/// Inverse of classical_marginal at fixed tau:
/// N = 1 / (tau (2^{L/tau} - 1)), evaluated cancellation-free; 0 at tau = 0.
double classical_mode_photons(double tau, double lagrange);

/// Inverse of quantum_marginal at fixed tau > 1/2, by bracketed root
/// finding; 0 for tau <= 1/2 and when the root underflows (the mode is
/// inactive at this multiplier).
double quantum_mode_photons(double tau, double lagrange);

/// Maximize (1/J) sum g(tau_j N_j) subject to (1/J) sum N_j = N.
PhotonAllocation classical_allocation_discrete(const std::vector<double>& taus, double N,
                                               double tol);

/// Continuous analogue over the symbol: budget (1/2pi) int N(z) dz = N.
PhotonAllocation classical_allocation_continuous(const SpectralSymbol& symbol, double N,
                                                 double tol);

/// Maximize (1/J) sum q(tau_j, N_j) subject to the same budget; modes with
/// tau_j <= 1/2 receive nothing.
PhotonAllocation quantum_allocation_discrete(const std::vector<double>& taus, double N,
                                             double tol);

/// Continuous analogue; the active set is {z : tau(z) > 1/2}.
PhotonAllocation quantum_allocation_continuous(const SpectralSymbol& symbol, double N,
                                               double tol);

}  // namespace memchan
