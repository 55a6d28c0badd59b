#pragma once

namespace memchan {

/// Entropy of a thermal state with mean photon number x, in bits:
/// (x+1) log2(x+1) - x log2 x, with g(0) = 0. Rejects negative input.
double g_function(double x);

/// Coherent information of a lossy channel with transmissivity tau fed a
/// thermal state of mean photon number N:
/// max{0, g(tau N) - g((1-tau) N)}; zero whenever tau <= 1/2.
double coherent_info(double tau, double N);

/// Unconstrained (N -> infinity) coherent information
/// max{0, log2(tau) - log2(1-tau)}; diverges at tau = 1, reported through
/// the flag rather than a floating-point infinity.
struct UnconstrainedQ {
    double value = 0.0;
    bool infinite = false;
};
UnconstrainedQ coherent_info_unconstrained(double tau);

/// d/dN of g(tau N): tau log2(1 + 1/(tau N)). Requires tau > 0, N > 0.
double classical_marginal(double tau, double n);

/// d/dN of g(tau N) - g((1-tau) N):
/// tau log2(1 + 1/(tau N)) - (1-tau) log2(1 + 1/((1-tau) N)).
/// Positive and strictly decreasing in N when tau > 1/2.
double quantum_marginal(double tau, double n);

}  // namespace memchan
