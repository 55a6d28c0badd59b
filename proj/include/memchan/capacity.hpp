#pragma once

#include "memchan/allocation.hpp"

#include <string>
#include <utility>
#include <vector>

namespace memchan {

enum class CapacityKind {
    classical,
    quantum_constrained,
    quantum_unconstrained,
    bound_lower,
    bound_upper,
};

struct CapacityMeta {
    double epsilon = 0.0;
    double eta = 0.0;
    double photons = 0.0;  // mean photon number N; 0 for the unconstrained rate
    int blocks = 0;        // J for block bounds, 0 otherwise
    double tol = 0.0;
};

/// A capacity value in bits per channel use. Divergent rates are flagged
/// through `infinite`; `value` is meaningless in that case and never a
/// floating-point infinity.
struct CapacityResult {
    double value = 0.0;
    bool infinite = false;
    double lagrange = 0.0;
    CapacityKind kind = CapacityKind::classical;
    CapacityMeta meta;
};

/// C = (1/2pi) int g(tau(z) N(z)) dz under the optimal photon density.
CapacityResult classical_capacity(double epsilon, double eta, double N, double tol);

/// Block lower/upper bounds from J-block discretizations of the symbol,
/// edges tau((j-1) 2pi/J) and tau(j 2pi/J); the pair sandwiches C.
std::pair<CapacityResult, CapacityResult> classical_capacity_bounds(double epsilon, double eta,
                                                                    double N, int J,
                                                                    double tol);

/// Q = (1/2pi) int q(tau(z), N(z)) dz under the optimal photon density;
/// 0 when the symbol never exceeds 1/2.
CapacityResult quantum_capacity(double epsilon, double eta, double N, double tol);

/// Q_inf = (1/2pi) int max{0, log2(tau/(1-tau))} dz; infinite sentinel at
/// epsilon = 1 or eta = 1.
CapacityResult quantum_capacity_unconstrained(double epsilon, double eta, double tol);

enum class GridKind { classical, quantum_constrained, quantum_unconstrained };

struct GridPoint {
    double epsilon = 0.0;
    double eta = 0.0;
    CapacityResult result;
    bool ok = false;
    std::string error;  // diagnostic when !ok
};

/// One result per (epsilon, eta) pair, iterated epsilon-major in the given
/// order; per-point failures are captured in the row, never thrown.
std::vector<GridPoint> capacity_grid(const std::vector<double>& epsilons,
                                     const std::vector<double>& etas, GridKind which, double N,
                                     double tol);

}  // namespace memchan
