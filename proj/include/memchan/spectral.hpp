#pragma once

#include "memchan/cascade.hpp"

#include <Eigen/Dense>

#include <functional>
#include <utility>
#include <vector>

namespace memchan {

// asymptotic eigenvalue distribution of the memory matrix, as a function
// z -> tau(z) on [0, 2pi]; nondecreasing, values in [0, 1]
struct SpectralSymbol {
    double epsilon = 0.0;
    double eta = 1.0;

    double operator()(double z) const;
};

// tau(z) = (eps + eta - 2 sqrt(eps eta) cos(z/2)) / (1 + eps eta - 2 sqrt(eps eta) cos(z/2)),
// evaluated in the cancellation-free half-angle form; eps = eta = 1 gives 1 by continuity
double symbol_tau(double epsilon, double eta, double z);

// (tau(0), tau(2pi)): infimum and supremum of the symbol
std::pair<double, double> spectrum_endpoints(double epsilon, double eta);

struct EffectiveTransmissivities {
    Eigen::VectorXd taus;          // nondecreasing, in [0, 1]
    Eigen::MatrixXd diagonalizer;  // orthogonal O with O * M * O^T = diag(taus)
    Setup setup = Setup::EE;
    int n = 0;
};

EffectiveTransmissivities diagonalize(const MemoryMatrix& m);

// eigenvalues only (sorted, clamped); cheaper for large matrices
Eigen::VectorXd effective_transmissivities_only(const MemoryMatrix& m);

// (1/2pi) * integral of F(tau(z)) over [0, 2pi]; z_breaks lists interior
// points where the integrand may lose smoothness (quadrature splits there)
double szego_average(const std::function<double(double)>& F, double epsilon, double eta,
                     double tol, const std::vector<double>& z_breaks);
double szego_average(const std::function<double(double)>& F, double epsilon, double eta,
                     double tol);

}  // namespace memchan
