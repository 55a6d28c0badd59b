#pragma once

#include <Eigen/Dense>
#include <vector>

#include "memchan/channel.hpp"

namespace memchan {

/// Real mode-coupling coefficients of the n-step beam-splitter cascade.
/// Row r of a_coeffs (resp. e_coeffs) holds the coefficients of every
/// sender (resp. environment) input mode in the r-th receiver output mode.
/// Rows are b_1..b_n, then the final memory mode when the setup hands it
/// to the receiver. Column 0 is the initial memory mode when the setup
/// hands it to that party, followed by a_1..a_n (resp. e_1..e_n).
///
/// Canonical commutation of the outputs gives
///   a_coeffs a_coeffs^T + e_coeffs e_coeffs^T = I.
struct CascadeCoefficients {
    Eigen::MatrixXd a_coeffs;
    Eigen::MatrixXd e_coeffs;
    Setup setup = Setup::EE;
};

/// Symmetric positive-semidefinite matrix M with 0 <= M <= I whose
/// eigenvalues are the effective transmissivities of the channel.
struct MemoryMatrix {
    Eigen::MatrixXd entries;
    Setup setup = Setup::EE;
    int n = 0;
};

/// Limit of the per-use transmissivity sequence,
/// eta + epsilon (1-eta)^2 / (1 - epsilon eta); equals 1 by continuity at
/// epsilon = eta = 1.
double eta_limit(double epsilon, double eta);

/// [eta_1, ..., eta_n]: nondecreasing, starts at eta, converges to
/// eta_limit.
std::vector<double> eta_k_sequence(double epsilon, double eta, int n);

/// Propagates the memory mode through the cascade and collects the
/// receiver-row coefficients.
CascadeCoefficients build_cascade(const ChannelParams& params);

/// Closed form for the EE memory matrix:
///   M_kk' = delta_kk' - (1 - eta_min(k,k')) sqrt(epsilon eta)^|k-k'|,
/// with the 0^0 = 1 convention so the diagonal reads eta_k.
MemoryMatrix memory_matrix_ee_formula(double epsilon, double eta, int n);

/// Gram matrix a_coeffs a_coeffs^T of the cascade; agrees with
/// memory_matrix_ee_formula for the EE setup.
MemoryMatrix memory_matrix(const ChannelParams& params);

/// Probability (epsilon eta)^n that a photon entering the initial memory
/// port leaves through the final memory port.
double retention_amplitude_probability(double epsilon, double eta, int n);

}  // namespace memchan
