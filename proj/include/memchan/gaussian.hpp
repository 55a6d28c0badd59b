#pragma once

#include "memchan/cascade.hpp"

#include <Eigen/Dense>

namespace memchan {

/// Gaussian state over m modes. Quadratures are interleaved
/// (x_1, p_1, x_2, p_2, ...); the vacuum covariance is the identity.
struct GaussianState {
    Eigen::VectorXd mean;  // length 2m
    Eigen::MatrixXd cov;   // 2m x 2m, symmetric

    int modes() const { return static_cast<int>(mean.size()) / 2; }
};

GaussianState vacuum_state(int modes);

/// Real orthogonal matrix acting identically on the x and p blocks: a
/// passive linear-optics network without phase plates.
struct ModeRotation {
    Eigen::MatrixXd matrix;
};

/// Doubles R into quadrature space: (lift R)_{2i+a, 2j+b} = R_ij delta_ab.
Eigen::MatrixXd lift(const Eigen::MatrixXd& r);

GaussianState rotate_state(const ModeRotation& rotation, const GaussianState& state);

double mean_photon_number(const GaussianState& state);

/// Robertson-Schrodinger check: cov + i Omega >= -slack.
bool satisfies_uncertainty(const GaussianState& state, double slack = 1e-10);

/// Sends the input through the full beam-splitter cascade with a vacuum
/// environment and returns the receiver's reduced state.
GaussianState cascade_apply(const ChannelParams& params, const GaussianState& input);

/// Product of single-mode lossy channels: mode k keeps amplitude sqrt(tau_k)
/// and picks up (1 - tau_k) vacuum noise.
GaussianState unraveled_apply(const Eigen::VectorXd& taus, const GaussianState& input);

/// Encoder/decoder rotations that reduce the cascade to the unraveled
/// product (square setups EE and AB). Transmissivities below 1e-12 are the
/// cascade's structural zeros and are reported as exact zeros; their
/// encoder rows are completed by orthonormalization (any completion works:
/// a tau = 0 output carries no input contribution).
struct UnravelingMaps {
    ModeRotation encoder;
    ModeRotation decoder;
    Eigen::VectorXd taus;
};

UnravelingMaps unraveling_maps(const ChannelParams& params);

/// Max-abs deviation, over seeded random Gaussian inputs, between
/// decode(cascade(encode(state))) and the unraveled product channel.
double verify_equivalence(const ChannelParams& params, int trials, unsigned long long seed);

}  // namespace memchan
