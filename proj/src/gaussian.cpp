#include "memchan/gaussian.hpp"

#include "memchan/spectral.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace memchan {

namespace {

constexpr double kStructuralZero = 1e-12;

void check_state(const GaussianState& state) {
    const Eigen::Index dim = state.mean.size();
    if (dim % 2 != 0 || state.cov.rows() != dim || state.cov.cols() != dim) {
        throw std::invalid_argument("gaussian state: mean/cov dimensions inconsistent");
    }
}

}  // namespace

GaussianState vacuum_state(int modes) {
    if (modes < 1) throw std::invalid_argument("vacuum_state: need at least one mode");
    GaussianState s;
    s.mean = Eigen::VectorXd::Zero(2 * modes);
    s.cov = Eigen::MatrixXd::Identity(2 * modes, 2 * modes);
    return s;
}

Eigen::MatrixXd lift(const Eigen::MatrixXd& r) {
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(2 * r.rows(), 2 * r.cols());
    for (Eigen::Index i = 0; i < r.rows(); ++i) {
        for (Eigen::Index j = 0; j < r.cols(); ++j) {
            out(2 * i, 2 * j) = r(i, j);
            out(2 * i + 1, 2 * j + 1) = r(i, j);
        }
    }
    return out;
}

GaussianState rotate_state(const ModeRotation& rotation, const GaussianState& state) {
    check_state(state);
    if (rotation.matrix.cols() != state.modes()) {
        throw std::invalid_argument("rotate_state: mode count mismatch");
    }
    const Eigen::MatrixXd big = lift(rotation.matrix);
    GaussianState out;
    out.mean = big * state.mean;
    Eigen::MatrixXd cov = big * state.cov * big.transpose();
    out.cov = 0.5 * (cov + cov.transpose());
    return out;
}

double mean_photon_number(const GaussianState& state) {
    check_state(state);
    double total = 0.0;
    for (int k = 0; k < state.modes(); ++k) {
        const double x = state.mean(2 * k);
        const double p = state.mean(2 * k + 1);
        total += 0.25 * (state.cov(2 * k, 2 * k) + state.cov(2 * k + 1, 2 * k + 1) + x * x +
                         p * p) -
                 0.5;
    }
    return total;
}

bool satisfies_uncertainty(const GaussianState& state, double slack) {
    check_state(state);
    const Eigen::Index dim = state.mean.size();
    Eigen::MatrixXcd test = state.cov.cast<std::complex<double>>();
    const std::complex<double> i_unit(0.0, 1.0);
    for (Eigen::Index k = 0; k + 1 < dim; k += 2) {
        test(k, k + 1) += i_unit;
        test(k + 1, k) -= i_unit;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(test, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff() >= -slack;
}

GaussianState cascade_apply(const ChannelParams& params, const GaussianState& input) {
    validate(params);
    check_state(input);
    if (input.modes() != sender_modes(params)) {
        std::ostringstream msg;
        msg << "cascade_apply: setup " << to_string(params.setup) << " with n = " << params.n
            << " expects " << sender_modes(params) << " sender modes, got " << input.modes();
        throw std::invalid_argument(msg.str());
    }
    const CascadeCoefficients cc = build_cascade(params);
    const Eigen::MatrixXd signal = lift(cc.a_coeffs);
    GaussianState out;
    out.mean = signal * input.mean;
    Eigen::MatrixXd cov = signal * input.cov * signal.transpose() +
                          lift(cc.e_coeffs * cc.e_coeffs.transpose());
    out.cov = 0.5 * (cov + cov.transpose());
    return out;
}

GaussianState unraveled_apply(const Eigen::VectorXd& taus, const GaussianState& input) {
    check_state(input);
    if (input.modes() != taus.size()) {
        throw std::invalid_argument("unraveled_apply: mode count mismatch");
    }
    Eigen::VectorXd scale(2 * taus.size());
    for (Eigen::Index k = 0; k < taus.size(); ++k) {
        if (!(taus(k) >= 0.0 && taus(k) <= 1.0)) {
            throw std::invalid_argument("unraveled_apply: transmissivity outside [0, 1]");
        }
        scale(2 * k) = scale(2 * k + 1) = std::sqrt(taus(k));
    }
    GaussianState out;
    out.mean = scale.asDiagonal() * input.mean;
    out.cov = scale.asDiagonal() * input.cov * scale.asDiagonal();
    for (Eigen::Index i = 0; i < out.cov.rows(); ++i) {
        out.cov(i, i) += 1.0 - scale(i) * scale(i);
    }
    return out;
}

UnravelingMaps unraveling_maps(const ChannelParams& params) {
    validate(params);
    if (params.setup != Setup::EE && params.setup != Setup::AB) {
        throw std::invalid_argument(
            "unraveling maps are defined for the square setups EE and AB only");
    }
    const CascadeCoefficients cc = build_cascade(params);
    const EffectiveTransmissivities spec = diagonalize(memory_matrix(params));
    const Eigen::MatrixXd rotated = spec.diagonalizer * cc.a_coeffs;
    const Eigen::Index m = rotated.rows();

    UnravelingMaps maps;
    maps.taus = spec.taus;
    maps.decoder.matrix = spec.diagonalizer;

    Eigen::MatrixXd rows = Eigen::MatrixXd::Zero(m, m);
    std::vector<Eigen::Index> missing;
    for (Eigen::Index k = 0; k < m; ++k) {
        if (maps.taus(k) < kStructuralZero) {
            maps.taus(k) = 0.0;
            missing.push_back(k);
        } else {
            rows.row(k) = rotated.row(k) / std::sqrt(maps.taus(k));
        }
    }
    for (Eigen::Index k : missing) {
        // any unit vector orthogonal to the defined rows completes the
        // rotation; twice-iterated Gram-Schmidt keeps it orthogonal to
        // machine precision
        bool placed = false;
        for (Eigen::Index cand = 0; cand < m && !placed; ++cand) {
            Eigen::VectorXd v = Eigen::VectorXd::Unit(m, cand);
            for (int pass = 0; pass < 2; ++pass) {
                for (Eigen::Index j = 0; j < m; ++j) {
                    if (j == k || rows.row(j).isZero(0.0)) continue;
                    v -= rows.row(j).dot(v) * rows.row(j).transpose();
                }
            }
            const double norm = v.norm();
            if (norm > 0.5) {
                rows.row(k) = v.transpose() / norm;
                placed = true;
            }
        }
        if (!placed) {
            throw std::runtime_error("unraveling maps: row completion found no direction");
        }
    }
    maps.encoder.matrix = rows.transpose();
    return maps;
}

namespace {

Eigen::MatrixXd random_orthogonal(Eigen::Index m, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::MatrixXd gauss(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
        for (Eigen::Index j = 0; j < m; ++j) gauss(i, j) = normal(rng);
    }
    const Eigen::HouseholderQR<Eigen::MatrixXd> qr(gauss);
    Eigen::MatrixXd q = qr.householderQ();
    const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < m; ++j) {
        if (r(j, j) < 0.0) q.col(j) = -q.col(j);
    }
    return q;
}

// Passive symplectic: orthogonal mixing, per-mode phase shifts, orthogonal
// mixing again. Stays within the lossless (energy-preserving) group.
Eigen::MatrixXd random_passive(Eigen::Index m, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
    const Eigen::MatrixXd left = lift(random_orthogonal(m, rng));
    const Eigen::MatrixXd right = lift(random_orthogonal(m, rng));
    Eigen::MatrixXd phases = Eigen::MatrixXd::Zero(2 * m, 2 * m);
    for (Eigen::Index k = 0; k < m; ++k) {
        const double t = angle(rng);
        phases(2 * k, 2 * k) = std::cos(t);
        phases(2 * k, 2 * k + 1) = std::sin(t);
        phases(2 * k + 1, 2 * k) = -std::sin(t);
        phases(2 * k + 1, 2 * k + 1) = std::cos(t);
    }
    return left * phases * right;
}

GaussianState random_state(Eigen::Index m, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> nu(1.0, 5.0);
    std::uniform_real_distribution<double> amp(-3.0, 3.0);
    Eigen::VectorXd sympl(2 * m);
    for (Eigen::Index k = 0; k < m; ++k) sympl(2 * k) = sympl(2 * k + 1) = nu(rng);
    const Eigen::MatrixXd s = random_passive(m, rng);
    GaussianState state;
    Eigen::MatrixXd cov = s * sympl.asDiagonal() * s.transpose();
    state.cov = 0.5 * (cov + cov.transpose());
    state.mean.resize(2 * m);
    for (Eigen::Index i = 0; i < 2 * m; ++i) state.mean(i) = amp(rng);
    return state;
}

}  // namespace

double verify_equivalence(const ChannelParams& params, int trials, unsigned long long seed) {
    if (trials < 1) throw std::invalid_argument("verify_equivalence: need at least one trial");
    const UnravelingMaps maps = unraveling_maps(params);
    const Eigen::Index m = sender_modes(params);

    std::mt19937_64 master(seed);
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        std::mt19937_64 rng(master());
        const GaussianState input = random_state(m, rng);

        const GaussianState through =
            rotate_state(maps.decoder, cascade_apply(params, rotate_state(maps.encoder, input)));
        const GaussianState direct = unraveled_apply(maps.taus, input);

        const double dev =
            std::max((through.mean - direct.mean).cwiseAbs().maxCoeff(),
                     (through.cov - direct.cov).cwiseAbs().maxCoeff());
        worst = std::max(worst, dev);
    }
    return worst;
}

}  // namespace memchan
