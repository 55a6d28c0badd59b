#include "memchan/spectral.hpp"

#include "memchan/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace memchan {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

void check_params(double epsilon, double eta) {
    if (!(epsilon >= 0.0 && epsilon <= 1.0 && eta >= 0.0 && eta <= 1.0)) {
        throw std::invalid_argument("symbol parameters outside [0, 1]");
    }
}

}  // namespace

double symbol_tau(double epsilon, double eta, double z) {
    check_params(epsilon, eta);
    if (!(z >= -1e-12 && z <= kTwoPi + 1e-12)) {
        std::ostringstream msg;
        msg << "z = " << z << " outside [0, 2pi]";
        throw std::invalid_argument(msg.str());
    }
    z = std::clamp(z, 0.0, kTwoPi);
    if (epsilon == 0.0) return eta;  // flat limits, exact (sqrt round-trip drifts an ulp)
    if (eta == 0.0) return epsilon;
    const double g = std::sqrt(epsilon * eta);
    const double s = std::sin(0.25 * z);
    const double shift = 4.0 * g * s * s;
    const double diff = std::sqrt(epsilon) - std::sqrt(eta);
    const double num = diff * diff + shift;
    const double den = (1.0 - g) * (1.0 - g) + shift;
    if (den == 0.0) return 1.0;  // eps = eta = 1, z = 0: continuity
    return num / den;
}

double SpectralSymbol::operator()(double z) const { return symbol_tau(epsilon, eta, z); }

std::pair<double, double> spectrum_endpoints(double epsilon, double eta) {
    check_params(epsilon, eta);
    if (epsilon == 0.0) return {eta, eta};
    if (eta == 0.0) return {epsilon, epsilon};
    const double g = std::sqrt(epsilon * eta);
    if (g == 1.0) return {1.0, 1.0};
    const double diff = std::sqrt(epsilon) - std::sqrt(eta);
    const double sum = std::sqrt(epsilon) + std::sqrt(eta);
    const double lo = (diff * diff) / ((1.0 - g) * (1.0 - g));
    const double hi = (sum * sum) / ((1.0 + g) * (1.0 + g));
    return {lo, hi};
}

namespace {

Eigen::VectorXd clamp_spectrum(Eigen::VectorXd values, Eigen::Index n) {
    // eigen-solver roundoff only; anything worse means the input was not a
    // valid gram matrix
    const double slack = 1e-10 * static_cast<double>(std::max<Eigen::Index>(n, 16));
    if (values.size() > 0 &&
        (values.minCoeff() < -slack || values.maxCoeff() > 1.0 + slack)) {
        std::ostringstream msg;
        msg << "spectrum [" << values.minCoeff() << ", " << values.maxCoeff()
            << "] escapes [0, 1] beyond roundoff";
        throw std::runtime_error(msg.str());
    }
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        values(i) = std::clamp(values(i), 0.0, 1.0);
    }
    return values;
}

void check_symmetric(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols() ||
        (m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, m.cwiseAbs().maxCoeff())) {
        throw std::invalid_argument("memory matrix must be symmetric");
    }
}

}  // namespace

EffectiveTransmissivities diagonalize(const MemoryMatrix& m) {
    check_symmetric(m.entries);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.entries);
    if (solver.info() != Eigen::Success) {
        throw NonConvergence("eigendecomposition did not converge");
    }
    EffectiveTransmissivities out;
    out.setup = m.setup;
    out.n = m.n;
    out.taus = clamp_spectrum(solver.eigenvalues(), m.entries.rows());
    out.diagonalizer = solver.eigenvectors().transpose();
    return out;
}

Eigen::VectorXd effective_transmissivities_only(const MemoryMatrix& m) {
    check_symmetric(m.entries);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.entries, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw NonConvergence("eigendecomposition did not converge");
    }
    return clamp_spectrum(solver.eigenvalues(), m.entries.rows());
}

double szego_average(const std::function<double(double)>& F, double epsilon, double eta,
                     double tol, const std::vector<double>& z_breaks) {
    check_params(epsilon, eta);
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");

    std::vector<double> edges{0.0};
    for (double b : z_breaks) {
        if (b > 0.0 && b < kTwoPi) edges.push_back(b);
    }
    edges.push_back(kTwoPi);
    std::sort(edges.begin(), edges.end());

    auto integrand = [&](double z) { return F(symbol_tau(epsilon, eta, z)); };
    double total = 0.0;
    const double panel_tol = tol * kTwoPi / static_cast<double>(edges.size() - 1);
    for (size_t i = 0; i + 1 < edges.size(); ++i) {
        total += integrate_adaptive(integrand, edges[i], edges[i + 1], panel_tol);
    }
    return total / kTwoPi;
}

double szego_average(const std::function<double(double)>& F, double epsilon, double eta,
                     double tol) {
    return szego_average(F, epsilon, eta, tol, {});
}

}  // namespace memchan
