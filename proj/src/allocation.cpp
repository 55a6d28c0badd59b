#include "memchan/allocation.hpp"

#include "memchan/info.hpp"
#include "memchan/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace memchan {

namespace {

constexpr double kLn2 = 0.69314718055994530941723212145818;
constexpr double kTwoPi = 6.283185307179586476925286766559;

void check_budget_args(double N, double tol) {
    if (!(N > 0.0)) throw std::invalid_argument("photon budget must be positive");
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
}

void check_taus(const std::vector<double>& taus) {
    if (taus.empty()) throw std::invalid_argument("empty transmissivity list");
    for (double t : taus) {
        if (!(t >= 0.0 && t <= 1.0)) {
            std::ostringstream msg;
            msg << "transmissivity " << t << " outside [0, 1]";
            throw std::invalid_argument(msg.str());
        }
    }
}

}  // namespace

double classical_mode_photons(double tau, double lagrange) {
    if (!(tau >= 0.0 && tau <= 1.0)) throw std::invalid_argument("tau outside [0, 1]");
    if (!(lagrange > 0.0)) throw std::invalid_argument("multiplier must be positive");
    if (tau == 0.0) return 0.0;
    // 2^{L/tau} - 1 via expm1: no cancellation for small L/tau, and the
    // overflow to +inf correctly drives the photon number to 0
    const double grow = std::expm1(lagrange / tau * kLn2);
    return 1.0 / (tau * grow);
}

double quantum_mode_photons(double tau, double lagrange) {
    if (!(tau >= 0.0 && tau <= 1.0)) throw std::invalid_argument("tau outside [0, 1]");
    if (!(lagrange > 0.0)) throw std::invalid_argument("multiplier must be positive");
    if (tau <= 0.5) return 0.0;

    auto excess = [tau, lagrange](double n) { return quantum_marginal(tau, n) - lagrange; };
    const double at_one = excess(1.0);
    if (at_one == 0.0) return 1.0;

    double lo, hi;
    if (at_one > 0.0) {  // marginal still above the multiplier: root above 1
        hi = 2.0;
        int guard = 0;
        while (excess(hi) > 0.0) {
            hi *= 2.0;
            if (++guard > 1000 || hi > 1e290) {
                throw NonConvergence("quantum allocation: photon root exceeds overflow guard");
            }
        }
        lo = 0.5 * hi;
    } else {  // root below 1
        lo = 0.5;
        while (excess(lo) < 0.0) {
            lo *= 0.5;
            if (lo < 1e-300) return 0.0;  // root underflows: mode is inactive
        }
        hi = std::min(2.0 * lo, 1.0);
    }
    // xtol 0: Brent's machine-epsilon floor gives full relative precision,
    // which the stationarity identity needs for very small roots
    return find_root_brent(excess, lo, hi, 0.0);
}

PhotonAllocation classical_allocation_discrete(const std::vector<double>& taus, double N,
                                               double tol) {
    check_taus(taus);
    check_budget_args(N, tol);
    const double tau_max = *std::max_element(taus.begin(), taus.end());
    if (tau_max == 0.0) {
        throw std::invalid_argument("all transmissivities are zero: allocation undefined");
    }
    const double J = static_cast<double>(taus.size());
    auto budget = [&taus, J](double L) {
        double sum = 0.0;
        for (double t : taus) sum += classical_mode_photons(t, L);
        return sum / J;
    };
    const double guess = classical_marginal(tau_max, N);
    const double L = solve_decreasing_for_target(budget, N, guess, tol);

    PhotonAllocation out;
    out.kind = AllocationKind::discrete;
    out.lagrange = L;
    out.budget = N;
    out.values.reserve(taus.size());
    for (double t : taus) out.values.push_back(classical_mode_photons(t, L));
    return out;
}

PhotonAllocation quantum_allocation_discrete(const std::vector<double>& taus, double N,
                                             double tol) {
    check_taus(taus);
    check_budget_args(N, tol);
    int active = 0;
    double tau_max = 0.0;
    for (double t : taus) {
        if (t > 0.5) ++active;
        tau_max = std::max(tau_max, t);
    }

    PhotonAllocation out;
    out.kind = AllocationKind::discrete;
    out.budget = N;
    if (active == 0) {
        out.values.assign(taus.size(), 0.0);
        out.lagrange = 0.0;
        return out;
    }

    const double J = static_cast<double>(taus.size());
    auto budget = [&taus, J](double L) {
        double sum = 0.0;
        for (double t : taus) sum += quantum_mode_photons(t, L);
        return sum / J;
    };
    const double guess = quantum_marginal(tau_max, N * J / static_cast<double>(active));
    const double L = solve_decreasing_for_target(budget, N, guess, tol);

    out.lagrange = L;
    out.values.reserve(taus.size());
    for (double t : taus) out.values.push_back(quantum_mode_photons(t, L));
    return out;
}

PhotonAllocation classical_allocation_continuous(const SpectralSymbol& symbol, double N,
                                                 double tol) {
    check_budget_args(N, tol);
    const double eps = symbol.epsilon;
    const double eta = symbol.eta;
    const auto [tau_lo, tau_hi] = spectrum_endpoints(eps, eta);
    (void)tau_lo;
    if (tau_hi == 0.0) {
        throw std::invalid_argument("symbol is identically zero: allocation undefined");
    }

    const double quad_tol = 0.05 * tol;
    auto budget = [=](double L) {
        return szego_average([L](double t) { return classical_mode_photons(t, L); }, eps, eta,
                             quad_tol);
    };
    const double guess = classical_marginal(tau_hi, N);
    const double L = solve_decreasing_for_target(budget, N, guess, tol);

    PhotonAllocation out;
    out.kind = AllocationKind::continuous;
    out.lagrange = L;
    out.budget = N;
    out.density = [eps, eta, L](double z) {
        return classical_mode_photons(symbol_tau(eps, eta, z), L);
    };
    return out;
}

PhotonAllocation quantum_allocation_continuous(const SpectralSymbol& symbol, double N,
                                               double tol) {
    check_budget_args(N, tol);
    const double eps = symbol.epsilon;
    const double eta = symbol.eta;
    const auto [tau_lo, tau_hi] = spectrum_endpoints(eps, eta);

    PhotonAllocation out;
    out.kind = AllocationKind::continuous;
    out.budget = N;
    if (tau_hi <= 0.5) {  // nothing to send quantum information through
        out.lagrange = 0.0;
        out.density = [](double) { return 0.0; };
        return out;
    }

    std::vector<double> breaks;
    if (tau_lo < 0.5) {
        breaks.push_back(find_root_brent(
            [eps, eta](double z) { return symbol_tau(eps, eta, z) - 0.5; }, 0.0, kTwoPi,
            1e-13));
    }

    const double quad_tol = 0.05 * tol;
    auto budget = [=](double L) {
        return szego_average([L](double t) { return quantum_mode_photons(t, L); }, eps, eta,
                             quad_tol, breaks);
    };
    const double guess = quantum_marginal(tau_hi, N);
    const double L = solve_decreasing_for_target(budget, N, guess, tol);

    out.lagrange = L;
    out.density = [eps, eta, L](double z) {
        return quantum_mode_photons(symbol_tau(eps, eta, z), L);
    };
    return out;
}

}  // namespace memchan
