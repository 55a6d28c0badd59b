#include "memchan/capacity.hpp"

#include "memchan/info.hpp"
#include "memchan/numeric.hpp"

#include <cmath>
#include <stdexcept>

namespace memchan {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

void check_capacity_args(double epsilon, double eta, double tol) {
    if (!(epsilon >= 0.0 && epsilon <= 1.0 && eta >= 0.0 && eta <= 1.0)) {
        throw std::invalid_argument("capacity parameters outside [0, 1]");
    }
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
}

CapacityMeta make_meta(double epsilon, double eta, double N, int blocks, double tol) {
    CapacityMeta meta;
    meta.epsilon = epsilon;
    meta.eta = eta;
    meta.photons = N;
    meta.blocks = blocks;
    meta.tol = tol;
    return meta;
}

// z where tau crosses 1/2, for splitting kinked integrands; empty when the
// symbol stays on one side
std::vector<double> half_crossing(double epsilon, double eta) {
    const auto [lo, hi] = spectrum_endpoints(epsilon, eta);
    if (lo < 0.5 && hi > 0.5) {
        return {find_root_brent(
            [epsilon, eta](double z) { return symbol_tau(epsilon, eta, z) - 0.5; }, 0.0,
            kTwoPi, 1e-13)};
    }
    return {};
}

}  // namespace

CapacityResult classical_capacity(double epsilon, double eta, double N, double tol) {
    check_capacity_args(epsilon, eta, tol);
    if (!(N > 0.0)) throw std::invalid_argument("photon budget must be positive");

    CapacityResult out;
    out.kind = CapacityKind::classical;
    out.meta = make_meta(epsilon, eta, N, 0, tol);
    if (epsilon == 0.0 && eta == 0.0) return out;  // nothing is ever transmitted

    const auto alloc = classical_allocation_continuous({epsilon, eta}, N, 0.5 * tol);
    const double L = alloc.lagrange;
    out.lagrange = L;
    out.value = szego_average(
        [L](double t) { return g_function(t * classical_mode_photons(t, L)); }, epsilon, eta,
        0.5 * tol);
    return out;
}

std::pair<CapacityResult, CapacityResult> classical_capacity_bounds(double epsilon, double eta,
                                                                    double N, int J,
                                                                    double tol) {
    check_capacity_args(epsilon, eta, tol);
    if (!(N > 0.0)) throw std::invalid_argument("photon budget must be positive");
    if (J < 1) throw std::invalid_argument("block count must be at least 1");

    auto solve_edge = [&](bool upper) {
        CapacityResult res;
        res.kind = upper ? CapacityKind::bound_upper : CapacityKind::bound_lower;
        res.meta = make_meta(epsilon, eta, N, J, tol);
        std::vector<double> taus(static_cast<size_t>(J));
        for (int j = 1; j <= J; ++j) {
            const double z = kTwoPi * static_cast<double>(upper ? j : j - 1) /
                             static_cast<double>(J);
            taus[static_cast<size_t>(j - 1)] = symbol_tau(epsilon, eta, z);
        }
        double tau_max = 0.0;
        for (double t : taus) tau_max = std::max(tau_max, t);
        if (tau_max == 0.0) return res;  // degenerate block set carries nothing

        const auto alloc = classical_allocation_discrete(taus, N, 0.5 * tol);
        res.lagrange = alloc.lagrange;
        double sum = 0.0;
        for (size_t j = 0; j < taus.size(); ++j) {
            sum += g_function(taus[j] * alloc.values[j]);
        }
        res.value = sum / static_cast<double>(J);
        return res;
    };

    return {solve_edge(false), solve_edge(true)};
}

CapacityResult quantum_capacity(double epsilon, double eta, double N, double tol) {
    check_capacity_args(epsilon, eta, tol);
    if (!(N > 0.0)) throw std::invalid_argument("photon budget must be positive");

    CapacityResult out;
    out.kind = CapacityKind::quantum_constrained;
    out.meta = make_meta(epsilon, eta, N, 0, tol);

    const auto alloc = quantum_allocation_continuous({epsilon, eta}, N, 0.5 * tol);
    out.lagrange = alloc.lagrange;
    if (alloc.lagrange == 0.0) return out;  // empty active set

    const double L = alloc.lagrange;
    out.value = szego_average(
        [L](double t) { return coherent_info(t, quantum_mode_photons(t, L)); }, epsilon, eta,
        0.5 * tol, half_crossing(epsilon, eta));
    return out;
}

CapacityResult quantum_capacity_unconstrained(double epsilon, double eta, double tol) {
    check_capacity_args(epsilon, eta, tol);

    CapacityResult out;
    out.kind = CapacityKind::quantum_unconstrained;
    out.meta = make_meta(epsilon, eta, 0.0, 0, tol);
    if (epsilon == 1.0 || eta == 1.0) {  // tau reaches 1: logarithmic divergence
        out.infinite = true;
        return out;
    }
    const auto [tau_lo, tau_hi] = spectrum_endpoints(epsilon, eta);
    (void)tau_lo;
    if (tau_hi <= 0.5) return out;

    out.value = szego_average(
        [](double t) { return coherent_info_unconstrained(t).value; }, epsilon, eta, tol,
        half_crossing(epsilon, eta));
    return out;
}

std::vector<GridPoint> capacity_grid(const std::vector<double>& epsilons,
                                     const std::vector<double>& etas, GridKind which, double N,
                                     double tol) {
    std::vector<GridPoint> table;
    table.reserve(epsilons.size() * etas.size());
    for (double eps : epsilons) {
        for (double eta : etas) {
            GridPoint point;
            point.epsilon = eps;
            point.eta = eta;
            try {
                switch (which) {
                    case GridKind::classical:
                        point.result = classical_capacity(eps, eta, N, tol);
                        break;
                    case GridKind::quantum_constrained:
                        point.result = quantum_capacity(eps, eta, N, tol);
                        break;
                    case GridKind::quantum_unconstrained:
                        point.result = quantum_capacity_unconstrained(eps, eta, tol);
                        break;
                }
                point.ok = true;
            } catch (const std::exception& failure) {
                point.ok = false;
                point.error = failure.what();
            }
            table.push_back(std::move(point));
        }
    }
    return table;
}

}  // namespace memchan
