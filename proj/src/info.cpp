#include "memchan/info.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace memchan {

namespace {
constexpr double kLn2 = 0.69314718055994530941723212145818;

void check_tau(double tau) {
    if (!(tau >= 0.0 && tau <= 1.0)) {
        std::ostringstream msg;
        msg << "tau = " << tau << " outside [0, 1]";
        throw std::invalid_argument(msg.str());
    }
}
}  // namespace

double g_function(double x) {
    if (!(x >= 0.0)) {
        std::ostringstream msg;
        msg << "g_function: x = " << x << " is negative";
        throw std::invalid_argument(msg.str());
    }
    if (x == 0.0) return 0.0;
    // (x+1) log(1+x) keeps precision for small x via log1p
    return ((x + 1.0) * std::log1p(x) - x * std::log(x)) / kLn2;
}

double coherent_info(double tau, double N) {
    check_tau(tau);
    if (!(N >= 0.0)) throw std::invalid_argument("coherent_info: negative photon number");
    if (tau <= 0.5 || N == 0.0) return 0.0;
    const double diff = g_function(tau * N) - g_function((1.0 - tau) * N);
    return diff > 0.0 ? diff : 0.0;
}

UnconstrainedQ coherent_info_unconstrained(double tau) {
    check_tau(tau);
    if (tau == 1.0) return {0.0, true};
    if (tau <= 0.5) return {0.0, false};
    return {(std::log(tau) - std::log1p(-tau)) / kLn2, false};
}

double classical_marginal(double tau, double n) {
    if (!(tau > 0.0 && tau <= 1.0 && n > 0.0)) {
        throw std::invalid_argument("classical_marginal: requires tau in (0,1] and n > 0");
    }
    return tau * std::log1p(1.0 / (tau * n)) / kLn2;
}

double quantum_marginal(double tau, double n) {
    if (!(tau > 0.0 && tau <= 1.0 && n > 0.0)) {
        throw std::invalid_argument("quantum_marginal: requires tau in (0,1] and n > 0");
    }
    const double gain = tau * std::log1p(1.0 / (tau * n));
    if (tau == 1.0) return gain / kLn2;  // complement term vanishes with its prefactor
    const double loss = (1.0 - tau) * std::log1p(1.0 / ((1.0 - tau) * n));
    return (gain - loss) / kLn2;
}

}  // namespace memchan
