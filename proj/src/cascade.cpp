#include "memchan/cascade.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace memchan {

const char* to_string(Setup setup) {
    switch (setup) {
        case Setup::EE: return "EE";
        case Setup::AB: return "AB";
        case Setup::AE: return "AE";
        case Setup::EB: return "EB";
    }
    return "??";
}

Setup setup_from_string(const std::string& name) {
    if (name == "EE") return Setup::EE;
    if (name == "AB") return Setup::AB;
    if (name == "AE") return Setup::AE;
    if (name == "EB") return Setup::EB;
    throw std::invalid_argument("unknown setup '" + name + "' (expected EE, AB, AE or EB)");
}

void validate(const ChannelParams& params) {
    if (!(params.epsilon >= 0.0 && params.epsilon <= 1.0)) {
        std::ostringstream msg;
        msg << "epsilon = " << params.epsilon << " outside [0, 1]";
        throw std::invalid_argument(msg.str());
    }
    if (!(params.eta >= 0.0 && params.eta <= 1.0)) {
        std::ostringstream msg;
        msg << "eta = " << params.eta << " outside [0, 1]";
        throw std::invalid_argument(msg.str());
    }
    if (params.n < 1) {
        throw std::invalid_argument("n must be a positive integer");
    }
}

double eta_limit(double epsilon, double eta) {
    if (!(epsilon >= 0.0 && epsilon <= 1.0 && eta >= 0.0 && eta <= 1.0)) {
        throw std::invalid_argument("eta_limit: parameters outside [0, 1]");
    }
    if (epsilon * eta == 1.0) return 1.0;  // continuity at epsilon = eta = 1
    const double one_minus_eta = 1.0 - eta;
    return eta + epsilon * one_minus_eta * one_minus_eta / (1.0 - epsilon * eta);
}

std::vector<double> eta_k_sequence(double epsilon, double eta, int n) {
    validate(ChannelParams{epsilon, eta, n, Setup::EE});
    std::vector<double> seq(static_cast<size_t>(n));
    const double ee = epsilon * eta;
    if (ee == 1.0) {
        for (auto& v : seq) v = 1.0;
        return seq;
    }
    const double correction = epsilon * (1.0 - eta) * (1.0 - eta) / (1.0 - ee);
    double ee_pow = 1.0;  // (epsilon eta)^(k-1)
    for (int k = 1; k <= n; ++k) {
        seq[static_cast<size_t>(k - 1)] = eta + (1.0 - ee_pow) * correction;
        ee_pow *= ee;
    }
    return seq;
}

CascadeCoefficients build_cascade(const ChannelParams& params) {
    validate(params);
    const int n = params.n;
    const double eps = params.epsilon;
    const double eta = params.eta;
    const bool mem_in_sender = initial_memory_to_sender(params.setup);
    const bool mem_out_receiver = final_memory_to_receiver(params.setup);

    const int rows = receiver_modes(params);
    const int a_cols = sender_modes(params);
    const int e_cols = environment_modes(params);
    const int a_off = mem_in_sender ? 1 : 0;  // column of a_1
    const int e_off = mem_in_sender ? 0 : 1;  // column of e_1

    const double mem_keep = std::sqrt(eps * eta);
    const double mem_from_a = std::sqrt(1.0 - eta);
    const double mem_from_e = std::sqrt(eta * (1.0 - eps));
    const double out_from_mem = -std::sqrt(eps * (1.0 - eta));
    const double out_from_a = std::sqrt(eta);
    const double out_from_e = -std::sqrt((1.0 - eps) * (1.0 - eta));

    CascadeCoefficients cc;
    cc.setup = params.setup;
    cc.a_coeffs = Eigen::MatrixXd::Zero(rows, a_cols);
    cc.e_coeffs = Eigen::MatrixXd::Zero(rows, e_cols);

    // coefficients of m_k over the input modes; starts as the unit vector
    // on the initial memory mode
    Eigen::RowVectorXd mem_a = Eigen::RowVectorXd::Zero(a_cols);
    Eigen::RowVectorXd mem_e = Eigen::RowVectorXd::Zero(e_cols);
    if (mem_in_sender) {
        mem_a(0) = 1.0;
    } else {
        mem_e(0) = 1.0;
    }

    for (int k = 0; k < n; ++k) {
        cc.a_coeffs.row(k) = out_from_mem * mem_a;
        cc.a_coeffs(k, a_off + k) += out_from_a;
        cc.e_coeffs.row(k) = out_from_mem * mem_e;
        cc.e_coeffs(k, e_off + k) += out_from_e;

        mem_a *= mem_keep;
        mem_a(a_off + k) += mem_from_a;
        mem_e *= mem_keep;
        mem_e(e_off + k) += mem_from_e;
    }
    if (mem_out_receiver) {
        cc.a_coeffs.row(n) = mem_a;
        cc.e_coeffs.row(n) = mem_e;
    }
    return cc;
}

MemoryMatrix memory_matrix_ee_formula(double epsilon, double eta, int n) {
    validate(ChannelParams{epsilon, eta, n, Setup::EE});
    const std::vector<double> etas = eta_k_sequence(epsilon, eta, n);
    const double root = std::sqrt(epsilon * eta);
    MemoryMatrix mm;
    mm.setup = Setup::EE;
    mm.n = n;
    mm.entries.resize(n, n);
    for (int k = 0; k < n; ++k) {
        mm.entries(k, k) = etas[static_cast<size_t>(k)];
        double root_pow = 1.0;
        for (int j = k + 1; j < n; ++j) {
            root_pow *= root;
            const double value = -(1.0 - etas[static_cast<size_t>(k)]) * root_pow;
            mm.entries(k, j) = value;
            mm.entries(j, k) = value;
        }
    }
    return mm;
}

MemoryMatrix memory_matrix(const ChannelParams& params) {
    const CascadeCoefficients cc = build_cascade(params);
    MemoryMatrix mm;
    mm.setup = params.setup;
    mm.n = params.n;
    Eigen::MatrixXd gram = cc.a_coeffs * cc.a_coeffs.transpose();
    mm.entries = 0.5 * (gram + gram.transpose());
    return mm;
}

double retention_amplitude_probability(double epsilon, double eta, int n) {
    validate(ChannelParams{epsilon, eta, n, Setup::EE});
    return std::pow(epsilon * eta, n);
}

}  // namespace memchan
