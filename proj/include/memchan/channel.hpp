#pragma once

#include <string>

namespace memchan {

/// Assignment of the initial (X) and final (Y) memory mode: to the sender
/// (A), the receiver (B), or the environment (E).
enum class Setup { EE, AB, AE, EB };

const char* to_string(Setup setup);
Setup setup_from_string(const std::string& name);

/// Whether the initial memory mode is one of the sender's input modes.
inline bool initial_memory_to_sender(Setup s) { return s == Setup::AB || s == Setup::AE; }
/// Whether the final memory mode is one of the receiver's output modes.
inline bool final_memory_to_receiver(Setup s) { return s == Setup::AB || s == Setup::EB; }

/// One channel instance: a cascade of n beam-splitter pairs with memory
/// transmissivity epsilon and signal transmissivity eta.
struct ChannelParams {
    double epsilon = 0.0;
    double eta = 1.0;
    int n = 1;
    Setup setup = Setup::EE;
};

/// Number of receiver output modes (rows of the coefficient matrices).
inline int receiver_modes(const ChannelParams& p) {
    return p.n + (final_memory_to_receiver(p.setup) ? 1 : 0);
}
/// Number of sender input modes (columns of a_coeffs).
inline int sender_modes(const ChannelParams& p) {
    return p.n + (initial_memory_to_sender(p.setup) ? 1 : 0);
}
/// Number of environment input modes (columns of e_coeffs).
inline int environment_modes(const ChannelParams& p) {
    return p.n + (initial_memory_to_sender(p.setup) ? 0 : 1);
}

/// Throws std::invalid_argument unless epsilon, eta are in [0,1] and n >= 1.
void validate(const ChannelParams& params);

}  // namespace memchan
