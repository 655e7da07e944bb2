// channel.hpp -- physical scenario for a half-duplex amplify-and-forward
// relay serving two terminals: per-link effective and idealized SNRs, the
// derived per-link distribution parameters, and fading-state sampling.

#ifndef TWRC_CHANNEL_HPP
#define TWRC_CHANNEL_HPP

#include <cstdint>
#include <vector>

namespace twrc {

// Two-way relaying exchanges the two messages in two phases; one-way
// relaying needs four and splits the relay power across directions.
enum class Mode { TwoWay, OneWay };

// Link L1 carries terminal 1's message to terminal 2 via the relay; L2 the
// reverse direction.
enum class Link { L1, L2 };

struct ChannelConfig {
    double omega1 = 1.0;  // mean square channel gain, terminal 1 <-> relay
    double omega2 = 1.0;  // mean square channel gain, terminal 2 <-> relay
    double n0 = 1.0;      // noise power density, linear
    double p1 = 0.5;      // terminal 1 transmit power, W
    double p2 = 0.5;      // terminal 2 transmit power, W
    double p_relay = 1.0; // relay transmit power, W
    double total_power = 1.0; // terminal power budget P, W
    Mode mode = Mode::TwoWay;
};

// Instantaneous normalized channel gains |h_k|^2 / N0.
struct FadingState {
    double alpha1 = 0.0;
    double alpha2 = 0.0;
};

// Per-link parameters of the idealized-relaying SNR distribution: the SNR is
// eta * V*W/(V+W) with V, W independent exponentials of rates lambda and mu.
struct LinkStats {
    Link link = Link::L1;
    double eta = 1.0;     // in (0, 1]
    double lambda = 1.0;  // rate of the terminal-side exponential
    double mu = 1.0;      // rate of the relay-side exponential
};

// Throws ValidationError unless omega/n0 positive, powers nonnegative,
// p_relay positive, and p1 + p2 <= total_power.
void validate(const ChannelConfig& cfg);

// Exact per-link SNR after self-interference cancellation. Zero power or a
// zero gain yields 0. In one-way mode the relay spends p_relay/2 per
// direction and there is no simultaneous transmission from the far terminal.
double effective_snr(const ChannelConfig& cfg, const FadingState& state, Link link);

// Idealized relaying bound: the same expression with the +1 noise term
// dropped from the denominator. Strictly above effective_snr whenever both
// powers and both gains are positive.
double ideal_snr(const ChannelConfig& cfg, const FadingState& state, Link link);

// Derived (eta, lambda, mu) for a link. Throws DegeneratePower when the
// transmitting terminal has zero power (the distribution degenerates).
LinkStats link_stats(const ChannelConfig& cfg, Link link);

// n independent fading states; alpha_k is exponential with mean omega_k/n0.
// Deterministic for a given seed, across platforms: variates are produced by
// inverse CDF from explicit 53-bit uniforms.
std::vector<FadingState> sample_fading(const ChannelConfig& cfg,
                                       std::uint64_t seed, std::size_t n);

} // namespace twrc

#endif // TWRC_CHANNEL_HPP
