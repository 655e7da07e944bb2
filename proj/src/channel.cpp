// channel.cpp

#include "twrc/channel.hpp"
#include "twrc/errors.hpp"

#include <cmath>
#include <random>

namespace twrc {

namespace {

struct LinkView {
    double p_own;    // transmit power of the sending terminal
    double p_other;  // far terminal's power during the same phase (0 in one-way)
    double p_r;      // relay power spent on this direction
    double alpha_own;
    double alpha_other;
    double omega_own;
    double omega_other;
};

LinkView view(const ChannelConfig& cfg, const FadingState& state, Link link) {
    LinkView v;
    const bool first = (link == Link::L1);
    v.p_own = first ? cfg.p1 : cfg.p2;
    v.alpha_own = first ? state.alpha1 : state.alpha2;
    v.alpha_other = first ? state.alpha2 : state.alpha1;
    v.omega_own = first ? cfg.omega1 : cfg.omega2;
    v.omega_other = first ? cfg.omega2 : cfg.omega1;
    if (cfg.mode == Mode::TwoWay) {
        v.p_other = first ? cfg.p2 : cfg.p1;
        v.p_r = cfg.p_relay;
    } else {
        // Four-phase exchange: the far terminal is silent and the relay
        // splits its budget across the two directions.
        v.p_other = 0.0;
        v.p_r = 0.5 * cfg.p_relay;
    }
    return v;
}

// Both SNR forms reduce to eta*V*W/(V+W [+1]) with V the uplink branch and W
// the downlink branch of the link.
struct Branches {
    double eta, v, w;
};

Branches branches(const LinkView& lv) {
    Branches b;
    b.eta = lv.p_r / (lv.p_r + lv.p_other);
    b.v = lv.p_own * lv.alpha_own;
    b.w = (lv.p_r + lv.p_other) * lv.alpha_other;
    return b;
}

} // namespace

void validate(const ChannelConfig& cfg) {
    if (!(cfg.omega1 > 0.0) || !(cfg.omega2 > 0.0))
        throw ValidationError("channel: fading variances must be positive");
    if (!(cfg.n0 > 0.0))
        throw ValidationError("channel: noise density must be positive");
    if (cfg.p1 < 0.0 || cfg.p2 < 0.0)
        throw ValidationError("channel: terminal powers must be nonnegative");
    if (!(cfg.p_relay > 0.0))
        throw ValidationError("channel: relay power must be positive");
    if (!(cfg.total_power > 0.0))
        throw ValidationError("channel: power budget must be positive");
    if (cfg.p1 + cfg.p2 > cfg.total_power * (1.0 + 1e-12))
        throw ValidationError("channel: p1 + p2 exceeds the power budget");
}

double effective_snr(const ChannelConfig& cfg, const FadingState& state, Link link) {
    const Branches b = branches(view(cfg, state, link));
    return b.eta * b.v * b.w / (b.v + b.w + 1.0);
}

double ideal_snr(const ChannelConfig& cfg, const FadingState& state, Link link) {
    const Branches b = branches(view(cfg, state, link));
    const double den = b.v + b.w;
    if (den == 0.0)
        return 0.0;
    return b.eta * b.v * b.w / den;
}

LinkStats link_stats(const ChannelConfig& cfg, Link link) {
    const LinkView lv = view(cfg, FadingState{}, link);
    if (!(lv.p_own > 0.0))
        throw DegeneratePower("link_stats: transmitting terminal has zero power");

    LinkStats s;
    s.link = link;
    s.eta = lv.p_r / (lv.p_r + lv.p_other);
    s.lambda = cfg.n0 / (lv.p_own * lv.omega_own);
    s.mu = cfg.n0 / ((lv.p_r + lv.p_other) * lv.omega_other);
    return s;
}

std::vector<FadingState> sample_fading(const ChannelConfig& cfg,
                                       std::uint64_t seed, std::size_t n) {
    const double mean1 = cfg.omega1 / cfg.n0;
    const double mean2 = cfg.omega2 / cfg.n0;
    std::mt19937_64 gen(seed);
    auto exp_variate = [&gen](double mean) {
        // 53-bit uniform in [0, 1), then inverse CDF; implementation-defined
        // distribution adapters are avoided to keep the stream portable.
        const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
        return -mean * std::log1p(-u);
    };
    std::vector<FadingState> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        FadingState st;
        st.alpha1 = exp_variate(mean1);
        st.alpha2 = exp_variate(mean2);
        out.push_back(st);
    }
    return out;
}

} // namespace twrc
