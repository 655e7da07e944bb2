// scenario.hpp -- JSON scenario files: the physical configuration in dB-SNR
// form plus sweep grids, sample counts, seeds, and tolerances.

#ifndef TWRC_SCENARIO_HPP
#define TWRC_SCENARIO_HPP

#include "twrc/channel.hpp"
#include "twrc/quadrature.hpp"
#include "twrc/search.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace twrc {

struct SweepSpec {
    double rate_start = 0.0;
    double rate_stop = 1.6;
    int rate_count = 33;
    double snr_db_start = 0.0;
    double snr_db_stop = 30.0;
    int snr_db_count = 13;
    std::vector<double> sum_rates;
    int plane_r1_count = 21;
    int plane_r2_count = 21;
    int power_rate_count = 10; // rate grid for the power-allocation sweep
    std::size_t samples = 100000;
    std::uint64_t seed = 12345;
    SearchSpec search;
    QuadratureSpec quad;
};

struct Scenario {
    double omega1 = 0.5;
    double omega2 = 2.0;
    double snr_db = 20.0;      // total_power / n0 in dB
    double total_power = 1.0;
    double p1 = 0.5;
    double p2 = 0.5;
    double relay_power = 1.0;
    Mode mode = Mode::TwoWay;
    SweepSpec sweep;

    // Linear configuration at the scenario's own SNR.
    ChannelConfig config() const { return config_at_snr_db(snr_db); }

    // Same powers with n0 = total_power * 10^(-db/10).
    ChannelConfig config_at_snr_db(double db) const;
};

// The benchmark setup used throughout the result tables: omega1 = 0.5,
// omega2 = 2, relay at the full budget, equal terminal powers, 20 dB SNR.
Scenario reference_scenario();

// Parse and validate; unknown keys and malformed values raise
// ValidationError with the offending key in the message.
Scenario load_scenario(const std::string& path);
Scenario parse_scenario(const std::string& json_text);

std::vector<double> linspace(double start, double stop, int count);

} // namespace twrc

#endif // TWRC_SCENARIO_HPP
