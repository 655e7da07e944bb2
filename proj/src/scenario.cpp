// scenario.cpp

#include "twrc/scenario.hpp"
#include "twrc/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace twrc {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::set<std::string>& allowed,
                    const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key()))
            throw ValidationError("scenario: unknown key \"" + it.key() + "\" in " + where);
}

double get_number(const json& obj, const char* key, double fallback) {
    if (!obj.contains(key))
        return fallback;
    if (!obj[key].is_number())
        throw ValidationError(std::string("scenario: \"") + key + "\" must be a number");
    return obj[key].get<double>();
}

std::int64_t get_integer(const json& obj, const char* key, std::int64_t fallback) {
    if (!obj.contains(key))
        return fallback;
    if (!obj[key].is_number_integer())
        throw ValidationError(std::string("scenario: \"") + key + "\" must be an integer");
    return obj[key].get<std::int64_t>();
}

SweepSpec parse_sweep(const json& obj) {
    reject_unknown(obj, {"rate_start", "rate_stop", "rate_count",
                         "snr_db_start", "snr_db_stop", "snr_db_count",
                         "sum_rates", "plane_r1_count", "plane_r2_count",
                         "power_rate_count", "samples", "seed", "search_tol",
                         "quad_rel_tol", "quad_abs_tol"},
                   "\"sweep\"");
    SweepSpec s;
    s.rate_start = get_number(obj, "rate_start", s.rate_start);
    s.rate_stop = get_number(obj, "rate_stop", s.rate_stop);
    s.rate_count = static_cast<int>(get_integer(obj, "rate_count", s.rate_count));
    s.snr_db_start = get_number(obj, "snr_db_start", s.snr_db_start);
    s.snr_db_stop = get_number(obj, "snr_db_stop", s.snr_db_stop);
    s.snr_db_count = static_cast<int>(get_integer(obj, "snr_db_count", s.snr_db_count));
    s.plane_r1_count = static_cast<int>(get_integer(obj, "plane_r1_count", s.plane_r1_count));
    s.plane_r2_count = static_cast<int>(get_integer(obj, "plane_r2_count", s.plane_r2_count));
    s.power_rate_count = static_cast<int>(get_integer(obj, "power_rate_count", s.power_rate_count));
    const std::int64_t samples = get_integer(obj, "samples", static_cast<std::int64_t>(s.samples));
    if (samples < 1)
        throw ValidationError("scenario: \"samples\" must be at least 1");
    s.samples = static_cast<std::size_t>(samples);
    s.seed = static_cast<std::uint64_t>(get_integer(obj, "seed", static_cast<std::int64_t>(s.seed)));
    s.search.tol = get_number(obj, "search_tol", s.search.tol);
    s.quad.rel_tol = get_number(obj, "quad_rel_tol", s.quad.rel_tol);
    s.quad.abs_tol = get_number(obj, "quad_abs_tol", s.quad.abs_tol);
    if (obj.contains("sum_rates")) {
        if (!obj["sum_rates"].is_array())
            throw ValidationError("scenario: \"sum_rates\" must be an array of numbers");
        for (const auto& v : obj["sum_rates"]) {
            if (!v.is_number())
                throw ValidationError("scenario: \"sum_rates\" must contain numbers only");
            s.sum_rates.push_back(v.get<double>());
        }
    }
    if (s.rate_count < 0 || s.snr_db_count < 0 || s.plane_r1_count < 1 ||
        s.plane_r2_count < 1 || s.power_rate_count < 1)
        throw ValidationError("scenario: grid counts must be nonnegative");
    if (!(s.search.tol > 0.0) || !(s.quad.rel_tol > 0.0) || !(s.quad.abs_tol > 0.0))
        throw ValidationError("scenario: tolerances must be positive");
    return s;
}

} // namespace

ChannelConfig Scenario::config_at_snr_db(double db) const {
    if (!(total_power > 0.0))
        throw ValidationError("scenario: total power must be positive; the SNR axis is "
                              "total_power over n0");
    ChannelConfig cfg;
    cfg.omega1 = omega1;
    cfg.omega2 = omega2;
    cfg.total_power = total_power;
    cfg.n0 = total_power / std::pow(10.0, db / 10.0);
    cfg.p1 = p1;
    cfg.p2 = p2;
    cfg.p_relay = relay_power;
    cfg.mode = mode;
    validate(cfg);
    return cfg;
}

Scenario reference_scenario() {
    Scenario s;
    s.omega1 = 0.5;
    s.omega2 = 2.0;
    s.snr_db = 20.0;
    s.total_power = 1.0;
    s.p1 = 0.5;
    s.p2 = 0.5;
    s.relay_power = 1.0;
    s.mode = Mode::TwoWay;
    return s;
}

Scenario parse_scenario(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("scenario: invalid JSON: ") + e.what());
    }
    if (!root.is_object())
        throw ValidationError("scenario: top level must be an object");
    reject_unknown(root, {"omega1", "omega2", "snr_db", "total_power",
                          "p1", "p2", "relay_power", "mode", "sweep"},
                   "the scenario");
    for (const char* key : {"omega1", "omega2", "snr_db"})
        if (!root.contains(key))
            throw ValidationError(std::string("scenario: missing required key \"") + key + "\"");

    Scenario s;
    s.omega1 = get_number(root, "omega1", s.omega1);
    s.omega2 = get_number(root, "omega2", s.omega2);
    s.snr_db = get_number(root, "snr_db", s.snr_db);
    s.total_power = get_number(root, "total_power", 1.0);
    s.p1 = get_number(root, "p1", 0.5 * s.total_power);
    s.p2 = get_number(root, "p2", 0.5 * s.total_power);
    s.relay_power = get_number(root, "relay_power", s.total_power);
    if (root.contains("mode")) {
        if (!root["mode"].is_string())
            throw ValidationError("scenario: \"mode\" must be \"twrc\" or \"owrc\"");
        const std::string m = root["mode"].get<std::string>();
        if (m == "twrc")
            s.mode = Mode::TwoWay;
        else if (m == "owrc")
            s.mode = Mode::OneWay;
        else
            throw ValidationError("scenario: \"mode\" must be \"twrc\" or \"owrc\"");
    }
    if (root.contains("sweep")) {
        if (!root["sweep"].is_object())
            throw ValidationError("scenario: \"sweep\" must be an object");
        s.sweep = parse_sweep(root["sweep"]);
    }
    s.config(); // validates the physical parameters
    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ValidationError("scenario: cannot open \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

std::vector<double> linspace(double start, double stop, int count) {
    std::vector<double> out;
    if (count <= 0)
        return out;
    out.reserve(static_cast<std::size_t>(count));
    if (count == 1) {
        out.push_back(start);
        return out;
    }
    for (int i = 0; i < count; ++i)
        out.push_back(start + (stop - start) * i / (count - 1));
    return out;
}

} // namespace twrc
