// power_alloc.cpp

#include "twrc/power_alloc.hpp"
#include "twrc/errors.hpp"
#include "twrc/search.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <thread>

namespace twrc {

namespace {

double rate_of(const PowerProblem& prob, Link link) {
    return link == Link::L1 ? prob.rates.r1 : prob.rates.r2;
}

ChannelConfig config_at(double p1, double p2, const PowerProblem& prob) {
    ChannelConfig cfg;
    cfg.p1 = p1;
    cfg.p2 = p2;
    cfg.p_relay = prob.p_relay;
    cfg.total_power = prob.total_power;
    cfg.mode = Mode::TwoWay;
    return cfg;
}

double min_link_exponent(double p1, double p2, const PowerProblem& prob) {
    return std::min(instantaneous_exponent(p1, p2, prob, Link::L1),
                    instantaneous_exponent(p1, p2, prob, Link::L2));
}

// Worst-link exponent no allocation can exceed: each link at the full budget
// with the idealized SNR and no cross-terminal loss.
double unreachable_level(const PowerProblem& prob) {
    const double a1 = prob.state.alpha1, a2 = prob.state.alpha2;
    const double num = prob.total_power * prob.p_relay * a1 * a2;
    const double g1 = num / (prob.total_power * a1 + prob.p_relay * a2);
    const double g2 = num / (prob.total_power * a2 + prob.p_relay * a1);
    const double opr = 1.0 + prob.rho;
    const double e1 = prob.rho * std::log1p(g1 / opr) - 2.0 * prob.rho * prob.rates.r1;
    const double e2 = prob.rho * std::log1p(g2 / opr) - 2.0 * prob.rho * prob.rates.r2;
    return std::min(e1, e2) + 1e-6;
}

struct ConstraintRow {
    // a1*q1 + a2*q2 + b >= 0
    double a1, a2, b;
    double eval(double q1, double q2) const { return a1 * q1 + a2 * q2 + b; }
    double scale(double q1, double q2) const {
        return std::max({1.0, std::fabs(a1 * q1), std::fabs(a2 * q2), std::fabs(b)});
    }
};

void check_problem(const PowerProblem& prob) {
    if (!(prob.total_power > 0.0) || !(prob.p_relay > 0.0))
        throw DomainError("power: budget and relay power must be positive");
    if (prob.rho < 0.0 || prob.rho > 1.0)
        throw DomainError("power: rho must lie in [0, 1]");
    if (prob.rates.r1 < 0.0 || prob.rates.r2 < 0.0)
        throw DomainError("power: rates must be nonnegative");
    if (prob.state.alpha1 < 0.0 || prob.state.alpha2 < 0.0)
        throw DomainError("power: channel gains must be nonnegative");
}

// Unimodal maximization over rho in [rho_floor, 1] with the coarse-grid
// disagreement fallback: if a 9-point grid beats golden by more than 1e-4
// the assumption failed locally, so a 33-point grid localizes the maximum
// and golden reruns on the bracketing cell.
double maximize_over_rho(const std::function<double(double)>& value_at_rho) {
    constexpr double kRhoFloor = 1e-6;
    SearchSpec search;
    search.tol = 1e-5;
    MaxResult best = maximize_concave_1d(value_at_rho, kRhoFloor, 1.0, search);

    double coarse_best = -1e300, coarse_arg = kRhoFloor;
    for (int i = 0; i < 9; ++i) {
        const double rho = kRhoFloor + (1.0 - kRhoFloor) * i / 8.0;
        const double v = value_at_rho(rho);
        if (v > coarse_best) {
            coarse_best = v;
            coarse_arg = rho;
        }
    }
    if (coarse_best > best.max + 1e-4) {
        double fine_best = coarse_best, fine_arg = coarse_arg;
        std::array<double, 33> xs{};
        for (int i = 0; i < 33; ++i)
            xs[i] = kRhoFloor + (1.0 - kRhoFloor) * i / 32.0;
        int best_i = 0;
        for (int i = 0; i < 33; ++i) {
            const double v = value_at_rho(xs[i]);
            if (v > fine_best) {
                fine_best = v;
                fine_arg = xs[i];
                best_i = i;
            }
        }
        const double lo = xs[std::max(0, best_i - 1)];
        const double hi = xs[std::min(32, best_i + 1)];
        MaxResult refined = maximize_concave_1d(value_at_rho, lo, hi, search);
        if (refined.max > fine_best) {
            fine_best = refined.max;
            fine_arg = refined.argmax;
        }
        best = {fine_arg, fine_best};
    }
    // rho = 0 is always admissible and yields exactly 0.
    return std::max(best.max, 0.0);
}

double per_state_optimized(const ChannelConfig& cfg, const RatePair& rates,
                           const FadingState& st, double eps) {
    if (st.alpha1 <= 0.0 || st.alpha2 <= 0.0)
        return 0.0; // dead channel: exponent is -2 rho R_k at best, 0 at rho=0
    PowerProblem prob;
    prob.state = st;
    prob.p_relay = cfg.p_relay;
    prob.total_power = cfg.total_power;
    prob.rates = rates;
    return maximize_over_rho([&](double rho) {
        prob.rho = rho;
        return optimize_power(prob, eps).instantaneous_exponent;
    });
}

double per_state_uniform(const ChannelConfig& cfg, const RatePair& rates,
                         const FadingState& st) {
    PowerProblem prob;
    prob.state = st;
    prob.p_relay = cfg.p_relay;
    prob.total_power = cfg.total_power;
    prob.rates = rates;
    const double half = 0.5 * cfg.total_power;
    return maximize_over_rho([&](double rho) {
        prob.rho = rho;
        return min_link_exponent(half, half, prob);
    });
}

MonteCarloEstimate summarize(const std::vector<double>& values) {
    MonteCarloEstimate est;
    est.samples = values.size();
    if (values.empty())
        return est;
    double sum = 0.0;
    for (double v : values)
        sum += v;
    est.mean = sum / static_cast<double>(values.size());
    double ss = 0.0;
    for (double v : values)
        ss += (v - est.mean) * (v - est.mean);
    if (values.size() > 1)
        est.std_error = std::sqrt(ss / (static_cast<double>(values.size()) *
                                        static_cast<double>(values.size() - 1)));
    return est;
}

// The sample stream is pre-generated from the seed and indexed statically,
// so the estimate is identical for any worker count.
template <typename PerState>
MonteCarloEstimate run_monte_carlo(const ChannelConfig& cfg, std::size_t n_samples,
                                   std::uint64_t seed, std::size_t workers,
                                   PerState&& per_state) {
    validate(cfg);
    if (n_samples < 1)
        throw DomainError("monte carlo: need at least one sample");
    const std::vector<FadingState> states = sample_fading(cfg, seed, n_samples);
    std::vector<double> values(n_samples, 0.0);

    if (workers == 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        workers = std::max<std::size_t>(1, std::min<std::size_t>(hw ? hw : 1, 8));
        if (n_samples < 256)
            workers = 1;
    }
    if (workers == 1) {
        for (std::size_t i = 0; i < n_samples; ++i)
            values[i] = per_state(states[i]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w]() {
                for (std::size_t i = w; i < n_samples; i += workers)
                    values[i] = per_state(states[i]);
            });
        }
        for (auto& th : pool)
            th.join();
    }
    return summarize(values);
}

} // namespace

double instantaneous_exponent(double p1, double p2, const PowerProblem& prob, Link link) {
    if (p1 < 0.0 || p2 < 0.0)
        throw DomainError("instantaneous_exponent: powers must be nonnegative");
    const double snr = effective_snr(config_at(p1, p2, prob), prob.state, link);
    return prob.rho * std::log1p(snr / (1.0 + prob.rho)) - 2.0 * prob.rho * rate_of(prob, link);
}

FeasibilitySpec make_feasibility_spec(double t, const PowerProblem& prob) {
    check_problem(prob);
    if (!(prob.rho > 0.0))
        throw DomainError("make_feasibility_spec: rho must be positive");
    const double product = prob.state.alpha1 * prob.state.alpha2;
    if (!(product > 0.0))
        throw DomainError("make_feasibility_spec: channel gains must be positive");
    const double front = (1.0 + prob.rho) / (prob.p_relay * product);
    auto v_of = [&](double rate) {
        const double z = (t + 2.0 * prob.rho * rate) / prob.rho;
        if (z > 700.0)
            return std::numeric_limits<double>::infinity();
        return front * std::expm1(z);
    };
    return {t, v_of(prob.rates.r1), v_of(prob.rates.r2)};
}

FeasibilityResult feasibility(const FeasibilitySpec& spec, const PowerProblem& prob) {
    check_problem(prob);
    const double a1 = prob.state.alpha1;
    const double a2 = prob.state.alpha2;
    const double P = prob.total_power;

    // In q = power coordinates the level constraint for link k reads
    //   q_k / v_k >= 1 + p_relay * a_other + a1 q1 + a2 q2
    // when v_k > 0; v_k <= 0 means the level is below what a dead link
    // already achieves, and an infinite v_k is unsatisfiable.
    std::vector<ConstraintRow> rows;
    rows.reserve(5);
    const double c1 = 1.0 + prob.p_relay * a2;
    const double c2 = 1.0 + prob.p_relay * a1;
    if (std::isinf(spec.v1) || std::isinf(spec.v2) || std::isnan(spec.v1) || std::isnan(spec.v2))
        return {};
    if (spec.v1 > 0.0)
        rows.push_back({1.0 / spec.v1 - a1, -a2, -c1});
    if (spec.v2 > 0.0)
        rows.push_back({-a1, 1.0 / spec.v2 - a2, -c2});
    rows.push_back({-1.0, -1.0, P}); // budget
    rows.push_back({1.0, 0.0, 0.0}); // q1 >= 0
    rows.push_back({0.0, 1.0, 0.0}); // q2 >= 0

    // The feasible set is a polytope inside the budget simplex; when
    // nonempty it has a vertex where two constraints are tight, so checking
    // every pairwise line intersection decides feasibility exactly.
    const std::size_t n = rows.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double det = rows[i].a1 * rows[j].a2 - rows[i].a2 * rows[j].a1;
            const double norm = std::max({std::fabs(rows[i].a1), std::fabs(rows[i].a2),
                                          std::fabs(rows[j].a1), std::fabs(rows[j].a2)});
            if (std::fabs(det) <= 1e-14 * norm * norm)
                continue;
            const double q1 = (-rows[i].b * rows[j].a2 + rows[j].b * rows[i].a2) / det;
            const double q2 = (-rows[j].b * rows[i].a1 + rows[i].b * rows[j].a1) / det;
            bool ok = true;
            for (const ConstraintRow& r : rows) {
                if (r.eval(q1, q2) < -1e-9 * r.scale(q1, q2)) {
                    ok = false;
                    break;
                }
            }
            if (ok)
                return {true, std::max(q1, 0.0), std::max(q2, 0.0)};
        }
    }
    return {};
}

PowerSolution optimize_power(const PowerProblem& prob, double eps,
                             double t_min, double t_max) {
    check_problem(prob);
    if (!(eps > 0.0))
        throw DomainError("optimize_power: eps must be positive");

    PowerSolution sol;
    sol.p1 = 0.5 * prob.total_power;
    sol.p2 = 0.5 * prob.total_power;
    if (prob.rho == 0.0) {
        sol.instantaneous_exponent = 0.0;
        return sol;
    }
    if (feasibility(make_feasibility_spec(t_max, prob), prob).feasible)
        throw BracketError("optimize_power: initial t_max is feasible");

    while (t_max - t_min >= eps) {
        const double t = 0.5 * (t_max + t_min);
        const FeasibilityResult r = feasibility(make_feasibility_spec(t, prob), prob);
        if (r.feasible) {
            t_min = t;
            sol.p1 = r.p1;
            sol.p2 = r.p2;
        } else {
            t_max = t;
        }
        ++sol.iterations;
    }
    sol.gap = t_max - t_min;
    sol.instantaneous_exponent = min_link_exponent(sol.p1, sol.p2, prob);
    return sol;
}

PowerSolution optimize_power(const PowerProblem& prob, double eps) {
    check_problem(prob);
    const double half = 0.5 * prob.total_power;
    if (prob.rho == 0.0 || prob.state.alpha1 <= 0.0 || prob.state.alpha2 <= 0.0) {
        // Exponents do not depend on the split; keep the uniform one.
        PowerSolution sol;
        sol.p1 = half;
        sol.p2 = half;
        sol.instantaneous_exponent = min_link_exponent(half, half, prob);
        return sol;
    }
    const double t_min = min_link_exponent(half, half, prob);
    const double t_max = unreachable_level(prob);
    return optimize_power(prob, eps, t_min, t_max);
}

MonteCarloEstimate averaged_optimized_exponent(const ChannelConfig& cfg,
                                               const RatePair& rates,
                                               std::size_t n_samples,
                                               std::uint64_t seed, double eps,
                                               std::size_t workers) {
    return run_monte_carlo(cfg, n_samples, seed, workers, [&](const FadingState& st) {
        return per_state_optimized(cfg, rates, st, eps);
    });
}

MonteCarloEstimate averaged_uniform_exponent(const ChannelConfig& cfg,
                                             const RatePair& rates,
                                             std::size_t n_samples,
                                             std::uint64_t seed,
                                             std::size_t workers) {
    return run_monte_carlo(cfg, n_samples, seed, workers, [&](const FadingState& st) {
        return per_state_uniform(cfg, rates, st);
    });
}

} // namespace twrc
