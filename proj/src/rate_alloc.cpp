// rate_alloc.cpp

#include "twrc/rate_alloc.hpp"
#include "twrc/errors.hpp"

#include <algorithm>
#include <cmath>

namespace twrc {

namespace {

// Slack applied to branch conditions at equalities so roundoff cannot flip
// between branches that agree there anyway.
constexpr double kBranchSlack = 1e-12;

double clamp(double x, double lo, double hi) { return std::min(std::max(x, lo), hi); }

AllocationResult finish(const LinkModel& l1, const LinkModel& l2, RatePair pair,
                        AllocationBranch branch, double rd, double rdq) {
    AllocationResult r;
    r.pair = pair;
    r.bottleneck = bottleneck_exponent(l1, l2, pair);
    r.branch = branch;
    r.decisive_sum_rate = rd;
    r.quasi_decisive_sum_rate = rdq;
    return r;
}

} // namespace

LinkModel make_link_model(const LinkStats& stats, Mode mode,
                          const QuadratureSpec& quad, const SearchSpec& search) {
    LinkModel m;
    m.stats = stats;
    m.mode = mode;
    m.quad = quad;
    m.search = search;
    m.summary = link_summary(stats, mode, quad);
    return m;
}

double bottleneck_exponent(const LinkModel& l1, const LinkModel& l2, const RatePair& pair) {
    if (pair.r1 < 0.0 || pair.r2 < 0.0)
        throw DomainError("bottleneck_exponent: rates must be nonnegative");
    return std::min(l1.exponent_at(pair.r1), l2.exponent_at(pair.r2));
}

double bottleneck_probability_bound(const LinkModel& l1, const LinkModel& l2,
                                    const RatePair& pair, double block_length) {
    if (!(block_length >= 1.0))
        throw DomainError("bottleneck_probability_bound: block length must be >= 1");
    return std::exp(-block_length * bottleneck_exponent(l1, l2, pair));
}

std::vector<double> exponent_plane(const LinkModel& l1, const LinkModel& l2,
                                   const std::vector<double>& r1_grid,
                                   const std::vector<double>& r2_grid) {
    // One rcee per grid line, not per cell.
    std::vector<double> e1(r1_grid.size()), e2(r2_grid.size());
    for (std::size_t i = 0; i < r1_grid.size(); ++i)
        e1[i] = l1.exponent_at(r1_grid[i]);
    for (std::size_t j = 0; j < r2_grid.size(); ++j)
        e2[j] = l2.exponent_at(r2_grid[j]);

    std::vector<double> plane(r1_grid.size() * r2_grid.size());
    for (std::size_t i = 0; i < r1_grid.size(); ++i)
        for (std::size_t j = 0; j < r2_grid.size(); ++j)
            plane[i * r2_grid.size() + j] = std::min(e1[i], e2[j]);
    return plane;
}

double plateau_edge(const LinkModel& l1, const LinkModel& l2, double r2) {
    const double level = l2.exponent_at(r2);
    if (l1.exponent_at(0.0) <= level)
        return 0.0;
    auto g = [&](double r1) { return l1.exponent_at(r1) - level; };
    return find_root_decreasing(g, 0.0, l1.summary.capacity, l1.search);
}

AllocationResult allocate_rates(const LinkModel& l1, const LinkModel& l2,
                                double sum_rate, AllocationMethod method) {
    if (sum_rate < 0.0)
        throw DomainError("allocate_rates: sum rate must be nonnegative");

    const double r01 = l1.summary.cutoff_rate;
    const double r02 = l2.summary.cutoff_rate;
    const double c1 = l1.summary.capacity;
    const double c2 = l2.summary.capacity;
    const double rd = std::min(2.0 * l1.summary.critical_rate - r01 + r02,
                               2.0 * l2.summary.critical_rate + r01 - r02);
    const double rdq = std::min(2.0 * c1 - r01 + r02, 2.0 * c2 + r01 - r02);
    const double s = sum_rate;

    auto offset_pair = [&]() {
        RatePair p;
        p.r1 = clamp(0.5 * (s + r01 - r02), 0.0, c1);
        p.r2 = clamp(0.5 * (s - r01 + r02), 0.0, c2);
        return p;
    };

    switch (method) {
    case AllocationMethod::TheoremClosedForm: {
        if (s < r01 - r02 - kBranchSlack)
            return finish(l1, l2, {s, 0.0}, AllocationBranch::BoundaryLowSum, rd, rdq);
        if (s < r02 - r01 - kBranchSlack)
            return finish(l1, l2, {0.0, s}, AllocationBranch::BoundaryLowSum, rd, rdq);
        return finish(l1, l2, offset_pair(), AllocationBranch::ClosedFormBelowDecisive, rd, rdq);
    }

    case AllocationMethod::QuasiOptimal: {
        if (s < std::fabs(r01 - r02) - kBranchSlack) {
            RatePair p = (r01 > r02) ? RatePair{s, 0.0} : RatePair{0.0, s};
            return finish(l1, l2, p, AllocationBranch::BoundaryLowSum, rd, rdq);
        }
        if (s <= rdq + kBranchSlack)
            return finish(l1, l2, offset_pair(), AllocationBranch::QuasiOptimal, rd, rdq);
        RatePair p;
        if (c1 > c2) {
            p.r2 = c2;
            p.r1 = clamp(s - c2, 0.0, c1);
        } else {
            p.r1 = c1;
            p.r2 = clamp(s - c1, 0.0, c2);
        }
        return finish(l1, l2, p, AllocationBranch::QuasiBoundary, rd, rdq);
    }

    case AllocationMethod::ExactIntersection: {
        if (s > c1 + c2 + 1e-9)
            throw InfeasibleSumRate("allocate_rates: sum rate " + std::to_string(s) +
                                    " exceeds the sum capacity " + std::to_string(c1 + c2));
        const double lo = std::max(0.0, s - c2);
        const double hi = std::min(c1, s);
        if (hi - lo <= l1.search.tol) {
            // Interval collapsed: at the sum capacity both exponents are 0
            // and any point ties; report the midpoint.
            const RatePair p{0.5 * (lo + hi), s - 0.5 * (lo + hi)};
            AllocationResult res = finish(l1, l2, p, AllocationBranch::ExactIntersection, rd, rdq);
            if (res.bottleneck <= 1e-12 && s > 0.0)
                res.branch = AllocationBranch::ZeroExponentTie;
            return res;
        }
        auto g = [&](double r1) { return l1.exponent_at(r1) - l2.exponent_at(s - r1); };
        if (g(lo) <= 0.0)
            return finish(l1, l2, {lo, s - lo}, AllocationBranch::BoundaryLowSum, rd, rdq);
        if (g(hi) >= 0.0)
            return finish(l1, l2, {hi, s - hi}, AllocationBranch::BoundaryLowSum, rd, rdq);
        const double r1 = find_root_decreasing(g, lo, hi, l1.search);
        return finish(l1, l2, {r1, s - r1}, AllocationBranch::ExactIntersection, rd, rdq);
    }
    }
    throw DomainError("allocate_rates: unknown method");
}

const char* to_string(AllocationBranch branch) {
    switch (branch) {
    case AllocationBranch::ClosedFormBelowDecisive: return "closed_form";
    case AllocationBranch::BoundaryLowSum: return "boundary_low_sum";
    case AllocationBranch::ExactIntersection: return "exact_intersection";
    case AllocationBranch::QuasiOptimal: return "quasi_optimal";
    case AllocationBranch::QuasiBoundary: return "quasi_boundary";
    case AllocationBranch::ZeroExponentTie: return "zero_exponent_tie";
    }
    return "unknown";
}

} // namespace twrc
