// rate_alloc.hpp -- bottleneck error exponent over rate pairs and the
// sum-rate-constrained allocation: exact equalizing intersection, the
// closed form valid below the decisive sum rate, and the quasi-optimal
// closed form built from capacities and cutoff rates.

#ifndef TWRC_RATE_ALLOC_HPP
#define TWRC_RATE_ALLOC_HPP

#include "twrc/exponent.hpp"

#include <vector>

namespace twrc {

struct RatePair {
    double r1 = 0.0;
    double r2 = 0.0;
};

// A link bundled with everything the allocation needs: its distribution
// stats, the relaying mode, and the precomputed summary.
struct LinkModel {
    LinkStats stats;
    Mode mode = Mode::TwoWay;
    LinkSummary summary;
    QuadratureSpec quad;
    SearchSpec search;

    double exponent_at(double rate) const { return rcee(stats, rate, mode, quad, search).exponent; }
};

LinkModel make_link_model(const LinkStats& stats, Mode mode,
                          const QuadratureSpec& quad = {}, const SearchSpec& search = {});

enum class AllocationMethod { TheoremClosedForm, ExactIntersection, QuasiOptimal };

enum class AllocationBranch {
    ClosedFormBelowDecisive, // cutoff-rate offset formula
    BoundaryLowSum,          // sum rate below the cutoff-rate gap: all on one link
    ExactIntersection,       // equalized exponents found by root bisection
    QuasiOptimal,            // offset formula reused above the decisive sum rate
    QuasiBoundary,           // capacity-limited branch of the quasi rule
    ZeroExponentTie,         // feasible interval collapsed, exponent is 0 anyway
};

struct AllocationResult {
    RatePair pair;
    double bottleneck = 0.0; // nats
    AllocationBranch branch = AllocationBranch::ExactIntersection;
    double decisive_sum_rate = 0.0;       // limit of closed-form optimality
    double quasi_decisive_sum_rate = 0.0; // limit of the quasi offset branch
};

// min over links of the per-link exponent at the pair's rates.
double bottleneck_exponent(const LinkModel& l1, const LinkModel& l2, const RatePair& pair);

// Random-coding upper bound exp(-N * bottleneck) on the worst-link block
// error probability at block length N.
double bottleneck_probability_bound(const LinkModel& l1, const LinkModel& l2,
                                    const RatePair& pair, double block_length);

// bottleneck_exponent on the grid r1_grid x r2_grid, row-major over r1.
std::vector<double> exponent_plane(const LinkModel& l1, const LinkModel& l2,
                                   const std::vector<double>& r1_grid,
                                   const std::vector<double>& r2_grid);

// Smallest r1 with exponent_1(r1) <= exponent_2(r2): the edge of the plateau
// the bottleneck shows as a function of r1 at fixed r2.
double plateau_edge(const LinkModel& l1, const LinkModel& l2, double r2);

// Split sum_rate across the links to maximize the bottleneck exponent.
// ExactIntersection solves the equalization root on the feasible interval
// and throws InfeasibleSumRate beyond the sum capacity; the closed forms
// accept any nonnegative sum rate and clamp into the capacity box.
AllocationResult allocate_rates(const LinkModel& l1, const LinkModel& l2,
                                double sum_rate, AllocationMethod method);

const char* to_string(AllocationBranch branch);

} // namespace twrc

#endif // TWRC_RATE_ALLOC_HPP
