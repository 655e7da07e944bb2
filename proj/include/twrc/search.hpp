// search.hpp -- 1-D scalar search kernels: golden-section maximization of a
// unimodal function and bisection root finding for a decreasing function.

#ifndef TWRC_SEARCH_HPP
#define TWRC_SEARCH_HPP

#include <functional>

namespace twrc {

struct SearchSpec {
    double tol = 1e-7;   // argument tolerance
    int max_iter = 200;
};

struct MaxResult {
    double argmax = 0.0;
    double max = 0.0;
};

// Maximize g over [lo, hi]. g must be unimodal (concave suffices) on the
// interval; that is a caller contract, not checked. Golden-section is used
// because the objectives here have integral-valued derivatives. Endpoints
// are returned exactly when the maximum sits on the boundary.
MaxResult maximize_concave_1d(const std::function<double(double)>& g,
                              double lo, double hi, const SearchSpec& spec = {});

// Root of a strictly decreasing g with g(lo) >= 0 >= g(hi), by bisection.
// Throws BracketError when the sign condition fails.
double find_root_decreasing(const std::function<double(double)>& g,
                            double lo, double hi, const SearchSpec& spec = {});

} // namespace twrc

#endif // TWRC_SEARCH_HPP
