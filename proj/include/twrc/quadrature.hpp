// quadrature.hpp -- adaptive semi-infinite quadrature for exponentially
// decaying integrands, tolerant of a logarithmic singularity at zero.

#ifndef TWRC_QUADRATURE_HPP
#define TWRC_QUADRATURE_HPP

#include <cstddef>
#include <functional>

namespace twrc {

struct QuadratureSpec {
    double rel_tol = 1e-9;
    double abs_tol = 1e-12;
    int max_subdivisions = 200;
    // Upper truncation point of [0, inf). 0 selects the adaptive policy:
    // the range is extended octave by octave until two consecutive octaves
    // contribute less than a tenth of the tolerance each. Callers that know
    // the exp(-b*g) envelope of their integrand set this directly, e.g. to
    // (log(1/abs_tol) + 10) / b so the discarded tail mass is < abs_tol/10.
    double tail_cut = 0.0;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int subdivisions = 0;
};

// Integral of f over [0, inf). The first panels are geometrically graded
// toward 0, then adaptive Gauss-Kronrod (7,15) bisection refines until the
// summed error estimate meets max(rel_tol*|value|, abs_tol). Throws
// NonConvergence when max_subdivisions is exhausted first.
QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f,
                                         const QuadratureSpec& spec = {});

// Same rule over a finite interval [a, b]; used for distribution functions.
QuadratureResult integrate_interval(const std::function<double(double)>& f,
                                    double a, double b,
                                    const QuadratureSpec& spec = {});

} // namespace twrc

#endif // TWRC_QUADRATURE_HPP
