// search.cpp

#include "twrc/search.hpp"
#include "twrc/errors.hpp"

#include <cmath>

namespace twrc {

namespace {
constexpr double kInvPhi = 0.6180339887498948482;  // 1/phi
constexpr double kInvPhi2 = 0.3819660112501051518; // 1/phi^2

void check_spec(const SearchSpec& spec) {
    if (!(spec.tol > 0.0))
        throw DomainError("search: tol must be positive");
}
} // namespace

MaxResult maximize_concave_1d(const std::function<double(double)>& g,
                              double lo, double hi, const SearchSpec& spec) {
    check_spec(spec);
    if (!(hi > lo)) {
        const double v = g(lo);
        return {lo, v};
    }

    double a = lo, b = hi;
    double x1 = a + kInvPhi2 * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = g(x1);
    double f2 = g(x2);
    for (int it = 0; it < spec.max_iter && (b - a) > spec.tol; ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kInvPhi * (b - a);
            f2 = g(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = a + kInvPhi2 * (b - a);
            f1 = g(x1);
        }
    }

    double xm = (f1 >= f2) ? x1 : x2;
    double fm = (f1 >= f2) ? f1 : f2;
    // A boundary maximum must be reported at the boundary itself.
    const double flo = g(lo);
    const double fhi = g(hi);
    if (flo >= fm && flo >= fhi)
        return {lo, flo};
    if (fhi >= fm)
        return {hi, fhi};
    return {xm, fm};
}

double find_root_decreasing(const std::function<double(double)>& g,
                            double lo, double hi, const SearchSpec& spec) {
    check_spec(spec);
    double glo = g(lo);
    double ghi = g(hi);
    if (glo < 0.0 || ghi > 0.0)
        throw BracketError("find_root_decreasing: need g(lo) >= 0 >= g(hi), got g(" +
                           std::to_string(lo) + ")=" + std::to_string(glo) + ", g(" +
                           std::to_string(hi) + ")=" + std::to_string(ghi));
    if (glo == 0.0)
        return lo;
    if (ghi == 0.0)
        return hi;

    double a = lo, b = hi;
    for (int it = 0; it < spec.max_iter && (b - a) > spec.tol; ++it) {
        const double mid = 0.5 * (a + b);
        const double gm = g(mid);
        if (gm == 0.0)
            return mid;
        if (gm > 0.0)
            a = mid;
        else
            b = mid;
    }
    return 0.5 * (a + b);
}

} // namespace twrc
