// exponent.hpp -- per-link reliability quantities: the idealized-SNR density,
// the Gallager function E0(rho), the random coding error exponent at a rate,
// and the ergodic capacity / cutoff rate / critical rate summary.

#ifndef TWRC_EXPONENT_HPP
#define TWRC_EXPONENT_HPP

#include "twrc/channel.hpp"
#include "twrc/quadrature.hpp"
#include "twrc/search.hpp"

namespace twrc {

struct ExponentResult {
    double rate = 0.0;     // nats/s/Hz
    double rho_opt = 0.0;  // maximizer in [0, 1]
    double exponent = 0.0; // nats, >= 0
    Link link = Link::L1;
    Mode mode = Mode::TwoWay;
};

struct LinkSummary {
    double capacity = 0.0;      // nats/s/Hz, rate where the exponent reaches 0
    double cutoff_rate = 0.0;   // e0_at_1 / phase factor
    double critical_rate = 0.0; // below it rho_opt pins to 1
    double e0_at_1 = 0.0;       // zero-rate exponent, nats
};

// Phases spent per information exchange enter every rate formula: 2 for
// two-way relaying, 4 for one-way.
inline double phase_factor(Mode mode) { return mode == Mode::TwoWay ? 2.0 : 4.0; }

// Density of the idealized per-link SNR eta*V*W/(V+W), V ~ Exp(lambda),
// W ~ Exp(mu):
//   (4/eta^2) lam mu g e^{-(lam+mu)g/eta} K0(2g sqrt(lam mu)/eta)
// + (2/eta^2)(lam+mu) sqrt(lam mu) g e^{-(lam+mu)g/eta} K1(2g sqrt(lam mu)/eta)
// with the finite limit (lam+mu)/eta at g = 0. Throws DomainError for g < 0.
double ideal_snr_pdf(const LinkStats& stats, double gamma);

// Gallager function for the link,
//   E0(rho) = -ln Integral (1 + g/(1+rho))^{-rho} pdf(g) dg,
// by direct quadrature; exactly 0 at rho = 0. Throws DomainError outside
// [0, 1]; propagates NonConvergence from the quadrature.
double gallager_e0(const LinkStats& stats, double rho,
                   const QuadratureSpec& quad = {});

// Random coding error exponent max(0, max_rho {E0(rho) - m*rho*rate}) with
// m the phase factor. rho_opt is 1 below the critical rate and 0 from the
// capacity upward.
ExponentResult rcee(const LinkStats& stats, double rate, Mode mode,
                    const QuadratureSpec& quad = {}, const SearchSpec& search = {});

// Capacity (1/m) E{ln(1+g)}, cutoff rate E0(1)/m, and the critical rate
// (1/m) dE0/drho at rho = 1 computed by differentiation under the integral.
LinkSummary link_summary(const LinkStats& stats, Mode mode,
                         const QuadratureSpec& quad = {});

// dE0/drho at an interior rho; exposed for the summary and its tests.
double gallager_e0_slope(const LinkStats& stats, double rho,
                         const QuadratureSpec& quad = {});

// CDF of the idealized SNR on a caller-supplied increasing grid, by panelwise
// integration; used by distribution tests and the plane sweep tooling.
std::vector<double> ideal_snr_cdf(const LinkStats& stats,
                                  const std::vector<double>& grid,
                                  const QuadratureSpec& quad = {});

} // namespace twrc

#endif // TWRC_EXPONENT_HPP
