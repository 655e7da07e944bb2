// exponent.cpp

#include "twrc/exponent.hpp"
#include "twrc/bessel.hpp"
#include "twrc/errors.hpp"

#include <cmath>
#include <cstdio>

namespace twrc {

namespace {

constexpr double kEulerGamma = 0.57721566490153286061;

struct PdfParams {
    double b;  // (lambda+mu)/eta, exponential envelope rate
    double c;  // 2*sqrt(lambda*mu)/eta, Bessel argument rate; c <= b
    double a0; // 4*lambda*mu/eta^2, K0 coefficient
    double a1; // 2*(lambda+mu)*sqrt(lambda*mu)/eta^2, K1 coefficient
};

PdfParams pdf_params(const LinkStats& s) {
    const double root = std::sqrt(s.lambda * s.mu);
    PdfParams p;
    p.b = (s.lambda + s.mu) / s.eta;
    p.c = 2.0 * root / s.eta;
    p.a0 = 4.0 * s.lambda * s.mu / (s.eta * s.eta);
    p.a1 = 2.0 * (s.lambda + s.mu) * root / (s.eta * s.eta);
    return p;
}

void check_stats(const LinkStats& s) {
    if (!(s.eta > 0.0) || s.eta > 1.0 + 1e-12)
        throw DomainError("link stats: eta must lie in (0, 1]");
    if (!(s.lambda > 0.0) || !(s.mu > 0.0))
        throw DomainError("link stats: lambda and mu must be positive");
}

double pdf_value(const PdfParams& p, double g) {
    if (g == 0.0)
        return p.a1 / p.c; // g*K1(c*g) -> 1/c, the K0 term vanishes
    const double x = p.c * g;
    if (x < 1e-8) {
        // Series heads keep the two terms finite where c*g would underflow
        // inside the kernels: K0 ~ -ln(x/2)-gamma, g*K1(c g) ~ 1/c.
        const double k0 = -std::log(0.5 * x) - kEulerGamma;
        return std::exp(-p.b * g) * (p.a0 * g * k0 + p.a1 / p.c);
    }
    // exp(-b g) K_nu(c g) = exp(-(b+c) g) * [e^x K_nu(x)]; b >= c so the
    // combined envelope never has a growing factor.
    const double envelope = std::exp(-(p.b + p.c) * g);
    return g * envelope * (p.a0 * bessel_k0_scaled(x) + p.a1 * bessel_k1_scaled(x));
}

QuadratureSpec with_tail(const QuadratureSpec& quad, const PdfParams& p) {
    QuadratureSpec q = quad;
    if (q.tail_cut <= 0.0)
        q.tail_cut = (std::log(1.0 / q.abs_tol) + 10.0) / p.b;
    return q;
}

} // namespace

double ideal_snr_pdf(const LinkStats& stats, double gamma) {
    check_stats(stats);
    if (gamma < 0.0)
        throw DomainError("ideal_snr_pdf: gamma must be nonnegative");
    return pdf_value(pdf_params(stats), gamma);
}

double gallager_e0(const LinkStats& stats, double rho, const QuadratureSpec& quad) {
    check_stats(stats);
    if (rho < 0.0 || rho > 1.0)
        throw DomainError("gallager_e0: rho must lie in [0, 1]");
    if (rho == 0.0)
        return 0.0;

    const PdfParams p = pdf_params(stats);
    const double inv1r = 1.0 / (1.0 + rho);
    auto integrand = [&](double g) {
        return std::exp(-rho * std::log1p(g * inv1r)) * pdf_value(p, g);
    };
    const QuadratureResult r = integrate_semi_infinite(integrand, with_tail(quad, p));
    return -std::log(r.value);
}

double gallager_e0_slope(const LinkStats& stats, double rho, const QuadratureSpec& quad) {
    check_stats(stats);
    if (!(rho > 0.0) || rho > 1.0)
        throw DomainError("gallager_e0_slope: rho must lie in (0, 1]");

    // E0 = -ln I(rho); dE0/drho = [Int w*(ln(1+g/(1+rho)) - rho g /
    // ((1+rho)(1+rho+g))) p dg] / [Int w p dg] with w = (1+g/(1+rho))^{-rho}.
    const PdfParams p = pdf_params(stats);
    const double opr = 1.0 + rho;
    const QuadratureSpec q = with_tail(quad, p);
    auto weight = [&](double g) { return std::exp(-rho * std::log1p(g / opr)); };
    auto numerator = [&](double g) {
        const double inner = std::log1p(g / opr) - rho * g / (opr * (opr + g));
        return weight(g) * inner * pdf_value(p, g);
    };
    auto denominator = [&](double g) { return weight(g) * pdf_value(p, g); };
    const double num = integrate_semi_infinite(numerator, q).value;
    const double den = integrate_semi_infinite(denominator, q).value;
    return num / den;
}

ExponentResult rcee(const LinkStats& stats, double rate, Mode mode,
                    const QuadratureSpec& quad, const SearchSpec& search) {
    if (rate < 0.0)
        throw DomainError("rcee: rate must be nonnegative");
    const double m = phase_factor(mode);
    auto objective = [&](double rho) {
        return gallager_e0(stats, rho, quad) - m * rho * rate;
    };
    const MaxResult best = maximize_concave_1d(objective, 0.0, 1.0, search);

    ExponentResult result;
    result.rate = rate;
    result.link = stats.link;
    result.mode = mode;
    if (best.max <= 0.0) {
        // rho = 0 always achieves exactly 0, so 0 is the max from capacity on.
        result.rho_opt = 0.0;
        result.exponent = 0.0;
    } else {
        result.rho_opt = best.argmax;
        result.exponent = best.max;
    }
    return result;
}

LinkSummary link_summary(const LinkStats& stats, Mode mode, const QuadratureSpec& quad) {
    check_stats(stats);
    const double m = phase_factor(mode);
    const PdfParams p = pdf_params(stats);
    const QuadratureSpec q = with_tail(quad, p);

    auto rate_integrand = [&](double g) { return std::log1p(g) * pdf_value(p, g); };

    LinkSummary s;
    s.capacity = integrate_semi_infinite(rate_integrand, q).value / m;
    s.e0_at_1 = gallager_e0(stats, 1.0, quad);
    s.cutoff_rate = s.e0_at_1 / m;
    s.critical_rate = gallager_e0_slope(stats, 1.0, quad) / m;
    // Concavity of E0 through the origin puts the cutoff rate at or below
    // the capacity; the ordering is monitored rather than enforced.
    if (s.cutoff_rate > s.capacity * (1.0 + 1e-9))
        std::fprintf(stderr,
                     "link_summary: warning: cutoff rate %.9g above capacity %.9g\n",
                     s.cutoff_rate, s.capacity);
    return s;
}

std::vector<double> ideal_snr_cdf(const LinkStats& stats,
                                  const std::vector<double>& grid,
                                  const QuadratureSpec& quad) {
    check_stats(stats);
    const PdfParams p = pdf_params(stats);
    auto f = [&](double g) { return pdf_value(p, g); };

    QuadratureSpec q = quad;
    q.abs_tol = std::max(q.abs_tol, 1e-12);

    std::vector<double> out(grid.size(), 0.0);
    double acc = 0.0;
    double prev = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double g = grid[i];
        if (g < prev)
            throw DomainError("ideal_snr_cdf: grid must be nondecreasing");
        if (g > prev)
            acc += integrate_interval(f, prev, g, q).value;
        out[i] = acc;
        prev = g;
    }
    return out;
}

} // namespace twrc
