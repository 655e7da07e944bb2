// bessel.cpp -- K0/K1 via the Russon-Blair minimax rational approximations
// (Chalk River Report AECL-3461, 1969), the same fits used by Boost.Math and
// widely vendored elsewhere. Two intervals per order: x in (0, 1] combines a
// rational part with a log(x) multiplier; x in (1, inf) is a rational in 1/x
// under the exp(-x)/sqrt(x) envelope.

#include "twrc/bessel.hpp"
#include "twrc/errors.hpp"

#include <cmath>

namespace twrc {

namespace {

template <int N>
inline double eval_poly(const double (&c)[N], double x) {
    double r = c[N - 1];
    for (int i = N - 2; i >= 0; --i)
        r = r * x + c[i];
    return r;
}

// --- K0, x in (0, 1]: K0(x) = R1(x^2) - log(x) * R2(x^2)
const double k0_p1[6] = {
    2.4708152720399552679e+03, 5.9169059852270512312e+03,
    4.6850901201934832188e+02, 1.1999463724910714109e+01,
    1.3166052564989571850e-01, 5.8599221412826100000e-04,
};
const double k0_q1[3] = {
    2.1312714303849120380e+04, -2.4994418972832303646e+02, 1.0,
};
const double k0_p2[5] = {
    -1.6128136304458193998e+06, -3.7333769444840079748e+05,
    -1.7984434409411765813e+04, -2.9501657892958843865e+02,
    -1.6414452837299064100e+00,
};
const double k0_q2[4] = {
    -1.6128136304458193998e+06, 2.9865713163054025489e+04,
    -2.5064972445877992730e+02, 1.0,
};
// --- K0, x in (1, inf): K0(x) = exp(-x)/sqrt(x) * R3(1/x)
const double k0_p3[10] = {
    1.1600249425076035558e+02, 2.3444738764199315021e+03,
    1.8321525870183537725e+04, 7.1557062783764037541e+04,
    1.5097646353289914539e+05, 1.7398867902565686251e+05,
    1.0577068948034021957e+05, 3.1075408980684392399e+04,
    3.6832589957340267940e+03, 1.1394980557384778174e+02,
};
const double k0_q3[11] = {
    9.2556599177304839811e+01, 1.8821890840982713696e+03,
    1.4847228371802360957e+04, 5.8824616785857027752e+04,
    1.2689839587977598727e+05, 1.5144644673520157801e+05,
    9.7418829762268075784e+04, 3.1474655750295278825e+04,
    4.4329628889746408858e+03, 2.0013443064949242491e+02, 1.0,
};

// --- K1, x in (0, 1]: K1(x) = (R1(x^2) + log(x) * R2(x^2)) / x
const double k1_p1[6] = {
    -2.2149374878243304548e+06, 7.1938920065420586101e+05,
    1.7733324035147015630e+05,  7.1885382604084798576e+03,
    9.9991373567429309922e+01,  4.8127070456878442310e-01,
};
const double k1_q1[4] = {
    -2.2149374878243304548e+06, 3.7264298672067697862e+04,
    -2.8143915754538725829e+02, 1.0,
};
const double k1_p2[6] = {
    0.0,
    -1.3531161492785421328e+06, -1.4758069205414222471e+05,
    -4.5051623763436087023e+03, -5.3103913335180275253e+01,
    -2.2795590826955002390e-01,
};
const double k1_q2[4] = {
    -2.7062322985570842656e+06, 4.3117653211351080007e+04,
    -3.0507151578787595807e+02, 1.0,
};
// --- K1, x in (1, inf): K1(x) = exp(-x)/sqrt(x) * R3(1/x)
const double k1_p3[11] = {
    2.2196792496874548962e+00, 4.4137176114230414036e+01,
    3.4122953486801312910e+02, 1.3319486433183221990e+03,
    2.8590657697910288226e+03, 3.4540675585544584407e+03,
    2.3123742209168871550e+03, 8.1094256146537402173e+02,
    1.3182609918569941308e+02, 7.5584584631176030810e+00,
    6.4257745859173138767e-02,
};
const double k1_q3[10] = {
    1.7710478032601086579e+00, 3.4552228452758912848e+01,
    2.5951223655579051357e+02, 9.6929165726802648634e+02,
    1.9448440788918006154e+03, 2.1181000487171943810e+03,
    1.2082692316002348638e+03, 3.3031020088765390854e+02,
    3.6001069306861518855e+01, 1.0,
};

inline void require_positive(double x, const char* name) {
    if (!(x > 0.0))
        throw DomainError(std::string(name) + ": argument must be positive");
}

inline double k0_small(double x) {
    const double y = x * x;
    return eval_poly(k0_p1, y) / eval_poly(k0_q1, y)
         - std::log(x) * (eval_poly(k0_p2, y) / eval_poly(k0_q2, y));
}

inline double k1_small(double x) {
    const double y = x * x;
    return (eval_poly(k1_p1, y) / eval_poly(k1_q1, y)
          + std::log(x) * (eval_poly(k1_p2, y) / eval_poly(k1_q2, y))) / x;
}

inline double k0_large_scaled(double x) {
    const double y = 1.0 / x;
    return eval_poly(k0_p3, y) / eval_poly(k0_q3, y) / std::sqrt(x);
}

inline double k1_large_scaled(double x) {
    const double y = 1.0 / x;
    return eval_poly(k1_p3, y) / eval_poly(k1_q3, y) / std::sqrt(x);
}

} // namespace

double bessel_k0(double x) {
    require_positive(x, "bessel_k0");
    if (x <= 1.0)
        return k0_small(x);
    return std::exp(-x) * k0_large_scaled(x);
}

double bessel_k1(double x) {
    require_positive(x, "bessel_k1");
    if (x <= 1.0)
        return k1_small(x);
    return std::exp(-x) * k1_large_scaled(x);
}

double bessel_k0_scaled(double x) {
    require_positive(x, "bessel_k0_scaled");
    if (x <= 1.0)
        return std::exp(x) * k0_small(x);
    return k0_large_scaled(x);
}

double bessel_k1_scaled(double x) {
    require_positive(x, "bessel_k1_scaled");
    if (x <= 1.0)
        return std::exp(x) * k1_small(x);
    return k1_large_scaled(x);
}

} // namespace twrc
