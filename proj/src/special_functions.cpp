#include "ant/special_functions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ant {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLog2Pi = 1.8378770664093454836;

// classical Stirling numerator/denominator pairs, a_n = (-1)^n gamma_n
const double kStirlingA[13] = {
    1.0,
    1.0 / 12.0,
    1.0 / 288.0,
    -139.0 / 51840.0,
    -571.0 / 2488320.0,
    163879.0 / 209018880.0,
    5246819.0 / 75246796800.0,
    -534703531.0 / 902961561600.0,
    -4483131259.0 / 86684309913600.0,
    432261921612371.0 / 514904800886784000.0,
    6232523202521089.0 / 86504006548979712000.0,
    -25834629665134204969.0 / 13494625021640835072000.0,
    -1579029138854919086429.0 / 9716130015581401251840000.0,
};

bool near_pole(cplx z, double eps = 1e-8) {
    if (z.real() > 0.5) return false;
    double r = std::round(z.real());
    return r <= 0.0 && std::abs(z - cplx(r, 0.0)) < eps;
}

}  // namespace

StirlingSeries StirlingSeries::standard(int order) {
    if (order < 1 || order > 13) throw std::invalid_argument("stirling order must be in [1,13]");
    StirlingSeries s;
    s.order = order;
    s.gamma_n.resize(order);
    for (int n = 0; n < order; ++n) s.gamma_n[n] = (n % 2 ? -kStirlingA[n] : kStirlingA[n]);
    return s;
}

cplx StirlingSeries::sum(cplx z) const {
    cplx acc = 0.0, zp = 1.0;
    for (int n = 0; n < order; ++n) {
        double a_n = (n % 2 ? -gamma_n[n] : gamma_n[n]);
        acc += a_n / zp;
        zp *= z;
    }
    return acc;
}

cplx log_sin_pi(cplx z) {
    if (z.imag() < 0) return std::conj(log_sin_pi(std::conj(z)));
    // sin(pi z) = -e^{-i pi z}/(2i) (1 - e^{2 pi i z}), |e^{2 pi i z}| <= 1 here
    cplx i(0.0, 1.0);
    return -i * kPi * z - cplx(std::log(2.0), kPi / 2.0) + std::log(1.0 - std::exp(2.0 * kPi * i * z));
}

cplx log_gamma(cplx z) {
    if (near_pole(z)) throw std::domain_error("log_gamma: argument within 1e-8 of a pole");
    if (z.real() < 0.5) {
        return std::log(kPi) - log_sin_pi(z) - log_gamma(1.0 - z);
    }
    static const StirlingSeries series = StirlingSeries::standard(13);
    cplx shift = 0.0;
    while (z.real() < 10.0) {
        shift += std::log(z);
        z += 1.0;
    }
    cplx val = 0.5 * kLog2Pi + (z - 0.5) * std::log(z) - z + std::log(series.sum(z));
    return val - shift;
}

cplx gamma_fn(cplx z) { return std::exp(log_gamma(z)); }

cplx gamma_quotient(cplx a, cplx b) {
    if (near_pole(a)) throw std::domain_error("gamma_quotient: numerator pole");
    if (near_pole(b, 1e-12)) return 0.0;
    if (b.real() < 0.5) {
        // 1/Gamma(b) = sin(pi b) Gamma(1-b) / pi
        return std::exp(log_gamma(a) + log_sin_pi(b) + log_gamma(1.0 - b) - std::log(kPi));
    }
    return std::exp(log_gamma(a) - log_gamma(b));
}

GammaRatioPair gamma_ratio(double nu, double tau, int order) {
    if (nu <= 0) throw std::invalid_argument("gamma_ratio: nu must be positive");
    GammaRatioPair out;
    cplx v = std::exp(log_gamma(cplx(nu, tau)) - log_gamma(cplx(nu, -tau)));
    out.exact.value = v;
    out.exact.modulus_defect = std::abs(std::abs(v) - 1.0);

    StirlingSeries series = StirlingSeries::standard(order);
    double phase = tau * (std::log(nu * nu + tau * tau) - 2.0) + (2.0 * nu - 1.0) * std::atan2(tau, nu);
    cplx correction = series.sum(cplx(nu, tau)) / series.sum(cplx(nu, -tau));
    out.asymptotic = std::polar(1.0, phase) * correction;
    return out;
}

cplx f_pm_decay(double B, int sign) {
    if (B == 0.0) throw std::invalid_argument("f_pm_decay: B must be nonzero");
    cplx r34 = gamma_ratio(0.75, B).exact.value;
    cplx r14 = gamma_ratio(0.25, B).exact.value;
    cplx i(0.0, 1.0);
    return sign > 0 ? r34 - i * r14 : r34 + i * r14;
}

cplx gk_first_factor(cplx s, int sign) {
    cplx a = gamma_quotient((2.0 + s) / 2.0, (1.0 - s) / 2.0);
    cplx b = gamma_quotient((1.0 + s) / 2.0, -s / 2.0);
    cplx i(0.0, 1.0);
    return sign > 0 ? a - i * b : a + i * b;
}

cplx gk_second_factor(int k, cplx s) {
    double kd = (double)k;
    return gamma_quotient((kd + s) / 2.0, (kd - s - 1.0) / 2.0) *
           gamma_quotient((kd + 1.0 + s) / 2.0, (kd - s) / 2.0);
}

cplx gk_factor(cplx s, int k, int sign) {
    if (k < 4 || k % 2) throw std::invalid_argument("gk_factor: k must be even and >= 4");
    return gk_first_factor(s, sign) * gk_second_factor(k, s);
}

namespace {

double bessel_series(double nu, double x) {
    // sum_k (-1)^k (x/2)^{nu+2k} / (k! Gamma(nu+k+1))
    double half = x / 2.0;
    double lead;
    if (nu < 170.0) {
        lead = std::pow(half, nu) / std::tgamma(nu + 1.0);
    } else {
        lead = std::exp(nu * std::log(half) - std::lgamma(nu + 1.0));
    }
    double term = lead, sum = lead;
    for (int k = 1; k < 400; ++k) {
        term *= -half * half / (k * (nu + k));
        sum += term;
        if (std::abs(term) < 1e-18 * (std::abs(sum) + 1e-300)) break;
    }
    return sum;
}

double bessel_integral(double nu, double x) {
    // (1/pi) int_0^pi cos(nu t - x sin t) dt  - (sin(nu pi)/pi) int_0^inf e^{-nu t - x sinh t} dt
    static const double gx[8] = {-0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
                                 -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
                                 0.7966664774136267,  0.9602898564975363};
    static const double gw[8] = {0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
                                 0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
                                 0.2223810344533745, 0.1012285362903763};
    int panels = 8 + (int)((nu + x) / 2.0);
    double acc = 0.0, hw = kPi / (2.0 * panels);
    for (int p = 0; p < panels; ++p) {
        double mid = (2 * p + 1) * hw;
        for (int g = 0; g < 8; ++g) {
            double t = mid + hw * gx[g];
            acc += gw[g] * std::cos(nu * t - x * std::sin(t));
        }
    }
    acc *= hw / kPi;

    double snu = std::sin(nu * kPi);
    if (std::abs(snu) > 1e-14) {
        double t_hi = std::asinh(60.0 / std::max(x, 1.0)) + 60.0 / std::max(nu, 1.0) + 1.0;
        int tp = 24;
        double tw = t_hi / (2.0 * tp), tail = 0.0;
        for (int p = 0; p < tp; ++p) {
            double mid = (2 * p + 1) * tw;
            for (int g = 0; g < 8; ++g) {
                double t = mid + tw * gx[g];
                tail += gw[g] * std::exp(-nu * t - x * std::sinh(t));
            }
        }
        acc -= snu / kPi * tail * tw;
    }
    return acc;
}

double bessel_hankel(double nu, double x) {
    double mu = 4.0 * nu * nu;
    double p = 1.0, q = 0.0;
    double term = 1.0;
    // The first correction can exceed 1 when nu^2/x is sizable, so optimal
    // truncation compares successive correction terms only.
    double prev = std::numeric_limits<double>::infinity();
    for (int m = 1; m < 60; ++m) {
        term *= (mu - (2.0 * m - 1.0) * (2.0 * m - 1.0)) / (m * 8.0 * x);
        if (std::abs(term) > prev) break;
        prev = std::abs(term);
        if (m % 2) {
            q += (((m - 1) / 2) % 2 ? -term : term);
        } else {
            p += ((m / 2) % 2 ? -term : term);
        }
        if (std::abs(term) < 1e-18) break;
    }
    double omega = x - nu * kPi / 2.0 - kPi / 4.0;
    return std::sqrt(2.0 / (kPi * x)) * (std::cos(omega) * p - std::sin(omega) * q);
}

}  // namespace

BesselEval bessel_j(double nu, double x) {
    if (nu < 0 || x < 0) throw std::invalid_argument("bessel_j: nu, x must be >= 0");
    BesselEval out;
    out.order = nu;
    out.argument = x;
    double switch_pt = 2.0 * nu + 20.0;
    if (x >= switch_pt) {
        out.regime = BesselRegime::asymptotic;
        out.value = bessel_hankel(nu, x);
    } else {
        out.regime = BesselRegime::series;
        out.value = (x <= 14.0) ? bessel_series(nu, x) : bessel_integral(nu, x);
    }
    return out;
}

double bessel_j_value(double nu, double x) { return bessel_j(nu, x).value; }

}  // namespace ant
