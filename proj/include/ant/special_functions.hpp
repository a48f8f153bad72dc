#pragma once

#include <complex>
#include <vector>

namespace ant {

using cplx = std::complex<double>;

// Coefficients gamma_n of the asymptotic series
//   Gamma(z) ~ sqrt(2 pi) z^{z-1/2} e^{-z} sum_n (-1)^n gamma_n / z^n.
struct StirlingSeries {
    std::vector<double> gamma_n;
    int order;

    static StirlingSeries standard(int order);
    cplx sum(cplx z) const;
};

// log Gamma(z): reflection for Re z < 1/2, upward recursion into Re z >= 10,
// then the order-12 series. Throws std::domain_error within 1e-8 of a pole.
cplx log_gamma(cplx z);
cplx gamma_fn(cplx z);

// log sin(pi z), stable for large |Im z|
cplx log_sin_pi(cplx z);

struct GammaRatioResult {
    cplx value;
    double modulus_defect;
};
struct GammaRatioPair {
    GammaRatioResult exact;
    cplx asymptotic;
};
// Gamma(nu + i tau) / Gamma(nu - i tau): exact branch via log_gamma,
// asymptotic branch from the unitary main term with the order-N correction.
GammaRatioPair gamma_ratio(double nu, double tau, int order = 6);

// Gamma(a)/Gamma(b), finite (zero) when b sits on a pole
cplx gamma_quotient(cplx a, cplx b);

// F^{+-}(B) = Gamma(3/4+iB)/Gamma(3/4-iB) -+ i Gamma(1/4+iB)/Gamma(1/4-iB);
// rapidly decaying when the sign matches sgn(B), of modulus ~2 otherwise.
cplx f_pm_decay(double B, int sign);

// G_k^{+-}(s) = gk_first_factor(s, sign) * gk_second_factor(k, s)
cplx gk_first_factor(cplx s, int sign);
cplx gk_second_factor(int k, cplx s);
cplx gk_factor(cplx s, int k, int sign);

enum class BesselRegime { series, asymptotic };
struct BesselEval {
    double order;
    double argument;
    double value;
    BesselRegime regime;
};
// J_nu(x), nu >= 0, x >= 0: power series / integral representation below the
// switch point 2 nu + 20, Hankel asymptotics above it.
BesselEval bessel_j(double nu, double x);
double bessel_j_value(double nu, double x);

}  // namespace ant
