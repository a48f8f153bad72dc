#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ant/windows.hpp"

namespace ant {

using cplx = std::complex<double>;

// callable giving the j-th derivative at t (j = 0 is the value)
using DerivFn = std::function<double(int, double)>;

// weight w supported on [a,b] with scaled-derivative constant X,
// radian phase phi with derivatives up to order 4, size Y on scale Z
struct PhaseIntegral {
    DerivFn w;
    DerivFn phi;
    double X = 1, Y = 1, Z = 1;
    double a = 0, b = 0;
    double R() const { return Y / (X * X); }
};

// weight built from a window rescaled to [Z, 2Z]
DerivFn scaled_window(SmoothWindow win, double Z);

struct QuadratureFailure : std::runtime_error {
    cplx achieved;
    double est_error;
    QuadratureFailure(const std::string& what, cplx achieved, double est_error)
        : std::runtime_error(what), achieved(achieved), est_error(est_error) {}
};

struct Quadrature {
    cplx value;
    long long evals;
    double est_error;
};
// integral of w(t) e^{i phi(t)} dt over [a,b]: adaptive Gauss-Legendre with
// panels no longer than a fixed fraction of the local period 2 pi/|phi'|;
// throws QuadratureFailure if the refinement stalls above tol
Quadrature oscillatory_integral(const std::function<double(double)>& w,
                                const std::function<double(double)>& phi, double a, double b,
                                double tol, long long max_evals = 40000000);
cplx oscillatory_quadrature(const PhaseIntegral& pi_, double tol);

struct StationaryPhaseMain {
    cplx main;
    double t0;
};
// leading term w(t0) sqrt(2 pi / phi''(t0)) e^{i phi(t0) + i pi/4};
// throws std::domain_error when phi' has no sign change on [a,b]
StationaryPhaseMain stationary_phase_main(const PhaseIntegral& pi_);
double find_stationary_point(const PhaseIntegral& pi_);

// |integral of w e(phi)| * sqrt(R) / integral |w'|, for phases with
// phi'' >= R in e(.) convention; hypothesis checked by sampling
double second_derivative_bound_check(const PhaseIntegral& pi_, double R);

cplx mellin_transform(const SmoothWindow& psi, cplx s);
cplx mellin_transform_scaled(const SmoothWindow& psi, double scale, cplx s);
cplx mellin_transform_fn(const std::function<double(double)>& f, double lo, double hi, cplx s);

enum class TransformRegime { flat, below_k, transitional, above_k };
std::string regime_name(TransformRegime r);
// flat if |B| <= 3; below_k if |B| <= k/3; transitional if |B| < 3k; above_k else
TransformRegime classify_regime(double B, int k);

struct TransformParams {
    double B = 1;
    double C = 1;
    int k = 12;
    int sign = 1;
};

struct TransformDirect {
    cplx value;
    double tail_estimate;
    double t_max;
};
// contour evaluation of the double integral on Re s = -1/2, truncation
// doubled until the last octave contributes < tol/10
TransformDirect transform_I_direct(const TransformParams& p, double tol = 1e-8,
                                   double t_max_initial = 32);

struct TransformAsymptotic {
    cplx value;
    double t0 = 0;       // stationary point of the contour phase
    double phase = 0;    // radians
    TransformRegime regime;
    bool stationary = false;
    std::vector<cplx> pieces;  // transitional decomposition parts
};
TransformAsymptotic transform_I_asymptotic(const TransformParams& p);

struct CorrelationParams {
    double B1 = 1, B2 = 1, C1 = 1, C2 = 1, D = 0;
    int k = 12;
    int sign1 = 1, sign2 = 1;
    double T = 0;
    int sigma = 1;
};
struct CorrelationResult {
    cplx value;
    TransformRegime regime1, regime2;
    std::string case_label;
    bool support_condition;
    long long i_evals;
};
// J = integral of W(x) I(B1, C1/x) conj(I(B2, C2/x)) e(Dx) dx by nested
// quadrature with the inner transform cached on an x-grid
CorrelationResult correlation_J(const CorrelationParams& p, double tol = 1e-6);

}  // namespace ant
