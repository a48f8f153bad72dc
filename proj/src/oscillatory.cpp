#include "ant/oscillatory.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "ant/special_functions.hpp"

namespace ant {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Gauss-Kronrod 7-15 pair
constexpr double kKronrodX[8] = {0.991455371120813, 0.949107912342759, 0.864864423359769,
                                 0.741531185599394, 0.586087235467691, 0.405845151377397,
                                 0.207784955007898, 0.0};
constexpr double kKronrodW[8] = {0.022935322010529, 0.063092092629979, 0.104790010322250,
                                 0.140653259715525, 0.169004726639267, 0.190350578064785,
                                 0.204432940075298, 0.209482141084728};
constexpr double kGaussW[4] = {0.129484966168870, 0.279705391489277, 0.381830050505119,
                               0.417959183673469};

struct Panel {
    cplx value;
    double err;
};

template <class F>
Panel gk15(const F& f, double l, double r) {
    double c = 0.5 * (l + r), h = 0.5 * (r - l);
    cplx fk[15];
    for (int i = 0; i < 7; ++i) {
        fk[i] = f(c - h * kKronrodX[i]);
        fk[14 - i] = f(c + h * kKronrodX[i]);
    }
    fk[7] = f(c);
    cplx kron = 0.0, gauss = 0.0;
    for (int i = 0; i < 7; ++i) kron += kKronrodW[i] * (fk[i] + fk[14 - i]);
    kron += kKronrodW[7] * fk[7];
    for (int i = 0; i < 3; ++i) gauss += kGaussW[i] * (fk[2 * i + 1] + fk[13 - 2 * i]);
    gauss += kGaussW[3] * fk[7];
    return {kron * h, std::abs(kron - gauss) * h};
}

struct AdaptiveResult {
    cplx value;
    double err;
    long long evals;
};

template <class F>
AdaptiveResult adaptive_complex(const F& f, double a, double b, double tol, double max_width,
                                long long max_evals) {
    if (a >= b) return {0.0, 0.0, 0};
    std::vector<std::pair<double, double>> work{{a, b}};
    cplx acc = 0.0;
    double err = 0.0;
    long long evals = 0;
    double min_width = (b - a) * 0x1p-46;
    while (!work.empty()) {
        auto [l, r] = work.back();
        work.pop_back();
        double w = r - l;
        if (w > max_width) {
            double m = 0.5 * (l + r);
            work.push_back({l, m});
            work.push_back({m, r});
            continue;
        }
        Panel p = gk15(f, l, r);
        evals += 15;
        if (evals > max_evals) throw QuadratureFailure("quadrature budget exhausted", acc, err + p.err);
        if (p.err <= tol * w / (b - a) || w <= min_width) {
            acc += p.value;
            err += p.err;
        } else {
            double m = 0.5 * (l + r);
            work.push_back({l, m});
            work.push_back({m, r});
        }
    }
    return {acc, err, evals};
}

double fd_slope(const std::function<double(double)>& phi, double x, double h) {
    return (phi(x + h) - phi(x - h)) / (2.0 * h);
}

std::array<cplx, 5> fd_jet4(const std::function<cplx(double)>& f, double x, double h) {
    cplx fm2 = f(x - 2 * h), fm1 = f(x - h), f0 = f(x), fp1 = f(x + h), fp2 = f(x + 2 * h);
    cplx d1 = (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h);
    cplx d2 = (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) / (12.0 * h * h);
    cplx d3 = (-fm2 + 2.0 * fm1 - 2.0 * fp1 + fp2) / (2.0 * h * h * h);
    cplx d4 = (fm2 - 4.0 * fm1 + 6.0 * f0 - 4.0 * fp1 + fp2) / (h * h * h * h);
    return {f0, d1, d2 / 2.0, d3 / 6.0, d4 / 24.0};
}

struct SaddleOut {
    cplx value;       // integral with the e^{i psi(t0)} factor removed
    double corr;      // relative size of the correction terms
};

// int h(t0+v) e^{i(psi(t0+v)-psi(t0))} dv from Taylor data; h[j], psi[j] are
// coefficients of v^j, psi[0] = psi[1] = 0
SaddleOut saddle_series(const std::array<cplx, 7>& h, const std::array<double, 7>& psi) {
    double a = psi[2];
    double sg = a >= 0 ? 1.0 : -1.0;
    double aa = std::abs(a);
    std::array<cplx, 13> poly{};
    for (int j = 0; j <= 6; ++j) poly[j] = h[j];
    std::array<cplx, 13> tail{};
    for (int m = 3; m <= 6; ++m) tail[m] = cplx(0.0, 1.0) * psi[m];
    std::array<cplx, 13> acc = poly, powt{};
    powt[0] = 1.0;
    double fact = 1.0;
    for (int j = 1; j <= 3; ++j) {
        std::array<cplx, 13> nxt{};
        for (int p = 0; p <= 12; ++p)
            for (int q = 3; q + p <= 12 && q <= 6; ++q) nxt[p + q] += powt[p] * tail[q];
        powt = nxt;
        fact *= j;
        std::array<cplx, 13> term{};
        for (int p = 0; p <= 12; ++p)
            for (int q = 0; q + p <= 12 && q <= 6; ++q) term[p + q] += powt[p] * poly[q];
        for (int p = 0; p <= 12; ++p) acc[p] += term[p] / fact;
    }
    static const double gamma_half[5] = {1.7724538509055160273, 0.8862269254527580136,
                                         1.3293403881791370204, 3.3233509704478425511,
                                         11.631728396567448929};
    cplx rot = std::exp(cplx(0.0, sg * kPi / 4.0));
    cplx isg(0.0, sg);
    cplx total = 0.0, head = 0.0, ipow = 1.0;
    double apow = std::sqrt(aa);
    for (int m = 0; m <= 4; ++m) {
        cplx moment = gamma_half[m] / apow * rot * ipow;
        total += acc[2 * m] * moment;
        if (m == 0) head = acc[0] * moment;
        ipow *= isg;
        apow *= aa;
    }
    double corr = std::abs(head) > 0 ? std::abs(total - head) / std::abs(head) : 1e9;
    return {total, corr};
}

}  // namespace

DerivFn scaled_window(SmoothWindow win, double Z) {
    return [win, Z](int j, double t) { return win.derivative(j, t / Z) / std::pow(Z, j); };
}

Quadrature oscillatory_integral(const std::function<double(double)>& w,
                                const std::function<double(double)>& phi, double a, double b,
                                double tol, long long max_evals) {
    if (a >= b) return {0.0, 0, 0.0};
    long long evals = 0;
    double slope = 0.0;
    double hp = std::max((b - a) * 1e-4, 1e-12);
    for (int i = 0; i <= 32; ++i) {
        double x = a + hp + (b - a - 2 * hp) * i / 32.0;
        slope = std::max(slope, std::abs(fd_slope(phi, x, hp)));
        evals += 2;
    }
    double width0 = std::min(b - a, (kPi / 2.0) / std::max(slope, 1e-12));
    int panels = (int)std::ceil((b - a) / width0);
    std::vector<std::pair<double, double>> work;
    work.reserve(panels);
    for (int p = panels - 1; p >= 0; --p)
        work.push_back({a + (b - a) * p / panels, a + (b - a) * (p + 1) / panels});
    cplx acc = 0.0;
    double err = 0.0;
    double min_width = (b - a) * 0x1p-46;
    auto f = [&](double t) { return w(t) * std::exp(cplx(0.0, phi(t))); };
    while (!work.empty()) {
        auto [l, r] = work.back();
        work.pop_back();
        double wd = r - l;
        Panel p = gk15(f, l, r);
        evals += 30;
        if (evals > max_evals)
            throw QuadratureFailure("oscillatory integral budget exhausted", acc, err + p.err);
        if (p.err <= tol * wd / (b - a) || wd <= min_width) {
            acc += p.value;
            err += p.err;
        } else {
            double m = 0.5 * (l + r);
            work.push_back({l, m});
            work.push_back({m, r});
        }
    }
    if (err > 4.0 * tol) throw QuadratureFailure("oscillatory integral did not converge", acc, err);
    return {acc, evals, err};
}

cplx oscillatory_quadrature(const PhaseIntegral& pi_, double tol) {
    return oscillatory_integral([&](double t) { return pi_.w(0, t); },
                                [&](double t) { return pi_.phi(0, t); }, pi_.a, pi_.b, tol)
        .value;
}

double find_stationary_point(const PhaseIntegral& pi_) {
    const int n = 512;
    double prev_t = pi_.a, prev_v = pi_.phi(1, pi_.a);
    for (int i = 1; i <= n; ++i) {
        double t = pi_.a + (pi_.b - pi_.a) * i / n;
        double v = pi_.phi(1, t);
        if (prev_v == 0.0) return prev_t;
        if ((prev_v < 0) != (v < 0)) {
            double lo = prev_t, hi = t, flo = prev_v;
            for (int it = 0; it < 100; ++it) {
                double mid = 0.5 * (lo + hi), fm = pi_.phi(1, mid);
                if ((fm < 0) == (flo < 0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            return 0.5 * (lo + hi);
        }
        prev_t = t;
        prev_v = v;
    }
    throw std::domain_error("no stationary point: phase derivative has no sign change");
}

StationaryPhaseMain stationary_phase_main(const PhaseIntegral& pi_) {
    double t0 = find_stationary_point(pi_);
    double dd = pi_.phi(2, t0);
    if (dd == 0.0) throw std::domain_error("degenerate stationary point");
    double sg = dd > 0 ? 1.0 : -1.0;
    cplx main = pi_.w(0, t0) * std::sqrt(2.0 * kPi / std::abs(dd)) *
                std::exp(cplx(0.0, pi_.phi(0, t0) + sg * kPi / 4.0));
    return {main, t0};
}

double second_derivative_bound_check(const PhaseIntegral& pi_, double R) {
    const int n = 256;
    for (int i = 0; i <= n; ++i) {
        double t = pi_.a + (pi_.b - pi_.a) * i / n;
        if (pi_.phi(2, t) < 2.0 * kPi * R * (1.0 - 1e-9))
            throw std::invalid_argument("second derivative bound hypothesis fails");
    }
    cplx num = oscillatory_quadrature(pi_, 1e-10);
    auto wabs = adaptive_complex([&](double t) { return cplx(std::abs(pi_.w(1, t)), 0.0); }, pi_.a,
                                 pi_.b, 1e-10, (pi_.b - pi_.a) / 8.0, 4000000);
    return std::abs(num) * std::sqrt(R) / wabs.value.real();
}

cplx mellin_transform_fn(const std::function<double(double)>& f, double lo, double hi, cplx s) {
    if (lo <= 0.0) throw std::invalid_argument("mellin transform needs support in (0, inf)");
    double ulo = std::log(lo), uhi = std::log(hi);
    double amp = std::max(std::exp(s.real() * ulo), std::exp(s.real() * uhi));
    auto g = [&](double u) { return f(std::exp(u)) * std::exp(s * u); };
    double max_w = 2.0 * kPi / (4.0 * (1.0 + std::abs(s.imag())));
    return adaptive_complex(g, ulo, uhi, 1e-11 * amp * (uhi - ulo), max_w, 40000000).value;
}

cplx mellin_transform(const SmoothWindow& psi, cplx s) {
    return mellin_transform_fn([&](double y) { return psi.evaluate(y); }, psi.support_lo(),
                               psi.support_hi(), s);
}

cplx mellin_transform_scaled(const SmoothWindow& psi, double scale, cplx s) {
    return std::pow(cplx(scale, 0.0), s) * mellin_transform(psi, s);
}

std::string regime_name(TransformRegime r) {
    switch (r) {
        case TransformRegime::flat: return "flat";
        case TransformRegime::below_k: return "below_k";
        case TransformRegime::transitional: return "transitional";
        case TransformRegime::above_k: return "above_k";
    }
    return "?";
}

TransformRegime classify_regime(double B, int k) {
    double ab = std::abs(B);
    if (ab <= 3.0) return TransformRegime::flat;
    if (ab <= k / 3.0) return TransformRegime::below_k;
    if (ab < 3.0 * k) return TransformRegime::transitional;
    return TransformRegime::above_k;
}

namespace {

const SmoothWindow kInertV{WindowKind::inert_V};

// y-integral of V(y) y^{-1/2} e(B sqrt(y)) y^{-it} on the critical line
cplx y_integral_exact(double B, double t, double tol) {
    return oscillatory_integral(
               [&](double y) { return kInertV.evaluate(y) / std::sqrt(y); },
               [&](double y) { return 2.0 * kPi * B * std::sqrt(y) - t * std::log(y); }, 1.0, 2.0,
               tol, 4000000)
        .value;
}

// fixed composite rule for the same y-integral in v = log y: the t-free part
// V(e^v) e^{v/2} e(B e^{v/2}) is sampled once, each A(t) costs one pass of
// center/offset exponentials
struct YPlan {
    std::array<double, 15> off;
    std::vector<double> centers;
    std::vector<cplx> pnode;

    static YPlan build(double B, double t_cap) {
        YPlan plan;
        double vhi = std::log(2.0);
        int panels = std::max(
            24, (int)std::ceil(vhi * (kPi * std::abs(B) * 1.5 + std::abs(t_cap) + 8.0) / 4.0));
        double h2 = 0.5 * vhi / panels;
        for (int i = 0; i < 7; ++i) {
            plan.off[i] = -h2 * kKronrodX[i];
            plan.off[14 - i] = h2 * kKronrodX[i];
        }
        plan.off[7] = 0.0;
        plan.centers.resize(panels);
        plan.pnode.resize(15 * panels);
        for (int p = 0; p < panels; ++p) {
            double c = (2 * p + 1) * h2;
            plan.centers[p] = c;
            for (int i = 0; i < 15; ++i) {
                double v = c + plan.off[i];
                double wgt = kKronrodW[i < 8 ? i : 14 - i] * h2;
                double y = std::exp(v);
                plan.pnode[15 * p + i] = wgt * kInertV.evaluate(y) * std::exp(0.5 * v) *
                                         std::exp(cplx(0.0, 2.0 * kPi * B * std::sqrt(y)));
            }
        }
        return plan;
    }

    cplx eval(double t) const {
        cplx eo[15];
        for (int i = 0; i < 15; ++i) eo[i] = std::exp(cplx(0.0, -t * off[i]));
        cplx acc = 0.0;
        for (size_t p = 0; p < centers.size(); ++p) {
            cplx inner = 0.0;
            for (int i = 0; i < 15; ++i) inner += pnode[15 * p + i] * eo[i];
            acc += inner * std::exp(cplx(0.0, -t * centers[p]));
        }
        return acc;
    }
};

// saddle-point model of the y-integral at y0 = t^2/(pi B)^2, with series
// corrections from analytic jets; falls back to quadrature where the
// expansion degrades (window ramps at desk-scale B)
cplx y_integral_saddle(double B, double t, bool allow_fallback, double fallback_tol,
                       bool* fell_back = nullptr) {
    if (t * B <= 0.0) return 0.0;
    double y0 = t * t / (kPi * kPi * B * B);
    if (y0 <= kInertV.support_lo() || y0 >= kInertV.support_hi()) return 0.0;
    auto vjet = window_value(WindowKind::inert_V, Jet<6>::variable(y0));
    auto ujet = vjet * jet_pow(Jet<6>::variable(y0), -0.5);
    std::array<cplx, 7> h{};
    for (int j = 0; j <= 6; ++j) h[j] = ujet.c[j];
    std::array<double, 7> psi{};
    double cj = 0.5, yp = std::pow(y0, -0.5), fact = 1.0;
    for (int j = 2; j <= 6; ++j) {
        cj *= 0.5 - (j - 1);
        yp /= y0;
        fact *= j;
        double dsqrt = cj * yp;
        double dlog = (j % 2 == 0 ? -1.0 : 1.0) * fact / j / std::pow(y0, j);
        psi[j] = (2.0 * kPi * B * dsqrt - t * dlog) / fact;
    }
    SaddleOut out = saddle_series(h, psi);
    if (out.corr > 0.12 && allow_fallback) {
        if (fell_back) *fell_back = true;
        return y_integral_exact(B, t, fallback_tol);
    }
    double phase0 = 2.0 * kPi * B * std::sqrt(y0) - t * std::log(y0);
    return std::exp(cplx(0.0, phase0)) * out.value;
}

double contour_panel_width(double C, int k, double B, double thi) {
    double scale = std::abs(std::log(C / (kPi * kPi * kPi))) +
                   2.0 * std::log(0.5 * (k + thi) + 2.0) +
                   2.0 * std::abs(std::log(kPi * std::exp(1.0) * std::max(std::abs(B), 0.5) /
                                           std::max(thi, 1.0))) +
                   4.0;
    return 2.0 * kPi / scale;
}

// total model phase of the outer integrand for B > 0, minus sign, in t = Im s
double contour_model_phase(double t, double b, double C, int k) {
    return t * std::log(C * b * b * (k * k + t * t) / (8.0 * kPi * std::exp(1.0) * t)) +
           2.0 * k * std::atan(t / k) + kPi / 4.0;
}

}  // namespace

TransformDirect transform_I_direct(const TransformParams& p, double tol, double t_max_initial) {
    if (p.C <= 0.0) throw std::invalid_argument("transform I needs C > 0");
    if (p.k < 2 || p.k % 2 != 0) throw std::invalid_argument("transform I needs even k >= 2");
    double L = std::log(p.C / (kPi * kPi * kPi));
    YPlan plan = YPlan::build(p.B, t_max_initial);
    auto f = [&](double t) {
        return std::exp(cplx(0.0, t * L)) * gk_factor(cplx(-0.5, t), p.k, p.sign) * plan.eval(t);
    };
    double pref_mag = std::sqrt(kPi * kPi * kPi / p.C) / (2.0 * kPi);
    double seg_tol = tol / (8.0 * pref_mag);
    double T = t_max_initial;
    cplx acc = adaptive_complex(f, -T, T, seg_tol, contour_panel_width(p.C, p.k, p.B, T), 40000000)
                   .value;
    double tail = tol;
    double prev_ext = std::numeric_limits<double>::infinity();
    // octaves below the stationary window (and, for small B, below the
    // contour saddle) are tiny yet growing, so the stall heuristic is only
    // trusted once T has passed both scales
    double t_guard = 1.5 * kPi * std::abs(p.B) * std::sqrt(kInertV.support_hi());
    if (std::abs(p.B) < 3.0)
        t_guard = std::max(t_guard,
                           2.0 * std::exp(1.0) * std::cbrt(kPi * kPi * kPi / p.C));
    while (T < 16384.0) {
        plan = YPlan::build(p.B, 2.0 * T);
        double w = contour_panel_width(p.C, p.k, p.B, 2.0 * T);
        cplx ext = adaptive_complex(f, T, 2.0 * T, seg_tol, w, 40000000).value +
                   adaptive_complex(f, -2.0 * T, -T, seg_tol, w, 40000000).value;
        acc += ext;
        T *= 2.0;
        tail = std::abs(ext) * pref_mag;
        if (tail < tol / 10.0) break;
        // octaves past the window tail shrink by large factors; a stalled
        // ratio once the tail is already small means the rounding floor, not
        // real mass (near the contour saddle octaves legitimately grow)
        if (T >= t_guard && std::abs(ext) > 0.3 * prev_ext && tail < 1e3 * tol) break;
        prev_ext = std::abs(ext);
    }
    return {pref_mag * acc, tail, T};
}

TransformAsymptotic transform_I_asymptotic(const TransformParams& p) {
    TransformAsymptotic res;
    res.regime = classify_regime(p.B, p.k);
    if (res.regime == TransformRegime::flat) {
        // the flat main term carries an indicator that C exceeds the k^{-2}
        // scale; below that the model value is negligible and reported as zero
        if (p.C * (double)p.k * (double)p.k <= 0.1) {
            res.value = 0.0;
            res.phase = 0.0;
            return res;
        }
        res.value = transform_I_direct(p, 1e-8).value;
        res.phase = std::arg(res.value);
        return res;
    }
    double b = std::abs(p.B);
    double C = p.C;
    int k = p.k;
    bool resonant = (p.sign == -1) == (p.B > 0);
    if (!resonant) {
        res.value = 0.0;
        return res;
    }
    double Z = C * b * b * k / (4.0 * kPi);
    double root = Z <= 1.0 ? std::sqrt(1.0 - Z * Z) : 0.0;
    int branch = 1;
    if (Z <= 1.0) {
        double tlo = (4.0 * kPi / (C * b * b)) * (1.0 - root);
        double thi = (4.0 * kPi / (C * b * b)) * (1.0 + root);
        double vlo = kInertV.evaluate(tlo * tlo / (kPi * kPi * b * b));
        double vhi = kInertV.evaluate(thi * thi / (kPi * kPi * b * b));
        branch = vhi >= vlo ? 1 : -1;
    }
    double t0_old = Z <= 1.0 ? (4.0 * kPi / (C * b * b)) * (1.0 + branch * root) : 0.0;
    double sgn_pm = p.sign == 1 ? 1.0 : -1.0;
    if (Z <= 1.0) {
        res.t0 = t0_old / b;
        double X = (2.0 / (b * b * C)) * (1.0 + branch * root);
        double Y = (k / kPi) * std::atan((4.0 * kPi / (b * b * C * k)) * (1.0 + branch * root));
        res.phase = 2.0 * kPi * sgn_pm * (X - Y);
    }
    double pref_mag = std::sqrt(kPi * kPi * kPi / C) / (2.0 * kPi);
    double L = std::log(C / (kPi * kPi * kPi));
    auto outer = [&](double t) {
        return pref_mag * std::exp(cplx(0.0, t * L)) * gk_factor(cplx(-0.5, t), k, -1) *
               y_integral_saddle(b, t, true, 1e-9);
    };
    auto model_phase = [&](double t) { return contour_model_phase(t, b, C, k); };
    cplx value_minus = 0.0;
    bool closed = false;
    if ((res.regime == TransformRegime::below_k || res.regime == TransformRegime::above_k) &&
        Z <= 0.95 && t0_old > 0.0) {
        double y0 = t0_old * t0_old / (kPi * kPi * b * b);
        double span = kPi * b * (std::sqrt(kInertV.support_hi()) - std::sqrt(kInertV.support_lo()));
        double kk0 = (double)k * k + t0_old * t0_old;
        double curv = std::abs(2.0 * t0_old / kk0 - 1.0 / t0_old);
        // the center jets cannot see the window edges, so the closed form is
        // only trusted when the saddle gaussian fits well inside the window
        bool narrow = 3.0 / std::sqrt(std::max(curv, 1e-300)) <= 0.4 * span;
        if (narrow && kInertV.evaluate(y0) > 0.02) {
            double t = t0_old;
            double kk = (double)k * k + t * t;
            double dd2 = 2.0 * t / kk - 1.0 / t;
            double dd3 = 2.0 * (k * (double)k - t * t) / (kk * kk) + 1.0 / (t * t);
            double dd4 = -4.0 * t / (kk * kk) - 8.0 * t * (k * (double)k - t * t) / (kk * kk * kk) -
                         2.0 / (t * t * t);
            auto hamp = [&](double tt) {
                return outer(tt) * std::exp(cplx(0.0, -model_phase(tt)));
            };
            double step = std::clamp(0.35 / std::sqrt(std::abs(dd2)), 1e-2, 0.2 * kPi * b / 4.0);
            auto hj = fd_jet4(hamp, t0_old, step);
            std::array<cplx, 7> h{};
            for (int j = 0; j <= 4; ++j) h[j] = hj[j];
            std::array<double, 7> psi{};
            psi[2] = dd2 / 2.0;
            psi[3] = dd3 / 6.0;
            psi[4] = dd4 / 24.0;
            SaddleOut out = saddle_series(h, psi);
            if (out.corr <= 0.2) {
                value_minus = std::exp(cplx(0.0, model_phase(t0_old))) * out.value;
                closed = true;
                res.stationary = true;
            }
        }
    }
    if (!closed) {
        double tlo = kPi * b * std::sqrt(kInertV.support_lo());
        double thi = kPi * b * std::sqrt(kInertV.support_hi());
        double slope = std::max({std::abs(model_phase(tlo + 1e-4) - model_phase(tlo)) * 1e4,
                                 std::abs(model_phase(thi) - model_phase(thi - 1e-4)) * 1e4,
                                 std::abs(model_phase(0.5 * (tlo + thi) + 5e-5) -
                                          model_phase(0.5 * (tlo + thi) - 5e-5)) *
                                     1e4});
        double max_w = 2.0 * kPi / (4.0 * (slope + 1.0));
        if (res.regime == TransformRegime::transitional) {
            double w = std::cbrt((double)k);
            double cuts[2] = {std::clamp((double)k - w, tlo, thi),
                              std::clamp((double)k + w, tlo, thi)};
            double edges[4] = {tlo, cuts[0], cuts[1], thi};
            for (int s = 0; s < 3; ++s) {
                cplx piece =
                    adaptive_complex(outer, edges[s], edges[s + 1], 1e-9, max_w, 40000000).value;
                res.pieces.push_back(p.sign == 1 ? std::conj(piece) : piece);
                value_minus += piece;
            }
        } else {
            value_minus = adaptive_complex(outer, tlo, thi, 1e-9, max_w, 40000000).value;
        }
        res.stationary = Z <= 1.0 && t0_old > 0.0 &&
                         kInertV.evaluate(t0_old * t0_old / (kPi * kPi * b * b)) > 0.02;
    }
    res.value = p.sign == 1 ? std::conj(value_minus) : value_minus;
    return res;
}

CorrelationResult correlation_J(const CorrelationParams& p, double tol) {
    CorrelationResult res;
    res.regime1 = classify_regime(p.B1, p.k);
    res.regime2 = classify_regime(p.B2, p.k);
    res.i_evals = 0;
    double scale1 = p.B1 * p.B1 * p.C1, scale2 = p.B2 * p.B2 * p.C2;
    double sep = p.k * (double)p.k * std::abs(scale1 - scale2);
    double d_eff = p.D;
    if (res.regime1 == TransformRegime::flat) {
        res.case_label = "flat";
        res.support_condition = p.C1 >= 0.5 / (p.k * (double)p.k) &&
                                p.C2 >= 0.5 / (p.k * (double)p.k) && std::abs(p.D) <= 10.0;
    } else if (p.T > 0.0) {
        res.case_label = "transitional_sigmaT";
        double cl = 0.1 / (p.k * (double)p.k * p.k), ch = 10.0 / (p.k * (double)p.k * p.k);
        res.support_condition = p.C1 >= cl && p.C1 <= ch && p.C2 >= cl && p.C2 <= ch;
    } else {
        bool coherent = sep <= 5.0;
        bool above = res.regime1 == TransformRegime::above_k;
        if (above) d_eff = p.D + 4.0 * (p.sign1 == 1 ? 1.0 : -1.0) * (1.0 / scale1 - 1.0 / scale2);
        res.case_label = std::string(above ? "above_k" : "below_k") +
                         (coherent ? "_coherent" : "_offset");
        bool args_ok;
        if (above) {
            double g1 = 4.0 * kPi / (std::abs(p.B1 * p.B1 * p.B1) * p.C1);
            double g2 = 4.0 * kPi / (std::abs(p.B2 * p.B2 * p.B2) * p.C2);
            args_ok = g1 > 0.3 && g1 < 3.0 && g2 > 0.3 && g2 < 3.0;
        } else {
            double a1 = std::abs(p.B1) * p.C1 * p.k * p.k / (8.0 * kPi);
            double a2 = std::abs(p.B2) * p.C2 * p.k * p.k / (8.0 * kPi);
            args_ok = a1 > 0.3 && a1 < 3.0 && a2 > 0.3 && a2 < 3.0;
        }
        res.support_condition =
            args_ok && (coherent ? std::abs(d_eff) <= 10.0
                                 : std::abs(d_eff) >= 0.1 * sep && std::abs(d_eff) <= 10.0 * sep);
    }

    SmoothWindow W{WindowKind::inert_V};
    double tol_I = 1e-6 / std::sqrt(std::min(p.C1, p.C2) / 2.0);
    auto inner = [&](double B, double C, int sign) -> cplx {
        ++res.i_evals;
        TransformParams q{B, C, p.k, sign};
        if (p.T <= 0.0) return transform_I_direct(q, tol_I).value;
        double b = std::abs(B);
        double pref_mag = std::sqrt(kPi * kPi * kPi / C) / (2.0 * kPi);
        double L = std::log(C / (kPi * kPi * kPi));
        auto piece = [&](double t) -> cplx {
            double u = p.sigma * (t - p.k) * p.T / b;
            double win = window_value(WindowKind::annulus_W, u);
            if (u <= 0.0 || win == 0.0) return 0.0;
            return win * pref_mag * std::exp(cplx(0.0, t * L)) *
                   gk_factor(cplx(-0.5, t), p.k, -1) * y_integral_saddle(b, t, true, 1e-9);
        };
        double tlo = kPi * b, thi = kPi * b * std::sqrt(2.0);
        cplx v = adaptive_complex(piece, tlo, thi, 1e-9, 0.25, 40000000).value;
        bool flip = (sign == 1);
        return flip ? std::conj(v) : v;
    };

    int N = 17;
    const int N_cap = 129;
    std::vector<double> xs;
    std::vector<cplx> g;
    double abs_tol = tol / std::sqrt(p.C1 * p.C2);
    while (true) {
        xs.resize(N);
        g.assign(N, 0.0);
        for (int j = 0; j < N; ++j) {
            xs[j] = 1.5 + 0.5 * std::cos(kPi * j / (N - 1));
            g[j] = inner(p.B1, p.C1 / xs[j], p.sign1) * std::conj(inner(p.B2, p.C2 / xs[j], p.sign2));
        }
        auto interp = [&](double x) -> cplx {
            cplx num = 0.0;
            double den = 0.0;
            for (int j = 0; j < N; ++j) {
                double wj = (j == 0 || j == N - 1) ? 0.5 : 1.0;
                if (j % 2 == 1) wj = -wj;
                double d = x - xs[j];
                if (std::abs(d) < 1e-14) return g[j];
                num += g[j] * (wj / d);
                den += wj / d;
            }
            return num / den;
        };
        double worst = 0.0;
        for (int m = 0; m < 8; ++m) {
            double x = 1.0 + (m + 0.5) / 8.0;
            cplx exact = inner(p.B1, p.C1 / x, p.sign1) * std::conj(inner(p.B2, p.C2 / x, p.sign2));
            worst = std::max(worst, std::abs(exact - interp(x)));
        }
        if (worst <= abs_tol * 0.5 || N >= N_cap) {
            if (worst > abs_tol * 0.5 && N >= N_cap)
                throw std::length_error("correlation grid budget exceeded");
            double dphase = 0.0;
            for (int j = 1; j < N; ++j) {
                double d = std::abs(std::arg(g[j] / (std::abs(g[j - 1]) > 0 ? g[j - 1] : 1.0)));
                dphase = std::max(dphase, d / std::abs(xs[j] - xs[j - 1]));
            }
            double max_w = 2.0 * kPi / (4.0 * (2.0 * kPi * std::abs(p.D) + dphase + 1.0));
            auto f = [&](double x) {
                return W.evaluate(x) * interp(x) * std::exp(cplx(0.0, 2.0 * kPi * p.D * x));
            };
            res.value = adaptive_complex(f, 1.0, 2.0, abs_tol, max_w, 40000000).value;
            break;
        }
        N = 2 * N - 1;
    }
    return res;
}

}  // namespace ant
