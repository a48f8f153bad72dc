#include "ant/voronoi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "ant/oscillatory.hpp"
#include "ant/special_functions.hpp"

namespace ant {

namespace {

constexpr double kPi = 3.14159265358979323846;

cplx unit_phase(double x) { return std::exp(cplx(0.0, 2.0 * kPi * x)); }

long long reduce_mod(long long a, long long m) { return ((a % m) + m) % m; }

long long inverse_mod(long long a, long long m) {
    if (m == 1) return 0;
    long long r = ((a % m) + m) % m;
    return mod_inv(r, m);
}

// Gauss-Kronrod 7-15 nodes reused for the contour panels
constexpr double kKx[15] = {-0.991455371120813, -0.949107912342759, -0.864864423359769,
                            -0.741531185599394, -0.586087235467691, -0.405845151377397,
                            -0.207784955007898, 0.0,
                            0.207784955007898,  0.405845151377397,  0.586087235467691,
                            0.741531185599394,  0.864864423359769,  0.949107912342759,
                            0.991455371120813};
constexpr double kKw[15] = {0.022935322010529, 0.063092092629979, 0.104790010322250,
                            0.140653259715525, 0.169004726639267, 0.190350578064785,
                            0.204432940075298, 0.209482141084728, 0.204432940075298,
                            0.190350578064785, 0.169004726639267, 0.140653259715525,
                            0.104790010322250, 0.063092092629979, 0.022935322010529};

// psitilde(-s) for psi(y) = win(y/scale) along a fixed vertical line
// Re s = sigma: the window is sampled once on uniform panels in v = log y,
// then each height t costs one rotation per panel plus 15 shared node phases.
struct MellinLinePlan {
    double vlo = 0.0, step = 0.0, half = 0.0;
    int panels = 0;
    std::vector<std::array<double, 15>> g;

    // holds psitilde_neg values for |t| up to t_cap
    static MellinLinePlan build(const SmoothWindow& win, double scale, double sigma,
                                double t_cap) {
        MellinLinePlan plan;
        double vlo = std::log(win.support_lo() * scale);
        double vhi = std::log(win.support_hi() * scale);
        plan.vlo = vlo;
        plan.panels = std::max(8, (int)std::ceil((vhi - vlo) * 2.0 * t_cap / kPi));
        plan.step = (vhi - vlo) / plan.panels;
        plan.half = 0.5 * plan.step;
        plan.g.resize(plan.panels);
        for (int p = 0; p < plan.panels; ++p) {
            double c = vlo + (p + 0.5) * plan.step;
            for (int i = 0; i < 15; ++i) {
                double v = c + plan.half * kKx[i];
                plan.g[p][i] =
                    kKw[i] * win.evaluate(std::exp(v) / scale) * std::exp(-sigma * v) * plan.half;
            }
        }
        return plan;
    }

    // integral psi(e^v) e^{-(sigma + it) v} dv = psitilde(-sigma - it)
    cplx eval(double t) const {
        cplx eoff[15];
        for (int i = 0; i < 15; ++i) eoff[i] = std::exp(cplx(0.0, -t * half * kKx[i]));
        cplx ec = std::exp(cplx(0.0, -t * (vlo + 0.5 * step)));
        cplx rot = std::exp(cplx(0.0, -t * step));
        cplx acc = 0.0;
        for (int p = 0; p < panels; ++p) {
            cplx inner = 0.0;
            for (int i = 0; i < 15; ++i) inner += g[p][i] * eoff[i];
            acc += inner * ec;
            ec *= rot;
        }
        return acc;
    }
};

}  // namespace

PsiKernel PsiKernel::build(const SmoothWindow& psi, double scale, int k, int sign, double sigma,
                           double tol) {
    PsiKernel ker;
    ker.k = k;
    ker.sign = sign;
    ker.sigma = sigma;
    double pref = 1.0 / (4.0 * std::pow(kPi, 2.5));
    double floor = tol * 1e-4;
    const double block = 16.0;
    MellinLinePlan plan = MellinLinePlan::build(psi, scale, sigma, 2032.0);
    double T = 0.0;
    int quiet = 0;
    while (T < 2000.0) {
        double t_hi = T + block;
        double slope = std::abs(std::log(kPi * kPi * kPi)) + 14.0 + std::log(2.0 * scale + 1.0) +
                       std::abs(std::log(t_hi * (k * (double)k + t_hi * t_hi) / 8e3 + 0.05)) + 2.0;
        double width = 2.0 * kPi / (4.0 * slope);
        int panels = (int)std::ceil(block / width);
        double wp = block / panels;
        double block_max = 0.0;
        for (int p = 0; p < panels; ++p) {
            for (int side = 0; side < 2; ++side) {
                double c = side == 0 ? T + (p + 0.5) * wp : -(T + (p + 0.5) * wp);
                for (int i = 0; i < 15; ++i) {
                    double t = c + 0.5 * wp * kKx[i];
                    cplx s(sigma, t);
                    cplx gv = gk_factor(s, k, sign);
                    cplx pt = plan.eval(t);
                    block_max = std::max(block_max, std::abs(gv * pt));
                    ker.t_nodes.push_back(t);
                    ker.weights.push_back(kKw[i] * 0.5 * wp * gv * pt * pref);
                }
            }
        }
        T = t_hi;
        quiet = block_max < floor ? quiet + 1 : 0;
        if (quiet >= 2) break;
    }
    if (quiet < 2) throw std::runtime_error("psi kernel contour tail did not decay by t = 2000");
    ker.t_max = T;
    return ker;
}

cplx PsiKernel::operator()(double x) const {
    if (x <= 0.0) throw std::invalid_argument("psi transform needs x > 0");
    double L = std::log(kPi * kPi * kPi * x);
    cplx acc = 0.0;
    size_t groups = t_nodes.size() / 15;
    double off_prev[15];
    cplx eoff[15];
    bool have = false;
    for (size_t g = 0; g < groups; ++g) {
        double center = t_nodes[15 * g + 7];
        bool same = have;
        for (int i = 0; same && i < 15; ++i)
            if (std::abs((t_nodes[15 * g + i] - center) - off_prev[i]) > 1e-12) same = false;
        if (!same) {
            for (int i = 0; i < 15; ++i) {
                off_prev[i] = t_nodes[15 * g + i] - center;
                eoff[i] = std::exp(cplx(0.0, -off_prev[i] * L));
            }
            have = true;
        }
        cplx inner = 0.0;
        for (int i = 0; i < 15; ++i) inner += weights[15 * g + i] * eoff[i];
        acc += inner * std::exp(cplx(0.0, -center * L));
    }
    return std::pow(kPi * kPi * kPi * x, -sigma) * acc;
}

cplx psi_pm(double x, int k, const SmoothWindow& psi, double scale, int sign, double sigma,
            double tol) {
    return PsiKernel::build(psi, scale, k, sign, sigma, tol)(x);
}

VoronoiCheck gl2_voronoi_check(const VoronoiInstance& inst, const CoefficientTable& table,
                               double tol) {
    long long c = inst.c;
    if (c <= 0) throw std::invalid_argument("voronoi check needs c > 0");
    long long ar = reduce_mod(inst.a, c);
    if (std::gcd(ar, c) != 1) throw std::invalid_argument("voronoi check needs gcd(a,c) = 1");
    if (inst.level != 1) throw std::invalid_argument("coefficient ground truth is level 1 only");
    const int kappa = 12;
    double X = inst.scale_X;
    VoronoiCheck out{};
    long long n_lo = (long long)std::ceil(X * inst.win.support_lo());
    long long n_hi = (long long)std::floor(X * inst.win.support_hi());
    cplx lhs = 0.0;
    for (long long n = std::max(1LL, n_lo); n <= n_hi; ++n)
        lhs += table.lambda_f(n) * unit_phase((double)reduce_mod(ar * n, c) / c) *
               inst.win.evaluate(n / X);
    long long abar = inverse_mod(inst.a, c);
    double ulo = inst.win.support_lo(), uhi = inst.win.support_hi();
    cplx rhs = 0.0;
    double tail = 0.0;
    int quiet = 0;
    long long m = 1;
    for (; m <= 100000 && quiet < 3; ) {
        cplx blocksum = 0.0;
        for (int j = 0; j < 16; ++j, ++m) {
            double ym = X * oscillatory_integral(
                                [&](double u) {
                                    return inst.win.evaluate(u) *
                                           bessel_j_value(kappa - 1,
                                                          4.0 * kPi * std::sqrt(m * X * u) / c);
                                },
                                [](double) { return 0.0; }, ulo, uhi, tol * 1e-2)
                                .value.real();
            blocksum += table.lambda_f(m) * unit_phase(-(double)reduce_mod(abar * m, c) / c) * ym;
        }
        rhs += blocksum;
        tail = std::abs(blocksum);
        quiet = tail < tol / 20.0 ? quiet + 1 : 0;
    }
    if (quiet < 3) throw std::runtime_error("gl2 dual sum did not decay within the term budget");
    rhs *= 2.0 * kPi / c;
    out.lhs = lhs;
    out.rhs = rhs;
    out.gap = std::abs(lhs - rhs);
    out.dual_terms = m - 1;
    out.tail_estimate = tail * 2.0 * kPi / c;
    return out;
}

VoronoiCheck gl3_voronoi_check(const VoronoiInstance& inst, const CoefficientTable& table,
                               double tol) {
    long long c = inst.c;
    if (c <= 0) throw std::invalid_argument("voronoi check needs c > 0");
    if (c > 3) throw std::length_error("gl3 check budget: c <= 3");
    long long ar = reduce_mod(inst.a, c);
    if (std::gcd(ar, c) != 1) throw std::invalid_argument("voronoi check needs gcd(a,c) = 1");
    const int k = 12;
    double X = inst.scale_X;
    if (X > 1000.0) throw std::length_error("gl3 check budget: scale <= 1000");
    VoronoiCheck out{};
    long long n_lo = (long long)std::ceil(X * inst.win.support_lo());
    long long n_hi = (long long)std::floor(X * inst.win.support_hi());
    cplx lhs = 0.0;
    for (long long n = std::max(1LL, n_lo); n <= n_hi; ++n)
        lhs += table.A1(n) * unit_phase((double)reduce_mod(ar * n, c) / c) *
               inst.win.evaluate(n / X);

    PsiKernel ker_plus = PsiKernel::build(inst.win, X, k, 1, -0.5, tol * 1e-2);
    PsiKernel ker_minus = PsiKernel::build(inst.win, X, k, -1, -0.5, tol * 1e-2);
    cplx rhs = 0.0;
    long long dual_terms = 0;
    double tail = 0.0;
    for (long long n1 = 1; n1 <= c; ++n1) {
        if (c % n1 != 0) continue;
        long long L = c / n1;
        long long abar = inverse_mod(inst.a, L);
        double x_base = (double)n1 * n1 / ((double)c * c * c);
        cplx branch = 0.0;
        int quiet = 0;
        long long n2 = 1;
        double tail_n1 = 0.0;
        for (; n2 <= 200000 && quiet < 3; ) {
            cplx blocksum = 0.0;
            for (int j = 0; j < 32; ++j, ++n2) {
                double af = table.A(n2, n1);
                if (af != 0.0) {
                    cplx sp = kloosterman(abar, n2, L);
                    cplx sm = kloosterman(abar, -n2, L);
                    double x = x_base * n2;
                    blocksum += af / ((double)n1 * n2) * (sp * ker_plus(x) + sm * ker_minus(x));
                }
                ++dual_terms;
            }
            branch += blocksum;
            tail_n1 = std::abs(blocksum);
            quiet = tail_n1 < tol / 50.0 ? quiet + 1 : 0;
        }
        if (quiet < 3)
            throw std::runtime_error("gl3 dual sum did not decay within the term budget");
        rhs += branch;
        tail += tail_n1;
    }
    rhs *= (double)c;
    out.lhs = lhs;
    out.rhs = rhs;
    out.gap = std::abs(lhs - rhs);
    out.dual_terms = dual_terms;
    out.tail_estimate = tail * c;
    return out;
}

}  // namespace ant
