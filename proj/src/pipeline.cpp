#include "ant/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "ant/delta_method.hpp"
#include "ant/oscillatory.hpp"
#include "ant/special_functions.hpp"

namespace ant {

namespace {

constexpr double kPi = 3.14159265358979323846;

const SmoothWindow kV{WindowKind::inert_V};
const SmoothWindow kV0{WindowKind::plateau_V0};

void validate(const PipelineConfig& cfg) {
    if (!is_prime(cfg.P)) throw std::invalid_argument("pipeline needs prime P");
    if (cfg.d <= 0 || cfg.d % cfg.P == 0) throw std::invalid_argument("pipeline needs (d,P)=1");
    if (cfg.C < 1.0 || cfg.C * cfg.C > cfg.N / (cfg.d * (double)cfg.d) + 1e-9)
        throw std::invalid_argument("pipeline needs 1 <= C^2 <= N/d^2");
}

long long range_lo(double x) { return (long long)std::ceil(x); }
long long range_hi(double x) { return (long long)std::floor(x); }

}  // namespace

RhoSequence rho_synthetic(long long P, long long n_max, unsigned long long seed) {
    SyntheticLevelP seq = SyntheticLevelP::build(P, n_max, seed);
    return {[seq = std::move(seq)](long long n) { return seq(n); },
            "synthetic-level-" + std::to_string(P)};
}

RhoSequence rho_level_one(const CoefficientTable& table) {
    return {[table](long long n) { return table.lambda_f(n); }, "level-one"};
}

double s_d_direct(const PipelineConfig& cfg, const CoefficientTable& table,
                  const RhoSequence& rho) {
    validate(cfg);
    double d3 = (double)cfg.d * cfg.d * cfg.d;
    long long n_lo = std::max(1LL, range_lo(cfg.N / d3));
    long long n_hi = range_hi(2.0 * cfg.N / d3);
    double acc = 0.0;
    for (long long n = n_lo; n <= n_hi; ++n)
        acc += table.A1(n) * rho.lam(cfg.d * n) * kV.evaluate(d3 * n / cfg.N);
    return acc;
}

SplitResult s_d_delta_split(const PipelineConfig& cfg, const CoefficientTable& table,
                            const RhoSequence& rho) {
    validate(cfg);
    if (cfg.N > 1e4 || cfg.C > 60.0 || cfg.P > 13)
        throw std::length_error("delta split budget: N <= 1e4, C <= 60, P <= 13");
    double d2 = (double)cfg.d * cfg.d, d3 = d2 * cfg.d;
    long long n_lo = std::max(1LL, range_lo(cfg.N / d3));
    long long n_hi = range_hi(2.0 * cfg.N / d3);
    long long m_lo = std::max(1LL, range_lo(kV0.support_lo() * cfg.N / d2));
    long long m_hi = range_hi(kV0.support_hi() * cfg.N / d2);

    long long c_max = (long long)std::floor(2.5 * cfg.C);
    long long np_max = (long long)std::ceil(2.5 * c_max * cfg.C);

    std::vector<double> lam_m(m_hi - m_lo + 1);
    for (long long m = m_lo; m <= m_hi; ++m)
        lam_m[m - m_lo] = rho.lam(m) * kV0.evaluate(d2 * m / cfg.N);
    std::vector<double> a_n(n_hi - n_lo + 1);
    for (long long n = n_lo; n <= n_hi; ++n)
        a_n[n - n_lo] = table.A1(n) * kV.evaluate(d3 * n / cfg.N);

    std::vector<double> diag(2 * np_max + 1, 0.0);
    for (long long n = n_lo; n <= n_hi; ++n) {
        if (a_n[n - n_lo] == 0.0) continue;
        long long dn = cfg.d * n;
        long long lo = std::max(dn - m_hi, -np_max), hi = std::min(dn - m_lo, np_max);
        for (long long np = lo; np <= hi; ++np)
            diag[np + np_max] += a_n[n - n_lo] * lam_m[dn - np - m_lo];
    }

    SmoothWindow W{WindowKind::annulus_W};
    double norm = 0.0;
    for (long long c = 1; c <= c_max; ++c) norm += W.evaluate(c / cfg.C);
    if (norm <= 0.0) throw std::invalid_argument("normalizer vanished: C too small");

    DeltaKernelH h;
    SplitResult res{};
    for (long long M = 1; M <= c_max; ++M) {
        int v = M % cfg.P == 0 ? 1 : 0;
        long long b = v == 1 ? M / cfg.P : M;
        std::vector<double> ram(M);
        for (long long t = 0; t < M; ++t) ram[t] = (double)ramanujan_sum(t, M);
        for (long long a = 1; a * M <= c_max; ++a) {
            long long c = a * M;
            double x = c / cfg.C;
            double cell = 0.0;
            for (long long np = -np_max; np <= np_max; ++np) {
                double hv = h(x, np / (c * cfg.C));
                if (hv != 0.0)
                    cell += ram[((np % M) + M) % M] * hv * diag[np + np_max];
            }
            cell /= (double)c * norm;
            res.cells.push_back({v, a, b, cell});
            (v == 0 ? res.s0 : res.s1) += cell;
        }
    }
    res.direct = s_d_direct(cfg, table, rho);
    res.residual = std::abs(res.s0 + res.s1 - res.direct);
    return res;
}

MsumResult m_sum_voronoi_step(const PipelineConfig& cfg, const CoefficientTable& table,
                              long long a, long long b, int v, long long beta, long long n) {
    validate(cfg);
    if (v != 0 && v != 1) throw std::invalid_argument("v must be 0 or 1");
    long long M = b;
    for (int i = 0; i < v; ++i) M *= cfg.P;
    beta = ((beta % M) + M) % M;
    if (std::gcd(beta, M) != 1 && M > 1)
        throw std::invalid_argument("alpha must be a unit mod b P^v");
    long long c = a * M;
    double d2 = (double)cfg.d * cfg.d;
    double x = c / cfg.C;
    double band = c * cfg.C;
    DeltaKernelH h;

    long long m_lo = std::max(1LL, range_lo(kV0.support_lo() * cfg.N / d2));
    long long m_hi = range_hi(kV0.support_hi() * cfg.N / d2);
    long long dn = cfg.d * n;
    cplx pre = 0.0;
    for (long long m = std::max(m_lo, dn - (long long)std::ceil(2.5 * band));
         m <= std::min(m_hi, dn + (long long)std::ceil(2.5 * band)); ++m) {
        double hv = h(x, (dn - m) / band);
        if (hv == 0.0) continue;
        pre += table.lambda_f(m) *
               std::exp(cplx(0.0, -2.0 * kPi * (double)(((beta * (m % M)) % M + M) % M) / M)) *
               kV0.evaluate(d2 * m / cfg.N) * hv;
    }

    long long betabar = M == 1 ? 0 : mod_inv(((beta % M) + M) % M, M);
    const int kappa = 12;
    double m_cut = cfg.N * std::pow((double)cfg.P, 1.0 - v) /
                   ((double)a * a * cfg.C * cfg.C * d2);
    long long hard_cap = (long long)std::ceil(8.0 * m_cut) + 256;
    cplx post = 0.0;
    int quiet = 0;
    long long mp = 1;
    for (; mp <= hard_cap && quiet < 3; ) {
        cplx blocksum = 0.0;
        for (int j = 0; j < 8; ++j, ++mp) {
            auto wfn = [&](double t) {
                double y = dn - band * t;
                if (y <= 0.0) return 0.0;
                return h(x, t) * kV0.evaluate(d2 * y / cfg.N) *
                       bessel_j_value(kappa - 1, 4.0 * kPi * std::sqrt(mp * y) / M);
            };
            double yint =
                band *
                oscillatory_integral(wfn, [](double) { return 0.0; }, -2.5, 2.5, 1e-10).value.real();
            blocksum += table.lambda_f(mp) *
                        std::exp(cplx(0.0, 2.0 * kPi * (double)(((betabar * (mp % M)) % M + M) % M) / M)) *
                        yint;
        }
        post += blocksum;
        quiet = std::abs(blocksum) < 1e-7 * std::max(std::abs(pre), 1.0) ? quiet + 1 : 0;
    }
    if (quiet < 3) throw std::runtime_error("m dual sum did not decay within the term budget");
    post *= 2.0 * kPi / M;
    MsumResult out{};
    out.pre = pre;
    out.post = post;
    out.gap = std::abs(pre - post);
    out.dual_terms = mp - 1;
    return out;
}

}  // namespace ant
