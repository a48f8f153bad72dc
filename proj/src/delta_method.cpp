#include "ant/delta_method.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ant {

DeltaConfig corollary_config(double C, long long q, double N) {
    DeltaConfig cfg;
    cfg.C = cfg.D = cfg.W_scale = C;
    cfg.q = q;
    cfg.N = N;
    return cfg;
}

double DeltaKernelH::operator()(double x, double y) const {
    double ux = U.evaluate(x);
    if (ux == 0.0) return 0.0;
    double uy = U.evaluate(y);
    if (uy == 0.0) return 0.0;
    return ux * uy * (W.evaluate(x) - W.evaluate(y));
}

namespace {

// sum over alpha mod M of e(alpha n / M): the full geometric sum
double additive_orbit_sum(long long n, long long M) {
    return (((n % M) + M) % M == 0) ? (double)M : 0.0;
}

}  // namespace

double delta_general(long long n, const DeltaConfig& cfg, DeltaLedger* ledger) {
    if (cfg.C <= 1 || cfg.D <= 1) throw std::invalid_argument("delta_general: C, D must be > 1");
    if (std::abs((double)n) > cfg.N)
        throw std::invalid_argument("delta_general: |n| exceeds the configured range");
    long long q = cfg.q;
    double Ws = cfg.W_scale;

    double norm = 0.0;
    long long c_hi = (long long)std::ceil(std::max(2.5 * cfg.C, 2.0 * Ws));
    for (long long c = 1; c <= c_hi; ++c)
        norm += cfg.W.evaluate(c / Ws) * cfg.U.evaluate(c / cfg.C);
    if (norm == 0.0) throw std::invalid_argument("delta_general: empty normalizer");

    long long d_hi = (long long)std::ceil(2.5 * std::max(cfg.C, cfg.D));
    long long rows_hi = std::max(c_hi, d_hi);
    if (ledger) {
        ledger->rows.clear();
        ledger->normalizer = norm;
    }
    double total = 0.0;
    for (long long c = 1; c <= rows_hi; ++c) {
        double term = 0.0;
        if (((n % (c * q)) + c * q) % (c * q) == 0) {
            double s1 = cfg.W.evaluate(c / Ws) * cfg.U.evaluate(n / (c * cfg.D * q)) *
                        cfg.U.evaluate(c / cfg.C);
            double s2 = cfg.W.evaluate(n / (c * q * Ws)) * cfg.U.evaluate(n / (cfg.C * c * q)) *
                        cfg.U.evaluate(c / cfg.D);
            term = s1 - s2;
        }
        total += term;
        if (ledger) ledger->rows.push_back({c, additive_orbit_sum(n, c * q), 0.0, term});
    }
    if (ledger) ledger->total = total / norm;
    return total / norm;
}

double delta_corollary(long long n, long long q, double C, DeltaLedger* ledger) {
    if (C <= 1) throw std::invalid_argument("delta_corollary: C must be > 1");
    DeltaKernelH h;
    SmoothWindow W{WindowKind::annulus_W};

    double norm = 0.0;
    long long c_hi = (long long)std::ceil(2.5 * C);
    for (long long c = 1; c <= c_hi; ++c) norm += W.evaluate(c / C);

    if (ledger) {
        ledger->rows.clear();
        ledger->normalizer = norm;
    }
    double total = 0.0;
    for (long long c = 1; c <= c_hi; ++c) {
        double alpha_sum = additive_orbit_sum(n, c * q);
        double hv = h(c / C, n / (c * C * (double)q));
        double term = alpha_sum * hv / (double)(c * q);
        total += term;
        if (ledger) ledger->rows.push_back({c, alpha_sum, hv, term});
    }
    if (ledger) ledger->total = total / norm;
    return total / norm;
}

TrivialDeltaResult trivial_delta(long long n, long long p, double Y) {
    SmoothWindow U{WindowKind::bump_U};
    // unit-support bump h(t) = U(2.5 t), h(0) = 1
    double value = (((n % p) + p) % p == 0) ? U.evaluate(2.5 * (double)n / Y) : 0.0;
    return {value, (double)p > Y, p};
}

std::string audit_delta_csv(long long n, long long q, double C) {
    DeltaLedger ledger;
    delta_corollary(n, q, C, &ledger);
    std::ostringstream os;
    os.precision(15);
    os << "c,alpha_sum,h,term\n";
    double sum = 0.0;
    for (auto& row : ledger.rows) {
        os << row.c << "," << row.alpha_sum << "," << row.h << "," << row.term << "\n";
        sum += row.term;
    }
    os << "sum,,," << sum << "\n";
    os << "normalizer,,," << ledger.normalizer << "\n";
    os << "delta,,," << ledger.total << "\n";
    return os.str();
}

}  // namespace ant
