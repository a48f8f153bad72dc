#pragma once

#include <string>
#include <vector>

#include "ant/windows.hpp"

namespace ant {

// Parameters of the two-sum delta identity. W is evaluated at raw argument
// over W_scale, so W_scale = C gives the single-scale corollary form.
struct DeltaConfig {
    double C = 20;
    double D = 20;
    long long q = 1;
    double N = 1000;  // working range |n| <= N
    SmoothWindow U{WindowKind::bump_U};
    SmoothWindow W{WindowKind::annulus_W};
    double W_scale = 20;
};

DeltaConfig corollary_config(double C, long long q, double N = 1000);

// h(x,y) = W(x)U(x)U(y) - W(y)U(x)U(y); zero outside |x|,|y| <= 2.5
struct DeltaKernelH {
    SmoothWindow U{WindowKind::bump_U};
    SmoothWindow W{WindowKind::annulus_W};
    double operator()(double x, double y) const;
};

struct DeltaLedgerRow {
    long long c;
    double alpha_sum;  // sum over alpha mod cq of e(alpha n/(cq)), real
    double h;          // h(c/C, n/(cCq))
    double term;       // alpha_sum * h / (cq), before normalization
};
struct DeltaLedger {
    std::vector<DeltaLedgerRow> rows;
    double normalizer = 0;  // script-C = sum_c W(c/C)
    double total = 0;       // sum of terms / normalizer
};

// Theorem-form S1 - S2 with the finite ranges forced by compact supports
double delta_general(long long n, const DeltaConfig& cfg, DeltaLedger* ledger = nullptr);
// single-scale additive-character form, exact up to rounding
double delta_corollary(long long n, long long q, double C, DeltaLedger* ledger = nullptr);

struct TrivialDeltaResult {
    double value;
    bool precondition_ok;
    long long witness;  // counterexample n = p when p <= Y
};
// delta(n == 0 mod p) h(n/Y); valid as delta(n=0) only when p > Y
TrivialDeltaResult trivial_delta(long long n, long long p, double Y);

// CSV ledger "c,alpha_sum,h,term" plus sum/normalizer/delta footer rows
std::string audit_delta_csv(long long n, long long q, double C);

}  // namespace ant
