#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "ant/arithmetic.hpp"
#include "ant/windows.hpp"

namespace ant {

// lambda_rho source: synthetic level-P sequence or the level-1 table
struct RhoSequence {
    std::function<double(long long)> lam;
    std::string label;
};
RhoSequence rho_synthetic(long long P, long long n_max, unsigned long long seed);
RhoSequence rho_level_one(const CoefficientTable& table);

struct PipelineConfig {
    long long P = 5;
    int k = 12;
    long long d = 1;
    double N = 2000;
    double C = 20;
    unsigned long long seed = 1;
    bool use_level_one = false;  // d = 1 ground-truth mode
};

// S_d(N) = sum_n lambda_rho(d n) A(1,n) V(d^3 n / N)
double s_d_direct(const PipelineConfig& cfg, const CoefficientTable& table,
                  const RhoSequence& rho);

struct SplitCell {
    int v;
    long long a, b;
    double value;
};
struct SplitResult {
    double s0, s1;
    double direct;
    double residual;  // |s0 + s1 - direct|
    std::vector<SplitCell> cells;
};
// exact delta-symbol split S_d = S_0 + S_1 over moduli c = a b P^v with the
// m-detection window V0(d^2 m / N); throws on combinatorial budget overflow
SplitResult s_d_delta_split(const PipelineConfig& cfg, const CoefficientTable& table,
                            const RhoSequence& rho);

struct MsumResult {
    cplx pre, post;
    double gap;
    long long dual_terms;
};
// the inner m-sum at fixed (a, b, v, beta, n), before and after the rank-2
// dual-sum identity (level-1 coefficients); gap <= 1e-4 max(|pre|,1)
MsumResult m_sum_voronoi_step(const PipelineConfig& cfg, const CoefficientTable& table,
                              long long a, long long b, int v, long long beta, long long n);

}  // namespace ant
