#pragma once

#include <complex>
#include <vector>

#include "ant/arithmetic.hpp"
#include "ant/windows.hpp"

namespace ant {

// twisted-sum instance: test function win(y/scale_X) supported on
// [scale_X, 2 scale_X] (inert_V) against modulus c, residue a
struct VoronoiInstance {
    long long a = 1;
    long long c = 1;
    SmoothWindow win{WindowKind::inert_V};
    double scale_X = 50;
    long long level = 1;
};

struct VoronoiCheck {
    cplx lhs, rhs;
    double gap;
    long long dual_terms;
    double tail_estimate;
};

// weight-12 level-1 twisted coefficient sum vs its Bessel-kernel dual
VoronoiCheck gl2_voronoi_check(const VoronoiInstance& inst, const CoefficientTable& table,
                               double tol = 1e-8);

// Psi_{+-}(x) = (1/(4 pi^{5/2} i)) contour integral over Re s = sigma of
// (pi^3 x)^{-s} G_k^{+-}(s) psitilde(-s) ds; nodes precomputed once,
// evaluated per x against the x-dependent factor only
struct PsiKernel {
    int k;
    int sign;
    double sigma;
    double t_max;
    std::vector<double> t_nodes;
    std::vector<cplx> weights;  // quadrature weight * G * psitilde, premultiplied

    static PsiKernel build(const SmoothWindow& psi, double scale, int k, int sign, double sigma,
                           double tol = 1e-8);
    cplx operator()(double x) const;
};
cplx psi_pm(double x, int k, const SmoothWindow& psi, double scale, int sign,
            double sigma = -0.5, double tol = 1e-8);

// rank-3 dual identity for the symmetric-square coefficients
VoronoiCheck gl3_voronoi_check(const VoronoiInstance& inst, const CoefficientTable& table,
                               double tol = 1e-3);

}  // namespace ant
