#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "ant/rational.hpp"

// Exact bookkeeping of the bound optimization: monomials in (P,k,d,N,C)
// with rational exponents, substitution k = P^theta, N = P^{3/2}k^2, and
// the choice of the modulus size C balancing the error terms.
namespace ant::exponents {

enum Sym { SymP = 0, SymK = 1, SymD = 2, SymN = 3, SymC = 4 };
inline const char* sym_name(int s) {
    static const char* names[5] = {"P", "k", "d", "N", "C"};
    return names[s];
}

struct ExponentVector {
    std::array<Rat, 5> e{};
    bool eps_flag = false;

    Rat& operator[](int s) { return e[s]; }
    const Rat& operator[](int s) const { return e[s]; }

    friend ExponentVector operator*(const ExponentVector& a, const ExponentVector& b) {
        ExponentVector r;
        for (int i = 0; i < 5; i++) r.e[i] = a.e[i] + b.e[i];
        r.eps_flag = a.eps_flag || b.eps_flag;
        return r;
    }
    friend ExponentVector operator/(const ExponentVector& a, const ExponentVector& b) {
        ExponentVector r;
        for (int i = 0; i < 5; i++) r.e[i] = a.e[i] - b.e[i];
        r.eps_flag = a.eps_flag || b.eps_flag;
        return r;
    }
    ExponentVector pow(const Rat& x) const {
        ExponentVector r;
        for (int i = 0; i < 5; i++) r.e[i] = e[i] * x;
        r.eps_flag = eps_flag;
        return r;
    }
    bool same_exponents(const ExponentVector& o) const {
        for (int i = 0; i < 5; i++)
            if (e[i] != o.e[i]) return false;
        return true;
    }
    std::string str() const;
};

ExponentVector monomial(Rat p, Rat k, Rat d, Rat n, Rat c = Rat(0));

// Exponent of P as a linear form a + b*theta after substitution.
struct ThetaForm {
    Rat a, b;
    Rat eval(const Rat& theta) const { return a + b * theta; }
    friend bool operator==(const ThetaForm& x, const ThetaForm& y) {
        return x.a == y.a && x.b == y.b;
    }
    std::string str() const;
};

// Substitution P = P, k = P^theta, N = P^{3/2}k^2, d = P^0 by default,
// together with the admissible theta interval.
struct Regime {
    std::array<ThetaForm, 5> sub;
    std::array<bool, 5> bound;
    Rat theta_lo, theta_hi;
    bool lo_strict = true, hi_strict = false;
};
Regime default_regime(Rat theta_lo, Rat theta_hi);

// Throws std::invalid_argument on a symbol the regime does not bind.
ThetaForm substitute(const ExponentVector& term, const Regime& regime);

// Eliminate C by the monomial choice, and solve for the C making two
// terms balance exactly.
ExponentVector with_C(const ExponentVector& term, const ExponentVector& choice);
ExponentVector solve_C_balance(const ExponentVector& t1, const ExponentVector& t2);

// The five bound terms C^{3/2}N^{1/2}/(d^{3/2}P^{1/2}), (CN)^{1/2}k/d,
// P^{1/2}N^{5/4}/(Cd^3), C^2 k/P^{1/2}, P^{1/2}N^2/(C^{5/2}d^{9/2}k^{7/12}).
std::vector<ExponentVector> bound_terms();

// Case 1 modulus choices (the min is taken over all four) and the single
// case 2 choice P^{1/6}N^{1/2}/(d^{7/6}k^{19/36}).
std::vector<ExponentVector> c_choice_case1();
ExponentVector c_choice_case2();

struct OptimizeResult {
    struct Segment {
        Rat lo, hi;
        int candidate;  // index of the minimizing C choice on [lo,hi]
        int max_term;   // index of the dominating bound term there
    };
    std::vector<Segment> segments;
    bool window_certified = false;
    std::vector<std::string> trace;
};
OptimizeResult optimize_C(const std::vector<ExponentVector>& terms, const Regime& regime,
                          const std::vector<ExponentVector>& candidates, int case_id);

struct MainThmResult {
    std::vector<ExponentVector> bounds;   // displayed bound terms, exact
    std::vector<ExponentVector> n_range;  // lower-boundary terms for N
    std::vector<std::string> trace;
};
// Derives the displayed bounds from the term list and the C choice; throws
// std::logic_error naming the differing exponent on any mismatch.
MainThmResult reproduce_mainthm(int case_id);

struct CorollaryRange {
    std::vector<std::pair<Rat, Rat>> exponents;  // (P-exponent, k-exponent)
    Rat theta_lo, theta_hi;
    Rat eta_max;
    std::string range_note;  // flags the 21/17 vs 17/21 statement discrepancy
    std::vector<std::string> trace;
};
CorollaryRange corollary_range();

// Full derivation trace in a stable text format for regression diffing.
std::string trace_text();

}  // namespace ant::exponents
