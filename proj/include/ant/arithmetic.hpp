#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ant {

using cplx = std::complex<double>;
using int128 = __int128;

long long mod_pow(long long base, long long exp, long long mod);
// inverse of a mod m; throws std::invalid_argument on non-units
long long mod_inv(long long a, long long m);
bool is_prime(long long n);
int mobius(long long n);
long long euler_phi(long long n);
long long divisor_count(long long n);
std::vector<long long> divisors(long long n);
std::vector<std::pair<long long, int>> factorize(long long n);

// S(a,b;c) = sum over units alpha mod c of e((a alpha + b inv(alpha))/c)
cplx kloosterman(long long a, long long b, long long c);
long long ramanujan_sum(long long b, long long c);

struct DirichletCharacter {
    long long modulus;
    std::vector<cplx> values;  // indexed by residue, zero off units

    static DirichletCharacter principal(long long q);
    // index-j character mod an odd prime p: chi(g^t) = e(jt/(p-1))
    static DirichletCharacter mod_prime(long long p, long long index);
    cplx operator()(long long n) const;
    bool is_principal() const;
};

// sum over alpha mod bP, (alpha,bP)=1, of conj(chi(alpha)) e(alpha m'/(bP))
// where m' carries the inverse factors inv(d_b beta) P^0 n1 b_d of the
// character-sum reduction; throws when the inverse does not exist
cplx gauss_twisted_sum(const DirichletCharacter& chi, long long m, long long b, long long P,
                       long long d_b, long long beta, long long n1, long long b_d);

// C_{chi,v,d}(m, +-n; bP^v, b_d P^v / n1): outer alpha-sum against the inner
// Kloosterman sum S(inv(alpha d_b), +-n; b_d P^v / n1)
cplx character_sum_C(long long m, int n_sign, long long n, long long b, long long P, int v,
                     long long d, long long n1, const DirichletCharacter& chi);

// exact tau(n) from the 24th power of the eta q-series; lambda(n) = tau(n)/n^{11/2}
struct CoefficientTable {
    long long n_max = 0;
    std::vector<int128> tau_table;   // index n <= n_max
    std::vector<double> lambda_table;

    static CoefficientTable build(long long n_max);

    int128 tau(long long n) const;     // multiplicative extension past n_max
    double lambda_f(long long n) const;
    double A1(long long n) const;               // A(1,n) = sum_{ml=n} lambda(m^2)
    double A(long long m, long long n) const;   // Hecke-relation extension
};
std::string int128_str(int128 v);

// CSV-style cache of "n,tau(n)" lines; idempotent, only grows
std::string render_tau_cache(const CoefficientTable& table);
long long write_tau_cache(const std::string& path, long long n_max);

// tau(m) tau(n) - sum_{e|(m,n)} e^{11} tau(m n / e^2), exact integers
int128 gl2_hecke_residual(const CoefficientTable& table, long long m, long long n);
// worst |lambda(n)| / d(n) over n <= n_max
double deligne_worst_ratio(const CoefficientTable& table, long long n_max);
// worst |A(1,n)| / d_3(n) over n <= n_max
double sym_square_worst_ratio(const CoefficientTable& table, long long n_max);

// level-P Hecke-compatible sequence: lambda(p) = 2 cos(theta_p) at p != P
// with seeded angles, lambda(P) = P^{-1/2}, Hecke recursion at prime powers
struct SyntheticLevelP {
    long long P = 0;
    unsigned long long seed = 0;
    std::vector<double> lam;

    static SyntheticLevelP build(long long P, long long n_max, unsigned long long seed);
    double operator()(long long n) const;
};

// the coupled system: for j = 1,2
//   m_j == inv(d_{b_j} beta_j) P^{1-v} n_j (b_j,d)  mod u_j
//   n   == -s beta_1 L_2 + s beta_2 L_1             mod L_1 L_2
// with L_j = b_{j,d} P^v / n_j, beta_j running over primitive residues mod
// L_j, m_j over [m_lo, m_hi], n over [-n_abs_max, n_abs_max], and optionally
// H <= |b_1 m_1 (b_2,d)^3 n_2^2 - b_2 m_2 (b_1,d)^3 n_1^2| <= 2H
struct CongruenceSystem {
    long long b1 = 1, b2 = 1, d = 1, P = 2;
    int v = 0;
    long long n1 = 1, n2 = 1;
    long long u1 = 1, u2 = 1;
    int sign = 1;
    long long m_lo = 1, m_hi = 1;
    long long n_abs_max = 0;
    std::optional<std::pair<long long, long long>> band;
};

long long enumerate_congruences(const CongruenceSystem& sys, long long max_tuples = 100000000);
long long enumerate_congruences_dual(const CongruenceSystem& sys, long long max_tuples = 100000000);

}  // namespace ant
