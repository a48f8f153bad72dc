#include "ant/arithmetic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace ant {

namespace {
constexpr double kTwoPi = 6.283185307179586476925;

cplx e_of(double x) { return std::polar(1.0, kTwoPi * x); }

int128 mul_checked(int128 a, int128 b) {
    int128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("int128 multiply overflow");
    return r;
}
int128 add_checked(int128 a, int128 b) {
    int128 r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("int128 add overflow");
    return r;
}
int128 pow_checked(int128 base, int e) {
    int128 r = 1;
    for (int i = 0; i < e; ++i) r = mul_checked(r, base);
    return r;
}
}  // namespace

long long mod_pow(long long base, long long exp, long long mod) {
    if (mod <= 0) throw std::invalid_argument("mod_pow: modulus must be positive");
    long long r = 1 % mod;
    base %= mod;
    if (base < 0) base += mod;
    while (exp > 0) {
        if (exp & 1) r = (long long)((__int128)r * base % mod);
        base = (long long)((__int128)base * base % mod);
        exp >>= 1;
    }
    return r;
}

long long mod_inv(long long a, long long m) {
    if (m <= 0) throw std::invalid_argument("mod_inv: modulus must be positive");
    a %= m;
    if (a < 0) a += m;
    long long r0 = m, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        long long q = r0 / r1;
        long long r2 = r0 - q * r1;
        long long s2 = s0 - q * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if (r0 != 1) throw std::invalid_argument("mod_inv: argument is not a unit");
    return ((s0 % m) + m) % m;
}

bool is_prime(long long n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (long long f = 5; f * f <= n; f += 6)
        if (n % f == 0 || n % (f + 2) == 0) return false;
    return true;
}

std::vector<std::pair<long long, int>> factorize(long long n) {
    if (n <= 0) throw std::invalid_argument("factorize: n must be positive");
    std::vector<std::pair<long long, int>> out;
    for (long long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.push_back({p, e});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

int mobius(long long n) {
    int sign = 1;
    for (auto& [p, e] : factorize(n)) {
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

long long euler_phi(long long n) {
    long long r = n;
    for (auto& [p, e] : factorize(n)) r = r / p * (p - 1);
    return r;
}

long long divisor_count(long long n) {
    long long c = 1;
    for (auto& [p, e] : factorize(n)) c *= (e + 1);
    return c;
}

std::vector<long long> divisors(long long n) {
    std::vector<long long> out{1};
    for (auto& [p, e] : factorize(n)) {
        size_t sz = out.size();
        long long pe = 1;
        for (int i = 1; i <= e; ++i) {
            pe *= p;
            for (size_t j = 0; j < sz; ++j) out.push_back(out[j] * pe);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

cplx kloosterman(long long a, long long b, long long c) {
    if (c < 1) throw std::invalid_argument("kloosterman: c must be >= 1");
    long long ar = ((a % c) + c) % c, br = ((b % c) + c) % c;
    cplx acc = 0.0;
    for (long long x = 1; x <= c; ++x) {
        if (std::gcd(x, c) != 1 && c > 1) continue;
        long long xb = (c == 1) ? 0 : mod_inv(x, c);
        long long num = (long long)(((__int128)ar * x + (__int128)br * xb) % c);
        acc += e_of((double)num / (double)c);
    }
    return acc;
}

long long ramanujan_sum(long long b, long long c) {
    long long g = std::gcd(((b % c) + c) % c, c);
    if (g == 0) g = c;
    long long cg = c / g;
    int mu = mobius(cg);
    if (mu == 0) return 0;
    return mu * (euler_phi(c) / euler_phi(cg));
}

DirichletCharacter DirichletCharacter::principal(long long q) {
    DirichletCharacter chi;
    chi.modulus = q;
    chi.values.assign(q, 0.0);
    for (long long r = 0; r < q; ++r)
        if (std::gcd(r, q) == 1 || q == 1) chi.values[r] = 1.0;
    return chi;
}

DirichletCharacter DirichletCharacter::mod_prime(long long p, long long index) {
    if (!is_prime(p) || p == 2) throw std::invalid_argument("mod_prime: p must be an odd prime");
    long long g = 0;
    for (long long cand = 2; cand < p; ++cand) {
        bool primitive = true;
        for (auto& [q, e] : factorize(p - 1))
            if (mod_pow(cand, (p - 1) / q, p) == 1) primitive = false;
        if (primitive) {
            g = cand;
            break;
        }
    }
    DirichletCharacter chi;
    chi.modulus = p;
    chi.values.assign(p, 0.0);
    long long pw = 1;
    for (long long t = 0; t < p - 1; ++t) {
        chi.values[pw] = e_of((double)(index % (p - 1)) * (double)t / (double)(p - 1));
        pw = (long long)((__int128)pw * g % p);
    }
    return chi;
}

cplx DirichletCharacter::operator()(long long n) const {
    long long r = ((n % modulus) + modulus) % modulus;
    return modulus == 1 ? cplx(1.0) : values[r];
}

bool DirichletCharacter::is_principal() const {
    for (long long r = 0; r < modulus; ++r)
        if (std::abs(values[r]) > 0.5 && std::abs(values[r] - cplx(1.0)) > 1e-12) return false;
    return true;
}

cplx gauss_twisted_sum(const DirichletCharacter& chi, long long m, long long b, long long P,
                       long long d_b, long long beta, long long n1, long long b_d) {
    // sum over alpha mod bP of conj(chi(alpha)) e(inv(alpha) m/(bP))
    //   e(inv(alpha d_b beta) / (b_d P / n1)), inner inverse mod b_d P/n1
    if (chi.modulus != P) throw std::invalid_argument("gauss_twisted_sum: chi must have modulus P");
    long long q = b * P;
    if ((b_d * P) % n1 != 0) throw std::invalid_argument("gauss_twisted_sum: n1 must divide b_d P");
    long long inner = b_d * P / n1;
    if (inner > 1 && std::gcd(d_b % inner, inner) != 1)
        throw std::invalid_argument("gauss_twisted_sum: d_b not invertible");
    if (inner > 1 && std::gcd(beta % inner, inner) != 1)
        throw std::invalid_argument("gauss_twisted_sum: beta not invertible");
    cplx acc = 0.0;
    for (long long alpha = 1; alpha <= q; ++alpha) {
        if (std::gcd(alpha, q) != 1) continue;
        long long ai = mod_inv(alpha, q);
        double phase = (double)((__int128)ai * (((m % q) + q) % q) % q) / (double)q;
        if (inner > 1) {
            long long x = (long long)((__int128)(alpha % inner) * (d_b % inner) % inner *
                                      (beta % inner) % inner);
            phase += (double)mod_inv(x, inner) / (double)inner;
        }
        acc += std::conj(chi(alpha)) * e_of(phase);
    }
    return acc;
}

cplx character_sum_C(long long m, int n_sign, long long n, long long b, long long P, int v,
                     long long d, long long n1, const DirichletCharacter& chi) {
    if (v != 0 && v != 1) throw std::invalid_argument("character_sum_C: v must be 0 or 1");
    long long g = std::gcd(b, d);
    long long b_d = b / g, d_b = d / g;
    long long Pv = (v == 1) ? P : 1;
    if ((b_d * Pv) % n1 != 0) throw std::invalid_argument("character_sum_C: n1 must divide b_d P^v");
    long long q = b * Pv;
    long long inner = b_d * Pv / n1;
    if (v == 0 && std::gcd(P, b) != 1)
        throw std::invalid_argument("character_sum_C: v=0 requires (P,b)=1");
    if (inner > 1 && std::gcd(d_b, inner) != 1)
        throw std::invalid_argument("character_sum_C: d_b not invertible");
    cplx acc = 0.0;
    for (long long alpha = 1; alpha <= q; ++alpha) {
        if (std::gcd(alpha, q) != 1) continue;
        // inverse of alpha P^{1-v} mod q
        long long aP = (v == 1) ? alpha : (long long)((__int128)alpha * (P % q) % q);
        long long api = mod_inv(aP, q);
        double phase = (double)((__int128)api * (((m % q) + q) % q) % q) / (double)q;
        cplx kl = 1.0;
        if (inner > 1) {
            long long adb = (long long)((__int128)(alpha % inner) * (d_b % inner) % inner);
            kl = kloosterman(mod_inv(adb, inner), n_sign > 0 ? n : -n, inner);
        }
        cplx twist = (v == 1) ? std::conj(chi(alpha)) : cplx(1.0);
        acc += twist * e_of(phase) * kl;
    }
    return acc;
}

CoefficientTable CoefficientTable::build(long long n_max) {
    if (n_max < 1) throw std::invalid_argument("CoefficientTable: n_max must be >= 1");
    CoefficientTable t;
    t.n_max = n_max;
    // eta-product: coefficients of prod (1-x^n) by pentagonal sparsity
    std::vector<int128> f(n_max, 0);
    f[0] = 1;
    for (long long k = 1;; ++k) {
        long long g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
        if (g1 >= n_max && g2 >= n_max) break;
        int s = (k % 2) ? -1 : 1;
        if (g1 < n_max) f[g1] += s;
        if (g2 < n_max) f[g2] += s;
    }
    auto square = [&](const std::vector<int128>& a) {
        std::vector<int128> r(n_max, 0);
        for (long long i = 0; i < n_max; ++i) {
            if (a[i] == 0) continue;
            for (long long j = 0; i + j < n_max; ++j) {
                if (a[j] == 0) continue;
                r[i + j] = add_checked(r[i + j], mul_checked(a[i], a[j]));
            }
        }
        return r;
    };
    auto mult = [&](const std::vector<int128>& a, const std::vector<int128>& b) {
        std::vector<int128> r(n_max, 0);
        for (long long i = 0; i < n_max; ++i) {
            if (a[i] == 0) continue;
            for (long long j = 0; i + j < n_max; ++j) {
                if (b[j] == 0) continue;
                r[i + j] = add_checked(r[i + j], mul_checked(a[i], b[j]));
            }
        }
        return r;
    };
    auto f2 = square(f);
    auto f4 = square(f2);
    auto f8 = square(f4);
    auto f16 = square(f8);
    auto f24 = mult(f16, f8);
    // tau(n) = coefficient of x^{n-1} in f24 (the leading q of the weight-12 form)
    t.tau_table.assign(n_max + 1, 0);
    t.lambda_table.assign(n_max + 1, 0.0);
    for (long long n = 1; n <= n_max; ++n) {
        t.tau_table[n] = f24[n - 1];
        t.lambda_table[n] = (double)((long double)t.tau_table[n] / std::pow((long double)n, 5.5L));
    }
    return t;
}

int128 CoefficientTable::tau(long long n) const {
    if (n < 1) throw std::out_of_range("tau: n must be >= 1");
    if (n <= n_max) return tau_table[n];
    int128 r = 1;
    for (auto& [p, e] : factorize(n)) {
        if (p > n_max) throw std::out_of_range("tau: prime beyond table range");
        int128 t0 = 1, t1 = tau_table[p];
        int128 p11 = pow_checked(p, 11);
        for (int j = 2; j <= e; ++j) {
            int128 t2 = add_checked(mul_checked(tau_table[p], t1), -mul_checked(p11, t0));
            t0 = t1;
            t1 = t2;
        }
        r = mul_checked(r, e == 0 ? (int128)1 : t1);
    }
    return r;
}

double CoefficientTable::lambda_f(long long n) const {
    if (n <= n_max) return lambda_table[n];
    // normalized Hecke recursion at each prime; unlike tau() this stays in
    // doubles, so large primes cannot overflow
    double r = 1.0;
    for (auto& [p, e] : factorize(n)) {
        if (p > n_max) throw std::out_of_range("lambda_f: prime beyond table range");
        double lp = lambda_table[p];
        double l0 = 1.0, l1 = lp;
        for (int j = 2; j <= e; ++j) {
            double l2 = lp * l1 - l0;
            l0 = l1;
            l1 = l2;
        }
        r *= l1;
    }
    return r;
}

double CoefficientTable::A1(long long n) const {
    if (n < 0) n = -n;
    if (n == 0) return 0.0;
    double acc = 0.0;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % (d * d) != 0) continue;
        long long m = n / (d * d);
        acc += lambda_f(m * m);
    }
    return acc;
}

double CoefficientTable::A(long long m, long long n) const {
    if (m < 0) m = -m;
    if (n < 0) n = -n;
    if (m == 0 || n == 0) return 0.0;
    double acc = 0.0;
    long long g = std::gcd(m, n);
    for (long long e : divisors(g)) {
        int mu = mobius(e);
        if (mu == 0) continue;
        acc += mu * A1(m / e) * A1(n / e);
    }
    return acc;
}

std::string int128_str(int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -(unsigned __int128)v : (unsigned __int128)v;
    std::string s;
    while (u) {
        s.push_back('0' + (char)(u % 10));
        u /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

std::string render_tau_cache(const CoefficientTable& table) {
    std::ostringstream os;
    for (long long n = 1; n <= table.n_max; ++n)
        os << n << "," << int128_str(table.tau_table[n]) << "\n";
    return os.str();
}

long long write_tau_cache(const std::string& path, long long n_max) {
    long long existing = 0;
    {
        std::ifstream in(path);
        std::string line;
        while (in && std::getline(in, line))
            if (!line.empty()) ++existing;
    }
    if (existing >= n_max) return existing;
    auto table = CoefficientTable::build(n_max);
    std::ofstream out(path);
    out << render_tau_cache(table);
    return n_max;
}

int128 gl2_hecke_residual(const CoefficientTable& table, long long m, long long n) {
    int128 lhs = mul_checked(table.tau(m), table.tau(n));
    int128 rhs = 0;
    for (long long e : divisors(std::gcd(m, n))) {
        int128 term = mul_checked(pow_checked(e, 11), table.tau(m * n / (e * e)));
        rhs = add_checked(rhs, term);
    }
    return lhs - rhs;
}

double deligne_worst_ratio(const CoefficientTable& table, long long n_max) {
    double worst = 0.0;
    for (long long n = 1; n <= n_max; ++n)
        worst = std::max(worst, std::abs(table.lambda_f(n)) / (double)divisor_count(n));
    return worst;
}

double sym_square_worst_ratio(const CoefficientTable& table, long long n_max) {
    double worst = 0.0;
    for (long long n = 1; n <= n_max; ++n) {
        long long d3 = 0;
        for (long long a : divisors(n)) d3 += divisor_count(n / a);
        worst = std::max(worst, std::abs(table.A1(n)) / (double)d3);
    }
    return worst;
}

SyntheticLevelP SyntheticLevelP::build(long long P, long long n_max, unsigned long long seed) {
    if (!is_prime(P)) throw std::invalid_argument("SyntheticLevelP: P must be prime");
    SyntheticLevelP s;
    s.P = P;
    s.seed = seed;
    s.lam.assign(n_max + 1, 0.0);
    s.lam[1] = 1.0;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 3.14159265358979323846);
    std::vector<double> lp(n_max + 1, 0.0);
    for (long long p = 2; p <= n_max; ++p) {
        if (!is_prime(p)) continue;
        lp[p] = (p == P) ? 1.0 / std::sqrt((double)P) : 2.0 * std::cos(uni(rng));
    }
    for (long long n = 2; n <= n_max; ++n) {
        auto fac = factorize(n);
        if (fac.size() > 1) {
            long long pe = 1;
            for (int i = 0; i < fac[0].second; ++i) pe *= fac[0].first;
            s.lam[n] = s.lam[pe] * s.lam[n / pe];
            continue;
        }
        long long p = fac[0].first;
        int e = fac[0].second;
        if (e == 1) {
            s.lam[n] = lp[p];
        } else if (p == P) {
            s.lam[n] = s.lam[n / p] * lp[p];
        } else {
            s.lam[n] = lp[p] * s.lam[n / p] - s.lam[n / (p * p)];
        }
    }
    return s;
}

double SyntheticLevelP::operator()(long long n) const {
    if (n < 1 || n >= (long long)lam.size()) throw std::out_of_range("SyntheticLevelP: index");
    return lam[n];
}

namespace {

struct LinearClass {
    // solutions x == r (mod step), or empty
    bool empty;
    long long r, step;
};

// solve a x == c (mod m)
LinearClass solve_linear(long long a, long long c, long long m) {
    a = ((a % m) + m) % m;
    c = ((c % m) + m) % m;
    long long g = std::gcd(a == 0 ? m : a, m);
    if (g == 0) g = m;
    if (c % g != 0) return {true, 0, 1};
    long long m2 = m / g;
    if (m2 == 1) return {false, 0, 1};
    long long r = (long long)((__int128)mod_inv(a / g, m2) * ((c / g) % m2) % m2);
    return {false, r, m2};
}

long long count_class_in(long long lo, long long hi, long long r, long long step) {
    if (lo > hi) return 0;
    auto floor_div = [](long long a, long long b) {
        return a / b - ((a % b != 0) && ((a < 0) != (b < 0)) ? 1 : 0);
    };
    return floor_div(hi - r, step) - floor_div(lo - 1 - r, step);
}

struct SysDerived {
    long long L1, L2, M;          // beta moduli and n-modulus
    long long g1, g2, db1, db2;   // (b_j,d) and d_{b_j}
    long long P1v;                // P^{1-v}
    LinearClass m1c, m2c;         // per-beta m-classes
};

SysDerived derive(const CongruenceSystem& sys) {
    SysDerived d;
    d.g1 = std::gcd(sys.b1, sys.d);
    d.g2 = std::gcd(sys.b2, sys.d);
    d.db1 = sys.d / d.g1;
    d.db2 = sys.d / d.g2;
    long long Pv = sys.v ? sys.P : 1;
    d.P1v = sys.v ? 1 : sys.P;
    long long b1d = sys.b1 / d.g1, b2d = sys.b2 / d.g2;
    if ((b1d * Pv) % sys.n1 || (b2d * Pv) % sys.n2)
        throw std::invalid_argument("CongruenceSystem: n_j must divide b_{j,d} P^v");
    d.L1 = b1d * Pv / sys.n1;
    d.L2 = b2d * Pv / sys.n2;
    d.M = d.L1 * d.L2;
    return d;
}

bool band_ok(const CongruenceSystem& sys, long long m1, long long m2) {
    if (!sys.band) return true;
    long long g1 = std::gcd(sys.b1, sys.d), g2 = std::gcd(sys.b2, sys.d);
    int128 delta = (int128)sys.b1 * m1 * g2 * g2 * g2 * sys.n2 * sys.n2 -
                   (int128)sys.b2 * m2 * g1 * g1 * g1 * sys.n1 * sys.n1;
    if (delta < 0) delta = -delta;
    return (int128)sys.band->first <= delta && delta <= (int128)sys.band->second;
}

}  // namespace

long long enumerate_congruences(const CongruenceSystem& sys, long long max_tuples) {
    SysDerived der = derive(sys);
    long long count = 0, visited = 0;
    for (long long beta1 = 1; beta1 <= der.L1; ++beta1) {
        if (std::gcd(beta1, der.L1) != 1) continue;
        LinearClass c1 = solve_linear(der.db1 * beta1, der.P1v * sys.n1 * der.g1, sys.u1);
        if (c1.empty) continue;
        for (long long beta2 = 1; beta2 <= der.L2; ++beta2) {
            if (std::gcd(beta2, der.L2) != 1) continue;
            LinearClass c2 = solve_linear(der.db2 * beta2, der.P1v * sys.n2 * der.g2, sys.u2);
            if (c2.empty) continue;
            long long nr = ((-sys.sign * beta1 % der.M) * der.L2 % der.M +
                            (sys.sign * beta2 % der.M) * der.L1 % der.M) % der.M;
            nr = ((nr % der.M) + der.M) % der.M;
            for (long long n = -sys.n_abs_max; n <= sys.n_abs_max; ++n) {
                if (((n % der.M) + der.M) % der.M != nr) continue;
                for (long long m1 = sys.m_lo; m1 <= sys.m_hi; ++m1) {
                    if (((m1 % c1.step) + c1.step) % c1.step != c1.r % c1.step) continue;
                    for (long long m2 = sys.m_lo; m2 <= sys.m_hi; ++m2) {
                        if (((m2 % c2.step) + c2.step) % c2.step != c2.r % c2.step) continue;
                        if (++visited > max_tuples)
                            throw std::length_error("enumerate_congruences: tuple budget exceeded");
                        if (band_ok(sys, m1, m2)) ++count;
                    }
                }
            }
        }
    }
    return count;
}

long long enumerate_congruences_dual(const CongruenceSystem& sys, long long max_tuples) {
    SysDerived der = derive(sys);
    long long count = 0, visited = 0;
    for (long long beta1 = 1; beta1 <= der.L1; ++beta1) {
        if (std::gcd(beta1, der.L1) != 1) continue;
        LinearClass c1 = solve_linear(der.db1 * beta1, der.P1v * sys.n1 * der.g1, sys.u1);
        if (c1.empty) continue;
        for (long long beta2 = 1; beta2 <= der.L2; ++beta2) {
            if (std::gcd(beta2, der.L2) != 1) continue;
            LinearClass c2 = solve_linear(der.db2 * beta2, der.P1v * sys.n2 * der.g2, sys.u2);
            if (c2.empty) continue;
            long long nr = ((-sys.sign * beta1 % der.M) * der.L2 % der.M +
                            (sys.sign * beta2 % der.M) * der.L1 % der.M) % der.M;
            nr = ((nr % der.M) + der.M) % der.M;
            long long ncount = count_class_in(-sys.n_abs_max, sys.n_abs_max, nr, der.M);
            if (ncount == 0) continue;
            if (++visited > max_tuples)
                throw std::length_error("enumerate_congruences_dual: budget exceeded");
            if (!sys.band) {
                long long cm1 = count_class_in(sys.m_lo, sys.m_hi, c1.r, c1.step);
                long long cm2 = count_class_in(sys.m_lo, sys.m_hi, c2.r, c2.step);
                count += ncount * cm1 * cm2;
            } else {
                // walk m1 through its class, count m2 in the band interval
                long long g1 = std::gcd(sys.b1, sys.d), g2 = std::gcd(sys.b2, sys.d);
                int128 w1 = (int128)sys.b1 * g2 * g2 * g2 * sys.n2 * sys.n2;
                int128 w2 = (int128)sys.b2 * g1 * g1 * g1 * sys.n1 * sys.n1;
                long long start = sys.m_lo + ((c1.r - sys.m_lo) % c1.step + c1.step) % c1.step;
                long long pairs = 0;
                for (long long m1 = start; m1 <= sys.m_hi; m1 += c1.step) {
                    int128 base = w1 * m1;
                    long long lo = sys.band->first, hi = sys.band->second;
                    auto count_interval = [&](int128 dlo, int128 dhi) {
                        // w1 m1 - w2 m2 in [dlo, dhi]  =>  m2 in [(base-dhi)/w2, (base-dlo)/w2]
                        auto ceil_div = [](int128 a, int128 b) {
                            return a / b + ((a % b != 0) && ((a > 0) == (b > 0)) ? 1 : 0);
                        };
                        auto floor_div2 = [](int128 a, int128 b) {
                            return a / b - ((a % b != 0) && ((a < 0) != (b < 0)) ? 1 : 0);
                        };
                        int128 mlo = ceil_div(base - dhi, w2), mhi = floor_div2(base - dlo, w2);
                        long long l = (long long)std::max<int128>(mlo, sys.m_lo);
                        long long h = (long long)std::min<int128>(mhi, sys.m_hi);
                        return count_class_in(l, h, c2.r, c2.step);
                    };
                    pairs += count_interval(lo, hi) + count_interval(-hi, -lo);
                    if (lo == 0) pairs -= count_interval(0, 0);
                }
                count += ncount * pairs;
            }
        }
    }
    return count;
}

}  // namespace ant
