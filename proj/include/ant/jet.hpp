#pragma once

#include <array>
#include <cmath>

namespace ant {

// Truncated Taylor coefficients (value plus N derivatives) propagated
// through arithmetic and exp. c[k] stores f^(k)(t)/k!.
template <int N>
struct Jet {
    std::array<double, N + 1> c{};

    static Jet variable(double x) {
        Jet j;
        j.c[0] = x;
        if constexpr (N >= 1) j.c[1] = 1.0;
        return j;
    }
    static Jet constant(double x) {
        Jet j;
        j.c[0] = x;
        return j;
    }

    double value() const { return c[0]; }
    double derivative(int k) const {
        double fact = 1.0;
        for (int i = 2; i <= k; ++i) fact *= i;
        return c[k] * fact;
    }

    Jet operator-() const {
        Jet r;
        for (int k = 0; k <= N; ++k) r.c[k] = -c[k];
        return r;
    }
    Jet operator+(const Jet& o) const {
        Jet r;
        for (int k = 0; k <= N; ++k) r.c[k] = c[k] + o.c[k];
        return r;
    }
    Jet operator-(const Jet& o) const {
        Jet r;
        for (int k = 0; k <= N; ++k) r.c[k] = c[k] - o.c[k];
        return r;
    }
    Jet operator*(const Jet& o) const {
        Jet r;
        for (int k = 0; k <= N; ++k)
            for (int j = 0; j <= k; ++j) r.c[k] += c[j] * o.c[k - j];
        return r;
    }
    Jet operator+(double s) const {
        Jet r = *this;
        r.c[0] += s;
        return r;
    }
    Jet operator-(double s) const {
        Jet r = *this;
        r.c[0] -= s;
        return r;
    }
    Jet operator*(double s) const {
        Jet r;
        for (int k = 0; k <= N; ++k) r.c[k] = c[k] * s;
        return r;
    }
    friend Jet operator*(double s, const Jet& j) { return j * s; }
    friend Jet operator-(double s, const Jet& j) { return (-j) + s; }
    friend Jet operator+(double s, const Jet& j) { return j + s; }

    Jet reciprocal() const {
        Jet r;
        r.c[0] = 1.0 / c[0];
        for (int k = 1; k <= N; ++k) {
            double acc = 0.0;
            for (int j = 1; j <= k; ++j) acc += c[j] * r.c[k - j];
            r.c[k] = -acc / c[0];
        }
        return r;
    }
    Jet operator/(const Jet& o) const { return *this * o.reciprocal(); }
    Jet operator/(double s) const { return *this * (1.0 / s); }
};

template <int N>
Jet<N> jet_exp(const Jet<N>& u) {
    Jet<N> y;
    y.c[0] = std::exp(u.c[0]);
    for (int k = 1; k <= N; ++k) {
        double acc = 0.0;
        for (int j = 1; j <= k; ++j) acc += j * u.c[j] * y.c[k - j];
        y.c[k] = acc / k;
    }
    return y;
}

template <int N>
Jet<N> jet_log(const Jet<N>& u) {
    Jet<N> l;
    l.c[0] = std::log(u.c[0]);
    for (int k = 1; k <= N; ++k) {
        double acc = u.c[k] * k;
        for (int j = 1; j < k; ++j) acc -= j * l.c[j] * u.c[k - j];
        l.c[k] = acc / (k * u.c[0]);
    }
    return l;
}

template <int N>
Jet<N> jet_pow(const Jet<N>& u, double alpha) {
    return jet_exp(jet_log(u) * alpha);
}

inline double jet_exp(double u) { return std::exp(u); }
inline double scalar_value(double x) { return x; }
template <int N>
double scalar_value(const Jet<N>& j) {
    return j.value();
}

}  // namespace ant
