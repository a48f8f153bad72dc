#pragma once

#include "ant/jet.hpp"

namespace ant {

// Fixed smooth cutoffs used throughout:
//   bump_U:    even, = 1 on [-2,2], supported in [-2.5,2.5]
//   annulus_W: even, supported on [-2,-1] u [1,2], = 1 on +-[1.25,1.75]
//   inert_V:   supported on [1,2], = 1 on [1.25,1.75]
//   plateau_V0: = 1 on [1,2], supported in [0.875,2.125]
enum class WindowKind { bump_U, annulus_W, inert_V, plateau_V0 };

// exp(-1/s) for s > 0, else 0; works on doubles and jets
template <class T>
T decay_exp(const T& s) {
    if (scalar_value(s) <= 0) return T{} * 0.0;
    return jet_exp(T{} * 0.0 - s.reciprocal());
}
inline double decay_exp(double s) { return s <= 0 ? 0.0 : std::exp(-1.0 / s); }

// C-infinity step: 0 for s <= 0, 1 for s >= 1, monotone between
template <class T>
T cinf_step(const T& s) {
    double sv = scalar_value(s);
    if (sv <= 0) return s * 0.0;
    if (sv >= 1) return s * 0.0 + 1.0;
    T b0 = decay_exp(s);
    T b1 = decay_exp(1.0 - s);
    return b0 / (b0 + b1);
}

template <class T>
T window_value(WindowKind kind, const T& t) {
    double tv = scalar_value(t);
    switch (kind) {
        case WindowKind::bump_U: {
            T u = tv < 0 ? -t : t;
            double uv = scalar_value(u);
            if (uv <= 2.0) return t * 0.0 + 1.0;
            if (uv >= 2.5) return t * 0.0;
            return cinf_step((u - 2.5) * (-2.0));
        }
        case WindowKind::annulus_W: {
            T u = tv < 0 ? -t : t;
            double uv = scalar_value(u);
            if (uv <= 1.0 || uv >= 2.0) return t * 0.0;
            return cinf_step((u - 1.0) * 4.0) * cinf_step((u - 2.0) * (-4.0));
        }
        case WindowKind::inert_V: {
            if (tv <= 1.0 || tv >= 2.0) return t * 0.0;
            return cinf_step((t - 1.0) * 4.0) * cinf_step((t - 2.0) * (-4.0));
        }
        case WindowKind::plateau_V0: {
            if (tv >= 1.0 && tv <= 2.0) return t * 0.0 + 1.0;
            if (tv <= 0.875 || tv >= 2.125) return t * 0.0;
            if (tv < 1.0) return cinf_step((t - 0.875) * 8.0);
            return cinf_step((t - 2.125) * (-8.0));
        }
    }
    return t * 0.0;
}

struct SmoothWindow {
    WindowKind kind;

    explicit SmoothWindow(WindowKind k) : kind(k) {}

    double evaluate(double t) const { return window_value(kind, t); }
    double operator()(double t) const { return evaluate(t); }

    // analytic derivatives up to order 6 via truncated Taylor propagation
    double derivative(int j, double t) const {
        if (j == 0) return evaluate(t);
        auto jet = window_value(kind, Jet<6>::variable(t));
        return jet.derivative(j);
    }

    double support_lo() const {
        switch (kind) {
            case WindowKind::bump_U: return -2.5;
            case WindowKind::annulus_W: return -2.0;
            case WindowKind::inert_V: return 1.0;
            case WindowKind::plateau_V0: return 0.875;
        }
        return 0;
    }
    double support_hi() const {
        switch (kind) {
            case WindowKind::bump_U: return 2.5;
            case WindowKind::annulus_W: return 2.0;
            case WindowKind::inert_V: return 2.0;
            case WindowKind::plateau_V0: return 2.125;
        }
        return 0;
    }
};

}  // namespace ant
