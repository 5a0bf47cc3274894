#pragma once

#include <complex>
#include <limits>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace apdisk {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Smoothness order standing in for "unbounded" (C^infinity).
inline constexpr int kUnboundedOrder = std::numeric_limits<int>::max();

inline bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

inline int next_pow2(int n) {
    int p = 1;
    while (p < n) p <<= 1;
    return p;
}

/// Reduce an angle to [0, 2*pi).
inline double wrap_angle(double t) {
    double w = std::fmod(t, kTwoPi);
    if (w < 0) w += kTwoPi;
    return w;
}

/// Holomorphic function as a finite Taylor expansion about 0.
/// assumed_radius is the declared radius of convergence of the function the
/// truncation stands for; members of A(D) declare assumed_radius >= 1.
struct PowerSeries {
    CVector coeffs;              // a_0 .. a_N
    double assumed_radius = 1.0;

    PowerSeries() = default;
    PowerSeries(CVector c, double radius) : coeffs(std::move(c)), assumed_radius(radius) {
        if (coeffs.size() == 0) throw std::invalid_argument("PowerSeries: empty coefficient list");
        if (!(assumed_radius > 0)) throw std::invalid_argument("PowerSeries: assumed_radius must be > 0");
    }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// Uniform samples g(2*pi*j/M), j = 0..M-1, of a 2*pi-periodic function.
/// M is a power of two, M >= 16.
struct BoundaryTrace {
    CVector samples;
    int smoothness_claim = kUnboundedOrder;
    bool spectrum_warning = false;  // set when spectral differentiation is untrustworthy

    int size() const { return static_cast<int>(samples.size()); }
    double angle(int j) const { return kTwoPi * j / size(); }
};

inline void validate_trace(const BoundaryTrace& g) {
    if (g.size() < 16 || !is_pow2(g.size()))
        throw std::invalid_argument("BoundaryTrace: sample count must be a power of two >= 16");
}

/// Samples of a function on a closed parameter arc [a, b], b - a < 2*pi,
/// on a uniform grid including both endpoints. Optional endpoint derivative
/// data (orders 1..p) supports smooth completion.
struct ArcTrace {
    double a = 0.0;
    double b = 1.0;
    CVector samples;
    std::vector<Complex> derivs_a;  // u^{(j)}(a), j = 1..p
    std::vector<Complex> derivs_b;  // u^{(j)}(b), j = 1..p

    int size() const { return static_cast<int>(samples.size()); }
    double node(int j) const { return a + (b - a) * j / (size() - 1); }
    int endpoint_order() const {
        return static_cast<int>(std::min(derivs_a.size(), derivs_b.size()));
    }
};

inline void validate_arc(const ArcTrace& u) {
    if (!(u.a >= 0) || !(u.b > u.a) || !(u.b - u.a < kTwoPi))
        throw std::invalid_argument("ArcTrace: need 0 <= a < b < a + 2*pi");
    if (u.size() < 2) throw std::invalid_argument("ArcTrace: need at least two samples");
}

/// Uniform polar evaluation lattice at a fixed interior radius.
struct CircleGrid {
    double radius = 0.0;
    int size = 0;

    CircleGrid(double r, int m) : radius(r), size(m) {
        if (!(r >= 0) || !(r < 1)) throw std::invalid_argument("CircleGrid: radius must be in [0, 1)");
        if (m < 1) throw std::invalid_argument("CircleGrid: empty grid");
    }
    double angle(int j) const { return kTwoPi * j / size; }
    Complex point(int j) const { return std::polar(radius, angle(j)); }
};

}  // namespace apdisk
