#pragma once

#include <cstdint>
#include <vector>

#include "apdisk/function_space.hpp"
#include "apdisk/types.hpp"

namespace apdisk {

/// Exact Gaussian integer a + b*i.
struct GaussInt {
    long long re = 0;
    long long im = 0;

    friend GaussInt operator+(GaussInt x, GaussInt y) { return {x.re + y.re, x.im + y.im}; }
    friend GaussInt operator-(GaussInt x, GaussInt y) { return {x.re - y.re, x.im - y.im}; }
    friend GaussInt operator*(GaussInt x, GaussInt y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    friend GaussInt operator*(long long s, GaussInt x) { return {s * x.re, s * x.im}; }
    friend bool operator==(GaussInt x, GaussInt y) { return x.re == y.re && x.im == y.im; }
    bool is_zero() const { return re == 0 && im == 0; }
    double modulus() const { return std::hypot(double(re), double(im)); }
    Complex to_complex() const { return {double(re), double(im)}; }
};

inline constexpr GaussInt kGaussI{0, 1};

/// Polynomial with Gaussian-integer coefficients, c[k] * x^k.
struct GaussPoly {
    std::vector<GaussInt> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    GaussInt coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c.size())) ? c[k] : GaussInt{};
    }
    Complex eval(Complex x) const {
        Complex acc = 0.0;
        for (int k = degree(); k >= 0; --k) acc = acc * x + c[k].to_complex();
        return acc;
    }
    /// Sum of the absolute values (moduli) of the coefficients.
    double coeff_abs_sum() const {
        double s = 0.0;
        for (const GaussInt& g : c) s += g.modulus();
        return s;
    }
    void trim() {
        while (c.size() > 1 && c.back().is_zero()) c.pop_back();
    }
};

/// Triangular chain-rule families for the boundary composition t -> e^{it}:
///   g^{(l)}(t) = sum_{k=1..l} P_{k,l}(e^{it}) f^{(k)}(e^{it})
///   f^{(l)}(e^{it}) = sum_{k=1..l} Q_{k,l}(e^{-it}) g^{(k)}(t)
/// with a_{k,l}, b_{k,l} the coefficient absolute-value sums of P and Q.
struct ChainRuleSystem {
    int order = 0;
    // P[l-1][k-1] = P_{k,l}, 1 <= k <= l <= order; same layout for Q.
    std::vector<std::vector<GaussPoly>> P;
    std::vector<std::vector<GaussPoly>> Q;
    Eigen::MatrixXd a;  // a(k-1, l-1) = a_{k,l}
    Eigen::MatrixXd b;

    const GaussPoly& p(int k, int l) const { return P[l - 1][k - 1]; }
    const GaussPoly& q(int k, int l) const { return Q[l - 1][k - 1]; }
};

/// P-family via the recurrence P_{k,l+1} = i z (P'_{k,l} + P_{k-1,l}),
/// seeded by P_{1,1} = i z. Asserts the leading-term structure
/// P_{l,l} = (i z)^l.
std::vector<std::vector<GaussPoly>> chain_polys(int p);

/// Q-family by exact triangular back-substitution over the Laurent ring
/// (variable w = e^{-it}).
std::vector<std::vector<GaussPoly>> inverse_polys(const std::vector<std::vector<GaussPoly>>& P);

/// Coefficient absolute-value sums (a, b) for the two families.
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> coeff_sums(
    const std::vector<std::vector<GaussPoly>>& P,
    const std::vector<std::vector<GaussPoly>>& Q);

ChainRuleSystem chain_rule_system(int p);

enum class RimPolicy { automatic, rim, interior_proxy };

struct SeminormInfo {
    double value = 0.0;
    bool proxy = false;     // computed on the dilated function f(rho z), flagged
    double radius = 1.0;    // evaluation radius
    int grid = 0;
};

/// Rim sup-norm estimate of f^{(l)}. For assumed_radius > 1 the rim grid is
/// exact. Otherwise the function is replaced by its dilation f(rho z),
/// rho = 1 - 2^-14, whose rim IS the proxy circle; the estimate is flagged.
/// grid = 0 picks a grid resolving the full coefficient support.
SeminormInfo seminorm_info(const PowerSeries& f, int order, int grid = 0,
                           RimPolicy policy = RimPolicy::automatic);
double seminorm(const PowerSeries& f, int order, int grid = 0,
                RimPolicy policy = RimPolicy::automatic);

/// sup_t |g^{(l)}(t)| via the spectral derivative of the trace.
double seminorm_trace(const BoundaryTrace& g, int order);

struct EquivalenceReport {
    int p = 0;
    bool proxy = false;
    std::vector<double> f_norms;       // |f|_0..|f|_p
    std::vector<double> g_norms;       // |g|_0..|g|_p
    // residuals are relative to the bounding side (denominator floored at 1)
    double eq0_residual = 0.0;         // (|g|_0 - |f|_0) / max(1, |f|_0), should vanish
    std::vector<double> a_residuals;   // (sum_k a_{k,l}|f|_k - |g|_l) / scale, l = 1..p
    std::vector<double> b_residuals;   // (sum_k b_{k,l}|g|_k - |f|_l) / scale, l = 1..p
};

/// Verifies the semi-norm equivalence inequalities for orders 1..p (and the
/// order-0 equality). Violations show up as negative residuals; they are
/// reported, not thrown.
EquivalenceReport check_equivalence(const PowerSeries& f, int p, int grid = 0);

}  // namespace apdisk
