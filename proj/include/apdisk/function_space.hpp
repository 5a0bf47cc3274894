#pragma once

#include <optional>

#include "apdisk/types.hpp"

namespace apdisk {

/// Horner evaluation of sum a_n z^n. Requires |z| < assumed_radius.
Complex series_eval(const PowerSeries& f, Complex z);

/// Exact term-wise differentiation; the degree drops by `order`.
PowerSeries series_derivative(const PowerSeries& f, int order);

/// Uniform samples of t -> f(rho e^{it}) on an M-point grid, computed by
/// folding the scaled coefficients onto M bins (exact to round-off for
/// rho < assumed_radius). Sampling at rho = 1 of a series with
/// assumed_radius = 1 requires the caller to assert continuity on the
/// closed disk via assert_boundary.
BoundaryTrace trace_from_series(const PowerSeries& f, double rho, int M,
                                bool assert_boundary = false);

enum class DerivScheme { spectral, central_fd };

/// l-th derivative of a periodic trace. The spectral scheme multiplies bin k
/// by (i k)^l with signed frequencies (Nyquist zeroed for odd orders); the
/// central_fd scheme applies the 2nd-order periodic stencil l times with the
/// grid step h = 2*pi/M. Sets spectrum_warning on the result when the top
/// quarter of the input spectrum carries more than 1% of the energy.
BoundaryTrace trace_derivative(const BoundaryTrace& g, int order,
                               DerivScheme scheme = DerivScheme::spectral,
                               std::optional<double> h = std::nullopt);

/// Fraction of spectral energy carried by frequencies |k| >= M/4.
double spectrum_tail_fraction(const BoundaryTrace& g);

/// Complex-valued cubic spline on a uniform grid over [a, b]. Clamped when
/// endpoint slopes are supplied, natural otherwise.
class CubicSpline {
public:
    CubicSpline(double a, double b, CVector values,
                std::optional<Complex> slope_a = std::nullopt,
                std::optional<Complex> slope_b = std::nullopt);
    Complex operator()(double t) const;

private:
    double a_, h_;
    CVector y_;
    CVector m_;  // second derivatives at the knots
};

}  // namespace apdisk
