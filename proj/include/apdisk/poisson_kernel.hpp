#pragma once

#include "apdisk/types.hpp"

namespace apdisk {

/// Evaluation point of the circle kernels: radius r in [0, 1] and angle
/// difference theta - t (reduced mod 2*pi internally). r = 1 is allowed only
/// away from the kernel singularity dtheta = 0 (mod 2*pi).
struct KernelPoint {
    double r;
    double dtheta;
};

/// Poisson kernel (1 - r^2) / (1 + r^2 - 2 r cos(dtheta)).
/// Strictly positive for r < 1; zero at the rim away from the singularity.
double poisson_eval(const KernelPoint& p);
inline double poisson_eval(double r, double dtheta) { return poisson_eval({r, dtheta}); }

/// l-th angular derivative of the Poisson kernel. Computed from an exact
/// recurrence over the rational-trigonometric term representation, not by
/// nested numeric differentiation. order = 0 agrees with poisson_eval.
double poisson_dtheta(int order, const KernelPoint& p);
inline double poisson_dtheta(int order, double r, double dtheta) {
    return poisson_dtheta(order, {r, dtheta});
}

/// Herglotz kernel (1 + e^{-it} z) / (1 - e^{-it} z). Its real part is the
/// Poisson kernel at (|z|, arg z - t).
Complex herglotz_eval(Complex z, double t, double pole_tol = 1e-14);

/// z-derivative of the Herglotz kernel: 2 e^{-it} / (1 - e^{-it} z)^2.
Complex herglotz_dz(Complex z, double t, double pole_tol = 1e-14);

}  // namespace apdisk
