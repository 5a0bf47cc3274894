#pragma once

#include <string>
#include <vector>

#include "apdisk/harmonic_extension.hpp"
#include "apdisk/types.hpp"

namespace apdisk {

enum class Verdict { converges, diverges, inconclusive };

std::string to_string(Verdict v);

/// Per-radius sup-error records of a radial sweep with fitted exponents.
struct ConvergenceReport {
    std::vector<int> orders;
    std::vector<double> radii;
    Eigen::MatrixXd sup_errors;          // orders x radii, against the rim reference
    Eigen::MatrixXd sup_norms;           // orders x radii, M_l(r) = sup over angles
    std::vector<double> fitted_exponent; // error ~ (1-r)^alpha per order
    std::vector<Verdict> verdicts;
};

/// Sup over M angles of the difference between the l-th angular derivative of
/// f at radius r and at the rim (exact for assumed_radius >= 1; angular
/// derivatives formed exactly through the chain-rule polynomials).
ConvergenceReport radial_sweep(const PowerSeries& f, const std::vector<int>& orders,
                               const std::vector<double>& radii, int M = 1024);

/// Max grid discrepancy between central differences of g(t) = f(e^{it}) and
/// i e^{it} f'(e^{it}).
double verify_trace_formula(const PowerSeries& f, int M, double h);

struct ClassifierThresholds {
    double alpha_div = 0.1;         // fitted growth slope above which an order diverges
    double residual_tol = 0.1;      // max RMS residual for a trusted fit
    int j_min = 3;                  // radius schedule rho_j = 1 - 2^-j
    int j_max = 14;
    int fit_j_min = 7;              // pre-asymptotic radii kept out of the fit
    double saturation_factor = 2.0; // radii with 2^j >= factor * degree are truncation-limited
    int grid = 1024;
};

struct OrderEvidence {
    int order = 0;
    std::vector<double> sup_norms;  // M_l(rho_j) on the full schedule
    double slope = 0.0;
    double residual = 0.0;
    Verdict verdict = Verdict::inconclusive;
    bool forced = false;  // verdict forced divergent by a lower order
};

struct ApClassification {
    int p_hat = 0;
    int p_cap = 0;
    bool capped = false;       // no divergence found up to the cap
    bool conclusive = true;    // false when an undominated order came back inconclusive
    std::vector<OrderEvidence> evidence;
    ClassifierThresholds thresholds;
};

/// Heuristic A^p classification by growth-exponent fitting of
/// M_l(rho) = sup_{|z|=rho} |f^{(l)}(z)| on the dyadic radius schedule.
ApClassification classify_Ap(const PowerSeries& f, int p_max,
                             const ClassifierThresholds& thresholds = {});

struct ArcDecayReport {
    std::vector<double> radii;
    std::vector<double> sup_values;       // sup over the compact window
    std::vector<double> bounds;           // explicit kernel bound (order 1 only)
    bool bound_satisfied = true;          // every sampled point below the bound
    bool decreasing = true;
};

/// Checks uniform decay of the arc extension on a compact window of the
/// complementary arc, and (for order 1) the explicit kernel bound.
ArcDecayReport arc_decay_check(const ArcTrace& u, double theta1, double theta2, int order,
                               const std::vector<double>& radii, int angle_samples = 64,
                               const ExtensionConfig& cfg = {});

struct ArcConvergenceReport {
    std::vector<double> radii;
    std::vector<double> sup_errors;
    bool decreasing = true;
};

/// Checks that the arc extension converges to u^{(l)} on a compact window
/// [c, d] inside (a, b), with the reference derivative obtained by spectral
/// differentiation of the smooth completion.
ArcConvergenceReport arc_convergence_check(const ArcTrace& u, int order, double c, double d,
                                           const std::vector<double>& radii, int completion_M = 1024,
                                           int angle_samples = 33, const ExtensionConfig& cfg = {});

struct ArcClassification {
    double window_lo = 0.0, window_hi = 0.0;
    std::vector<OrderEvidence> evidence;
    bool conclusive = true;
    double trace_formula_discrepancy = -1.0;  // filled when order 1 converges
};

/// classify_Ap-style growth fitting with the sup restricted to an angle
/// window compactly inside the arc (a, b). Window defaults to the middle
/// half of the arc.
ArcClassification arc_classify(const PowerSeries& f, double a, double b, int p,
                               const ClassifierThresholds& thresholds = {},
                               double window_margin = 0.25);

}  // namespace apdisk
