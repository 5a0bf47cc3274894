#pragma once

#include <string>

#include "apdisk/boundary_smoothness.hpp"
#include "apdisk/types.hpp"

namespace apdisk {

enum class CertificateStatus { verified, asserted, failed };

/// Raised when a candidate disk map fails its chart checks; carries a
/// concrete witness (derivative root or intersecting segment pair).
class ChartRejection : public std::runtime_error {
public:
    ChartRejection(std::string kind, Complex wa, Complex wb, const std::string& what)
        : std::runtime_error(what), kind(std::move(kind)), witness_a(wa), witness_b(wb) {}
    std::string kind;    // "derivative_root" or "self_intersection"
    Complex witness_a;   // root location, or first segment midpoint
    Complex witness_b;   // unused, or second segment midpoint
};

/// Disk map phi analytic on a disk of radius > 1, with phi' nonvanishing on
/// the closed unit disk and a simple boundary curve gamma(t) = phi(e^{it}).
struct AnalyticDiskMap {
    PowerSeries phi;
    CertificateStatus injectivity = CertificateStatus::asserted;
    int certificate_grid = 0;
};

/// Boundary parametrization samples of an analytic Jordan domain.
struct JordanChart {
    AnalyticDiskMap map;
    CVector gamma;        // gamma(t_j) on the M-grid
    CVector gamma_prime;  // i e^{it_j} phi'(e^{it_j})

    int size() const { return static_cast<int>(gamma.size()); }
    double angle(int j) const { return kTwoPi * j / size(); }
};

/// Builds and certifies a chart: derivative roots located through the
/// companion matrix of phi', injectivity checked by a pairwise segment
/// intersection scan. Throws ChartRejection with a witness on failure.
JordanChart build_chart(const PowerSeries& phi, int M = 1024, int injectivity_segments = 4096);

struct Composition {
    PowerSeries series;    // f(phi(z)) truncated
    double tail_estimate;  // max rim-grid gap between direct and truncated evaluation
};

/// Series composition f(phi(z)) with truncated arithmetic.
Composition compose_series(const PowerSeries& f, const PowerSeries& phi, int max_degree = 256);

/// Samples g(t) = f(gamma(t)) on the chart grid through the composed series;
/// throws when the composition tail estimate exceeds tail_tol.
BoundaryTrace transfer_trace(const PowerSeries& f, const JordanChart& chart,
                             double tail_tol = 1e-8);

/// Max over the grid of |FD_h[t -> F(gamma(t))] - F'(gamma(t)) gamma'(t)|.
double verify_chain_rule(const PowerSeries& F, const JordanChart& chart, double h);

/// Pulls the composition back to the disk and delegates to classify_Ap.
/// Marked inconclusive when the composition tail estimate exceeds tail_tol.
ApClassification classify_Ap_domain(const Composition& comp, const JordanChart& chart, int p_max,
                                    const ClassifierThresholds& thresholds = {},
                                    double tail_tol = 1e-8);

/// sup_t |d^l (f . gamma)/dt^l| for l = 0..p via spectral differentiation of
/// the transferred trace.
std::vector<double> domain_seminorms(const PowerSeries& f, const JordanChart& chart, int p,
                                     bool* spectrum_warning = nullptr);

}  // namespace apdisk
