#pragma once

#include "apdisk/function_space.hpp"
#include "apdisk/types.hpp"

namespace apdisk {

struct ExtensionConfig {
    double node_constant = 64.0;  // quadrature nodes scale as node_constant/(1-r)
    int oversample = 4;           // full-circle floor: Q >= oversample * M
    int min_nodes = 1024;
    long max_nodes = 1 << 22;
    double delta_min = 1e-8;      // proximity guard for rim evaluations off-arc
};

/// Trapezoid approximation of (1/2pi) int u(t) P_z(t) dt over the full
/// circle, with the trace trigonometrically interpolated onto the adaptive
/// node set. Reproduces f(z) when u is the rim trace of f in A(D).
Complex poisson_extend(const BoundaryTrace& u, Complex z, const ExtensionConfig& cfg = {});

struct CommutedDerivative {
    Complex primary;      // u^{(l)} convolved with P_r
    Complex alternate;    // u convolved with d^l P / d theta^l
    double discrepancy;   // |primary - alternate|
};

/// l-th angular derivative of the Poisson extension, evaluated both ways the
/// commutation identity allows.
CommutedDerivative poisson_extend_dtheta(const BoundaryTrace& u, int order, Complex z,
                                         const ExtensionConfig& cfg = {});

/// Arc-localized Poisson integral (1/2pi) int_a^b u(t) (d^l P/d theta^l) dt,
/// on a graded composite-trapezoid mesh clustered at the arc endpoints.
/// For |z| = 1 off the closed arc the value is exactly 0; |z| > 1 is
/// unsupported.
Complex arc_extend(const ArcTrace& u, int order, Complex z, const ExtensionConfig& cfg = {});

/// Poisson integral of a periodic trace restricted to a parameter
/// sub-interval; the trace enters through its Fourier coefficients.
class ArcField {
public:
    ArcField(CVector fourier, double t1, double t2);
    Complex eval(int order, Complex z, const ExtensionConfig& cfg = {}) const;
    double t1() const { return t1_; }
    double t2() const { return t2_; }

private:
    CVector fourier_;
    double t1_, t2_;
};

struct SplitExtension {
    ArcField A;  // integrates over [t1, t2]
    ArcField B;  // integrates over [t2, t1 + 2pi]
};

/// Split f(z) = A(z) + B(z) along a parameter arc (Poisson integral of the
/// trace restricted to the arc and to its complement).
SplitExtension split_extension(const BoundaryTrace& g, double t1, double t2);

/// Completes arc data to a 2pi-periodic trace: equal to u on [a, b] (up to
/// resampling) and to the two-point Hermite bridge matching the endpoint
/// derivatives to order p on the complementary arc. The result claims
/// smoothness p.
BoundaryTrace smooth_arc_completion(const ArcTrace& u, int p, int M = 1024);

/// Graded quadrature rule on [t1, t2] with nodes clustered at both
/// endpoints (order-8 polynomial grading); exposed for reuse and testing.
struct ArcRule {
    RVector nodes;
    RVector weights;
};
ArcRule graded_arc_rule(double t1, double t2, int segments);

/// Nodes chosen for an arc integral evaluated at radius r.
int arc_node_count(double r, int source_size, const ExtensionConfig& cfg);

}  // namespace apdisk
