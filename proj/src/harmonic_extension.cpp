#include "apdisk/harmonic_extension.hpp"

#include <cmath>

#include "apdisk/fft.hpp"
#include "apdisk/poisson_kernel.hpp"

namespace apdisk {
namespace {

int full_circle_nodes(double r, int M, const ExtensionConfig& cfg) {
    double want = std::max({double(cfg.oversample) * M, double(cfg.min_nodes),
                            r < 1.0 ? cfg.node_constant / (1.0 - r) : double(cfg.max_nodes)});
    want = std::min(want, double(cfg.max_nodes));
    return next_pow2(static_cast<int>(std::ceil(want)));
}

Complex circle_convolve(const CVector& dense, int order, double r, double theta) {
    const int Q = static_cast<int>(dense.size());
    Complex acc = 0.0;
    for (int q = 0; q < Q; ++q) {
        const double t = kTwoPi * q / Q;
        acc += dense[q] * poisson_dtheta(order, r, theta - t);
    }
    return acc / static_cast<double>(Q);
}

// distance from z to the closed arc {e^{it} : t in [a, b]}
double arc_distance(Complex z, double a, double b) {
    const double theta = std::arg(z);
    double rel = theta - a;
    rel -= kTwoPi * std::floor(rel / kTwoPi);  // in [0, 2pi)
    if (rel <= b - a) {
        // radial projection hits the arc
        return std::abs(std::abs(z) - 1.0);
    }
    return std::min(std::abs(z - std::polar(1.0, a)), std::abs(z - std::polar(1.0, b)));
}

}  // namespace

Complex poisson_extend(const BoundaryTrace& u, Complex z, const ExtensionConfig& cfg) {
    validate_trace(u);
    const double r = std::abs(z);
    if (!(r < 1.0)) throw std::domain_error("poisson_extend: |z| must be < 1");
    const int Q = full_circle_nodes(r, u.size(), cfg);
    const CVector dense = resample_trig(u.samples, Q);
    return circle_convolve(dense, 0, r, std::arg(z));
}

CommutedDerivative poisson_extend_dtheta(const BoundaryTrace& u, int order, Complex z,
                                         const ExtensionConfig& cfg) {
    validate_trace(u);
    if (order < 0) throw std::invalid_argument("poisson_extend_dtheta: negative order");
    if (u.smoothness_claim != kUnboundedOrder && order > u.smoothness_claim)
        throw std::invalid_argument("poisson_extend_dtheta: order exceeds smoothness claim");
    const double r = std::abs(z);
    if (!(r < 1.0)) throw std::domain_error("poisson_extend_dtheta: |z| must be < 1");
    const double theta = std::arg(z);
    const int Q = full_circle_nodes(r, u.size(), cfg);

    BoundaryTrace du = trace_derivative(u, order, DerivScheme::spectral);
    CommutedDerivative out;
    out.primary = circle_convolve(resample_trig(du.samples, Q), 0, r, theta);
    out.alternate = circle_convolve(resample_trig(u.samples, Q), order, r, theta);
    out.discrepancy = std::abs(out.primary - out.alternate);
    return out;
}

ArcRule graded_arc_rule(double t1, double t2, int segments) {
    if (!(t2 > t1)) throw std::invalid_argument("graded_arc_rule: empty interval");
    if (segments < 8) segments = 8;
    // grading map v(s) = c * int_0^s (sigma(1-sigma))^7 dsigma, v(1) = 1.
    // v' vanishes to order 7 at both endpoints, which cancels the
    // Euler-Maclaurin boundary terms of the trapezoid rule through h^6.
    static const double kNorm = 51480.0;  // 1/B(8,8)
    ArcRule rule;
    rule.nodes.resize(segments + 1);
    rule.weights.resize(segments + 1);
    const double L = t2 - t1;
    for (int i = 0; i <= segments; ++i) {
        const double s = double(i) / segments;
        // binomial expansion of (sigma(1-sigma))^7 integrated term by term
        double v = 0.0, vp = 0.0;
        static const double binom[8] = {1, -7, 21, -35, 35, -21, 7, -1};
        for (int j = 0; j < 8; ++j) {
            vp += binom[j] * std::pow(s, 7 + j);
            v += binom[j] * std::pow(s, 8 + j) / (8 + j);
        }
        rule.nodes[i] = t1 + L * kNorm * v;
        rule.weights[i] = L * kNorm * vp / segments;
    }
    rule.nodes[segments] = t2;  // pin against round-off
    return rule;
}

int arc_node_count(double r, int source_size, const ExtensionConfig& cfg) {
    double want = std::max({double(cfg.oversample) * source_size, double(cfg.min_nodes),
                            r < 1.0 ? cfg.node_constant / (1.0 - r) : double(cfg.min_nodes)});
    return static_cast<int>(std::min(std::ceil(want), double(cfg.max_nodes)));
}

Complex arc_extend(const ArcTrace& u, int order, Complex z, const ExtensionConfig& cfg) {
    validate_arc(u);
    if (order < 0) throw std::invalid_argument("arc_extend: negative order");
    const double r = std::abs(z);
    if (r > 1.0 + 1e-12)
        throw std::domain_error("arc_extend: |z| > 1 is unsupported");
    if (r >= 1.0 - 1e-15) {
        const double d = arc_distance(z, u.a, u.b);
        if (d < cfg.delta_min)
            throw std::domain_error("arc_extend: evaluation within delta_min of the closed arc");
        return Complex(0.0);  // rim values vanish off the arc, at every order
    }
    const int Q = arc_node_count(r, u.size(), cfg);
    const ArcRule rule = graded_arc_rule(u.a, u.b, Q);
    std::optional<Complex> sa, sb;
    if (!u.derivs_a.empty()) sa = u.derivs_a[0];
    if (!u.derivs_b.empty()) sb = u.derivs_b[0];
    const CubicSpline interp(u.a, u.b, u.samples, sa, sb);
    const double theta = std::arg(z);
    Complex acc = 0.0;
    for (int i = 0; i <= Q; ++i) {
        if (rule.weights[i] == 0.0) continue;
        acc += rule.weights[i] * interp(rule.nodes[i]) * poisson_dtheta(order, r, theta - rule.nodes[i]);
    }
    return acc / kTwoPi;
}

ArcField::ArcField(CVector fourier, double t1, double t2)
    : fourier_(std::move(fourier)), t1_(t1), t2_(t2) {
    if (!(t2_ > t1_) || !(t2_ - t1_ <= kTwoPi))
        throw std::invalid_argument("ArcField: invalid parameter interval");
}

Complex ArcField::eval(int order, Complex z, const ExtensionConfig& cfg) const {
    const double r = std::abs(z);
    if (!(r < 1.0)) throw std::domain_error("ArcField: |z| must be < 1");
    const int Q = arc_node_count(r, static_cast<int>(fourier_.size()), cfg);
    const ArcRule rule = graded_arc_rule(t1_, t2_, Q);
    const double theta = std::arg(z);
    Complex acc = 0.0;
    for (int i = 0; i <= Q; ++i) {
        if (rule.weights[i] == 0.0) continue;
        acc += rule.weights[i] * eval_fourier(fourier_, rule.nodes[i]) *
               poisson_dtheta(order, r, theta - rule.nodes[i]);
    }
    return acc / kTwoPi;
}

SplitExtension split_extension(const BoundaryTrace& g, double t1, double t2) {
    validate_trace(g);
    if (!(t1 >= 0) || !(t2 > t1) || !(t2 < t1 + kTwoPi))
        throw std::invalid_argument("split_extension: need 0 <= t1 < t2 < t1 + 2*pi");
    CVector c = fourier_coeffs(g.samples);
    return {ArcField(c, t1, t2), ArcField(c, t2, t1 + kTwoPi)};
}

BoundaryTrace smooth_arc_completion(const ArcTrace& u, int p, int M) {
    validate_arc(u);
    if (M < 16 || !is_pow2(M))
        throw std::invalid_argument("smooth_arc_completion: M must be a power of two >= 16");
    if (p < 0) throw std::invalid_argument("smooth_arc_completion: negative order");
    if (p > u.endpoint_order())
        throw std::invalid_argument("smooth_arc_completion: endpoint derivative data missing for requested order");

    // Hermite bridge q on the complementary arc [b, a + 2pi], built in the
    // rescaled variable tau = (t - b)/L to keep the system well conditioned.
    const double L = u.a + kTwoPi - u.b;
    const int n = 2 * (p + 1);
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(n, n);
    CVector rhs = CVector::Zero(n);
    auto fill = [&](int row0, double tau, auto deriv_at) {
        for (int j = 0; j <= p; ++j) {
            for (int k = j; k < n; ++k) {
                double fall = 1.0;
                for (int q = 0; q < j; ++q) fall *= (k - q);
                A(row0 + j, k) = fall * std::pow(tau, k - j);
            }
            rhs[row0 + j] = deriv_at(j) * std::pow(L, j);
        }
    };
    fill(0, 0.0, [&](int j) { return j == 0 ? u.samples[u.size() - 1] : u.derivs_b[j - 1]; });
    fill(p + 1, 1.0, [&](int j) { return j == 0 ? u.samples[0] : u.derivs_a[j - 1]; });
    CVector qc = A.fullPivLu().solve(rhs);

    std::optional<Complex> sa, sb;
    if (!u.derivs_a.empty()) sa = u.derivs_a[0];
    if (!u.derivs_b.empty()) sb = u.derivs_b[0];
    const CubicSpline interp(u.a, u.b, u.samples, sa, sb);

    BoundaryTrace g;
    g.smoothness_claim = p;
    g.samples.resize(M);
    for (int j = 0; j < M; ++j) {
        double t = kTwoPi * j / M;
        double rel = t - u.a;
        rel -= kTwoPi * std::floor(rel / kTwoPi);
        const double tt = u.a + rel;  // in [a, a + 2pi)
        if (tt <= u.b) {
            g.samples[j] = interp(tt);
        } else {
            const double tau = (tt - u.b) / L;
            Complex acc = 0.0;
            for (int k = n - 1; k >= 0; --k) acc = acc * tau + qc[k];
            g.samples[j] = acc;
        }
    }
    return g;
}

}  // namespace apdisk
