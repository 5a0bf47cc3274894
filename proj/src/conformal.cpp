#include "apdisk/conformal.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "apdisk/seminorms.hpp"

namespace apdisk {
namespace {

// Horner evaluation without the convergence-radius guard; chart callers
// assert evaluability on the closed region.
Complex horner(const PowerSeries& f, Complex z) {
    Complex acc = 0.0;
    for (int n = f.degree(); n >= 0; --n) acc = acc * z + f.coeffs[n];
    return acc;
}

// roots of a polynomial via the companion matrix of its monic normalization
std::vector<Complex> poly_roots(const CVector& c) {
    int deg = static_cast<int>(c.size()) - 1;
    while (deg > 0 && std::abs(c[deg]) < 1e-14) --deg;
    if (deg == 0) return {};
    if (deg > 512) throw std::invalid_argument("poly_roots: degree above companion-matrix cap");
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -c[i] / c[deg];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
    std::vector<Complex> roots(deg);
    for (int i = 0; i < deg; ++i) roots[i] = es.eigenvalues()[i];
    return roots;
}

double point_segment_dist(Complex p, Complex a, Complex b) {
    const Complex d = b - a;
    const double len2 = std::norm(d);
    double s = len2 > 0 ? std::clamp(((p - a) * std::conj(d)).real() / len2, 0.0, 1.0) : 0.0;
    return std::abs(p - (a + s * d));
}

double cross(Complex o, Complex a, Complex b) {
    return (a.real() - o.real()) * (b.imag() - o.imag()) -
           (a.imag() - o.imag()) * (b.real() - o.real());
}

double segment_distance(Complex a1, Complex b1, Complex a2, Complex b2) {
    const double d1 = cross(a1, b1, a2), d2 = cross(a1, b1, b2);
    const double d3 = cross(a2, b2, a1), d4 = cross(a2, b2, b1);
    if (((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0))) return 0.0;  // proper crossing
    return std::min({point_segment_dist(a2, a1, b1), point_segment_dist(b2, a1, b1),
                     point_segment_dist(a1, a2, b2), point_segment_dist(b1, a2, b2)});
}

}  // namespace

JordanChart build_chart(const PowerSeries& phi, int M, int injectivity_segments) {
    if (!(phi.assumed_radius > 1.0))
        throw std::invalid_argument("build_chart: phi must be analytic beyond the closed disk");
    if (M < 16 || !is_pow2(M))
        throw std::invalid_argument("build_chart: M must be a power of two >= 16");

    const PowerSeries dphi = series_derivative(phi, 1);
    for (Complex root : poly_roots(dphi.coeffs)) {
        if (std::abs(root) <= 1.0 + 1e-12) {
            std::ostringstream msg;
            msg << "build_chart: phi' vanishes at z = " << root.real() << (root.imag() < 0 ? "" : "+")
                << root.imag() << "i inside the closed disk";
            throw ChartRejection("derivative_root", root, Complex(0.0), msg.str());
        }
    }

    JordanChart chart;
    chart.map.phi = phi;
    chart.gamma.resize(M);
    chart.gamma_prime.resize(M);
    for (int j = 0; j < M; ++j) {
        const Complex z = std::polar(1.0, kTwoPi * j / M);
        chart.gamma[j] = horner(phi, z);
        chart.gamma_prime[j] = Complex(0, 1) * z * horner(dphi, z);
        if (std::abs(chart.gamma_prime[j]) < 1e-10)
            throw ChartRejection("derivative_root", z, Complex(0.0),
                                 "build_chart: |gamma'| below 1e-10 at a grid sample");
    }

    const int Ns = injectivity_segments;
    std::vector<Complex> q(Ns);
    for (int j = 0; j < Ns; ++j) q[j] = horner(phi, std::polar(1.0, kTwoPi * j / Ns));
    const double tol = 1e-9;
    for (int i = 0; i < Ns; ++i) {
        const Complex a1 = q[i], b1 = q[(i + 1) % Ns];
        const double lox = std::min(a1.real(), b1.real()) - tol, hix = std::max(a1.real(), b1.real()) + tol;
        const double loy = std::min(a1.imag(), b1.imag()) - tol, hiy = std::max(a1.imag(), b1.imag()) + tol;
        for (int j = i + 2; j < Ns; ++j) {
            if (i == 0 && j == Ns - 1) continue;  // adjacent around the seam
            const Complex a2 = q[j], b2 = q[(j + 1) % Ns];
            if (std::max(a2.real(), b2.real()) < lox || std::min(a2.real(), b2.real()) > hix ||
                std::max(a2.imag(), b2.imag()) < loy || std::min(a2.imag(), b2.imag()) > hiy)
                continue;
            if (segment_distance(a1, b1, a2, b2) < tol) {
                std::ostringstream msg;
                msg << "build_chart: boundary segments " << i << " and " << j
                    << " intersect within tolerance";
                throw ChartRejection("self_intersection", 0.5 * (a1 + b1), 0.5 * (a2 + b2),
                                     msg.str());
            }
        }
    }
    chart.map.injectivity = CertificateStatus::verified;
    chart.map.certificate_grid = Ns;
    return chart;
}

Composition compose_series(const PowerSeries& f, const PowerSeries& phi, int max_degree) {
    if (max_degree < 1) throw std::invalid_argument("compose_series: max_degree must be positive");
    const int cap = max_degree + 1;
    // Horner in phi with degree-capped polynomial arithmetic
    CVector acc = CVector::Zero(cap);
    for (int n = f.degree(); n >= 0; --n) {
        CVector next = CVector::Zero(cap);
        for (int i = 0; i < cap; ++i) {
            if (acc[i] == Complex(0.0)) continue;
            for (int k = 0; k <= phi.degree() && i + k < cap; ++k)
                next[i + k] += acc[i] * phi.coeffs[k];
        }
        next[0] += f.coeffs[n];
        acc.swap(next);
    }

    // evaluation radius: largest circle phi maps strictly inside the declared
    // domain of f (coarse grid max, bisected); floor at 1
    double radius = 1.0;
    auto rim_max = [&](double r) {
        double m = 0.0;
        for (int j = 0; j < 256; ++j) m = std::max(m, std::abs(horner(phi, std::polar(r, kTwoPi * j / 256))));
        return m;
    };
    if (rim_max(1.0) < f.assumed_radius) {
        double lo = 1.0, hi = std::min(phi.assumed_radius, 16.0);
        for (int it = 0; it < 40; ++it) {
            const double mid = 0.5 * (lo + hi);
            (rim_max(mid) < f.assumed_radius ? lo : hi) = mid;
        }
        radius = lo;
    }

    Composition out{PowerSeries(acc, radius), 0.0};
    for (int j = 0; j < 512; ++j) {
        const Complex z = std::polar(1.0, kTwoPi * j / 512);
        out.tail_estimate =
            std::max(out.tail_estimate, std::abs(horner(f, horner(phi, z)) - horner(out.series, z)));
    }
    return out;
}

BoundaryTrace transfer_trace(const PowerSeries& f, const JordanChart& chart, double tail_tol) {
    const Composition comp = compose_series(f, chart.map.phi);
    if (comp.tail_estimate > tail_tol)
        throw std::runtime_error("transfer_trace: composition truncation estimate above tolerance");
    return trace_from_series(comp.series, 1.0, chart.size(), true);
}

double verify_chain_rule(const PowerSeries& F, const JordanChart& chart, double h) {
    if (!(h > 0)) throw std::invalid_argument("verify_chain_rule: step must be positive");
    const PowerSeries dF = series_derivative(F, 1);
    double worst = 0.0;
    for (int j = 0; j < chart.size(); ++j) {
        const double t = chart.angle(j);
        const Complex gp = horner(chart.map.phi, std::polar(1.0, t + h));
        const Complex gm = horner(chart.map.phi, std::polar(1.0, t - h));
        const Complex fd = (horner(F, gp) - horner(F, gm)) / (2.0 * h);
        const Complex exact = horner(dF, chart.gamma[j]) * chart.gamma_prime[j];
        worst = std::max(worst, std::abs(fd - exact));
    }
    return worst;
}

ApClassification classify_Ap_domain(const Composition& comp, const JordanChart& chart, int p_max,
                                    const ClassifierThresholds& thresholds, double tail_tol) {
    (void)chart;  // the analysis happens on the disk, through F . phi
    ApClassification out = classify_Ap(comp.series, p_max, thresholds);
    if (comp.tail_estimate > tail_tol) out.conclusive = false;
    return out;
}

std::vector<double> domain_seminorms(const PowerSeries& f, const JordanChart& chart, int p,
                                     bool* spectrum_warning) {
    const BoundaryTrace g = transfer_trace(f, chart);
    if (spectrum_warning) *spectrum_warning = spectrum_tail_fraction(g) > 0.01;
    std::vector<double> norms;
    for (int l = 0; l <= p; ++l) norms.push_back(seminorm_trace(g, l));
    return norms;
}

}  // namespace apdisk
