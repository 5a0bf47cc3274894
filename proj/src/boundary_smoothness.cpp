#include "apdisk/boundary_smoothness.hpp"

#include <algorithm>
#include <cmath>

#include "apdisk/fft.hpp"
#include "apdisk/seminorms.hpp"

namespace apdisk {
namespace {

// Horner evaluation without the convergence-radius guard; used where the
// caller has asserted continuity up to the evaluation circle.
Complex horner(const PowerSeries& f, Complex z) {
    Complex acc = 0.0;
    for (int n = f.degree(); n >= 0; --n) acc = acc * z + f.coeffs[n];
    return acc;
}

struct LineFit {
    double slope = 0.0;
    double residual = 0.0;
};

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    const int n = static_cast<int>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    LineFit fit;
    const double denom = n * sxx - sx * sx;
    if (n < 2 || denom == 0.0) return fit;
    fit.slope = (n * sxy - sx * sy) / denom;
    const double intercept = (sy - fit.slope * sx) / n;
    double ss = 0.0;
    for (int i = 0; i < n; ++i) {
        const double r = y[i] - (fit.slope * x[i] + intercept);
        ss += r * r;
    }
    fit.residual = std::sqrt(ss / n);
    return fit;
}

/// Exact l-th angular derivative trace of f at radius r through the
/// chain-rule polynomials.
CVector angular_derivative_trace(const PowerSeries& f, int order, double r, int M,
                                 const ChainRuleSystem* sys) {
    if (order == 0) return trace_from_series(f, r, M, true).samples;
    CVector acc = CVector::Zero(M);
    for (int k = 1; k <= order; ++k) {
        const CVector fk = trace_from_series(series_derivative(f, k), r, M, true).samples;
        const GaussPoly& pkl = sys->p(k, order);
        for (int j = 0; j < M; ++j)
            acc[j] += pkl.eval(std::polar(r, kTwoPi * j / M)) * fk[j];
    }
    return acc;
}

}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::converges: return "converges";
        case Verdict::diverges: return "diverges";
        default: return "inconclusive";
    }
}

ConvergenceReport radial_sweep(const PowerSeries& f, const std::vector<int>& orders,
                               const std::vector<double>& radii, int M) {
    if (radii.empty()) throw std::invalid_argument("radial_sweep: empty radius schedule");
    for (size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] > 0) || !(radii[i] < 1) || (i && !(radii[i] > radii[i - 1])))
            throw std::invalid_argument("radial_sweep: radii must increase strictly toward 1");
    }
    if (!(f.assumed_radius >= 1.0))
        throw std::domain_error("radial_sweep: f must be declared continuous on the closed disk");
    int max_order = 0;
    for (int l : orders) max_order = std::max(max_order, l);
    ChainRuleSystem sys;
    if (max_order >= 1) sys = chain_rule_system(max_order);

    ConvergenceReport rep;
    rep.orders = orders;
    rep.radii = radii;
    rep.sup_errors.resize(orders.size(), radii.size());
    rep.sup_norms.resize(orders.size(), radii.size());
    for (size_t io = 0; io < orders.size(); ++io) {
        const int l = orders[io];
        // rim reference: spectral derivative of the rim trace
        BoundaryTrace rim;
        rim.samples = trace_from_series(f, 1.0, M, true).samples;
        const CVector ref = trace_derivative(rim, l).samples;
        for (size_t ir = 0; ir < radii.size(); ++ir) {
            const CVector at_r = angular_derivative_trace(f, l, radii[ir], M, &sys);
            rep.sup_errors(io, ir) = (at_r - ref).cwiseAbs().maxCoeff();
            rep.sup_norms(io, ir) = at_r.cwiseAbs().maxCoeff();
        }
        std::vector<double> x, y;
        for (size_t ir = 0; ir < radii.size(); ++ir) {
            if (rep.sup_errors(io, ir) <= 0) continue;
            x.push_back(std::log(1.0 - radii[ir]));
            y.push_back(std::log(rep.sup_errors(io, ir)));
        }
        const LineFit fit = fit_line(x, y);
        rep.fitted_exponent.push_back(fit.slope);
        if (x.empty()) {
            rep.verdicts.push_back(Verdict::converges);  // identically zero error
        } else if (fit.slope > 0.05 &&
                   rep.sup_errors(io, radii.size() - 1) < rep.sup_errors(io, 0) + 1e-300) {
            rep.verdicts.push_back(Verdict::converges);
        } else if (fit.slope < -0.05) {
            rep.verdicts.push_back(Verdict::diverges);
        } else {
            rep.verdicts.push_back(Verdict::inconclusive);
        }
    }
    return rep;
}

double verify_trace_formula(const PowerSeries& f, int M, double h) {
    if (M < 2 || !(h > 0)) throw std::invalid_argument("verify_trace_formula: bad grid");
    const PowerSeries fp = series_derivative(f, 1);
    double worst = 0.0;
    for (int j = 0; j < M; ++j) {
        const double t = kTwoPi * j / M;
        const Complex fd =
            (horner(f, std::polar(1.0, t + h)) - horner(f, std::polar(1.0, t - h))) / (2.0 * h);
        const Complex exact = Complex(0, 1) * std::polar(1.0, t) * horner(fp, std::polar(1.0, t));
        worst = std::max(worst, std::abs(fd - exact));
    }
    return worst;
}

namespace {

OrderEvidence fit_order_evidence(int l, const std::vector<double>& sup_norms,
                                 const std::vector<int>& schedule_j,
                                 const std::vector<bool>& in_window,
                                 const ClassifierThresholds& thr) {
    OrderEvidence ev;
    ev.order = l;
    ev.sup_norms = sup_norms;
    std::vector<double> x, y;
    for (size_t i = 0; i < sup_norms.size(); ++i) {
        if (!in_window[i]) continue;
        x.push_back(schedule_j[i] * std::log(2.0));  // -log(1 - rho_j)
        y.push_back(std::log(std::max(sup_norms[i], 1e-300)));
    }
    const LineFit fit = fit_line(x, y);
    ev.slope = fit.slope;
    ev.residual = fit.residual;
    if (fit.residual > thr.residual_tol)
        ev.verdict = Verdict::inconclusive;
    else
        ev.verdict = fit.slope > thr.alpha_div ? Verdict::diverges : Verdict::converges;
    return ev;
}

template <typename SupNormAt>  // double(int l, double rho)
ApClassification classify_by_growth(int degree, double assumed_radius, int p_max,
                                    const ClassifierThresholds& thr, SupNormAt&& sup_at) {
    if (p_max < 0 || p_max == kUnboundedOrder)
        throw std::invalid_argument("classifier: p_max must be finite");
    ApClassification out;
    out.p_cap = p_max;
    out.thresholds = thr;

    std::vector<int> schedule_j;
    std::vector<double> rhos;
    std::vector<bool> in_window;
    for (int j = thr.j_min; j <= thr.j_max; ++j) {
        schedule_j.push_back(j);
        rhos.push_back(1.0 - std::ldexp(1.0, -j));
        // exclude pre-asymptotic radii; for truncated series (radius <= 1)
        // also exclude radii the truncation cannot resolve
        bool ok = j >= thr.fit_j_min;
        if (assumed_radius <= 1.0 && std::ldexp(1.0, j) >= thr.saturation_factor * degree)
            ok = false;
        in_window.push_back(ok);
    }
    if (std::count(in_window.begin(), in_window.end(), true) < 3)
        in_window.assign(in_window.size(), true);  // tiny schedules: fit everything

    bool diverged = false;
    out.p_hat = p_max;
    for (int l = 0; l <= p_max; ++l) {
        std::vector<double> norms;
        for (double rho : rhos) norms.push_back(sup_at(l, rho));
        OrderEvidence ev = fit_order_evidence(l, norms, schedule_j, in_window, thr);
        if (diverged) {
            ev.forced = true;
            ev.verdict = Verdict::diverges;  // verdict monotonicity
        } else if (ev.verdict == Verdict::diverges) {
            diverged = true;
            out.p_hat = l - 1;
        } else if (ev.verdict == Verdict::inconclusive) {
            out.conclusive = false;
            out.p_hat = l - 1;
            diverged = true;  // stop trusting higher orders
        }
        out.evidence.push_back(std::move(ev));
    }
    out.capped = !diverged && out.conclusive;
    return out;
}

}  // namespace

ApClassification classify_Ap(const PowerSeries& f, int p_max, const ClassifierThresholds& thr) {
    const int M = thr.grid;
    return classify_by_growth(
        f.degree(), f.assumed_radius, p_max, thr, [&](int l, double rho) {
            const PowerSeries d = series_derivative(f, l);
            return trace_from_series(d, std::min(rho, 1.0), M, true).samples.cwiseAbs().maxCoeff();
        });
}

ArcDecayReport arc_decay_check(const ArcTrace& u, double theta1, double theta2, int order,
                               const std::vector<double>& radii, int angle_samples,
                               const ExtensionConfig& cfg) {
    validate_arc(u);
    if (!(theta2 >= theta1)) throw std::invalid_argument("arc_decay_check: empty window");
    const double rel1 = wrap_angle(theta1 - u.a);
    const double rel2 = rel1 + (theta2 - theta1);
    if (!(rel1 > u.b - u.a) || !(rel2 < kTwoPi))
        throw std::invalid_argument("arc_decay_check: window not inside the complementary open arc");

    const double sup_u = u.samples.cwiseAbs().maxCoeff();
    const double cosM = std::max(std::cos(theta1 - u.b), std::cos(theta2 - u.a));
    ArcDecayReport rep;
    rep.radii = radii;
    for (double r : radii) {
        double sup = 0.0;
        const double bound =
            sup_u / kTwoPi * 2.0 * r * (1.0 - r * r) / ((1.0 - r) * (1.0 - r) + 2.0 * r * (1.0 - cosM));
        for (int i = 0; i < angle_samples; ++i) {
            const double th = theta1 + (theta2 - theta1) * i / (angle_samples - 1);
            const double v = std::abs(arc_extend(u, order, std::polar(r, th), cfg));
            sup = std::max(sup, v);
            if (order == 1 && v > bound) rep.bound_satisfied = false;
        }
        if (!rep.sup_values.empty() && sup >= rep.sup_values.back()) rep.decreasing = false;
        rep.sup_values.push_back(sup);
        rep.bounds.push_back(order == 1 ? bound : -1.0);
    }
    return rep;
}

ArcConvergenceReport arc_convergence_check(const ArcTrace& u, int order, double c, double d,
                                           const std::vector<double>& radii, int completion_M,
                                           int angle_samples, const ExtensionConfig& cfg) {
    validate_arc(u);
    if (!(u.a < c) || !(c < d) || !(d < u.b))
        throw std::invalid_argument("arc_convergence_check: window must lie strictly inside (a, b)");
    const int p = u.endpoint_order();
    if (order > p)
        throw std::invalid_argument("arc_convergence_check: order exceeds available endpoint data");
    const BoundaryTrace completed = smooth_arc_completion(u, p, completion_M);
    const BoundaryTrace ref = trace_derivative(completed, order);
    const CVector ref_coeffs = fourier_coeffs(ref.samples);

    ArcConvergenceReport rep;
    rep.radii = radii;
    for (double r : radii) {
        double sup = 0.0;
        for (int i = 0; i < angle_samples; ++i) {
            const double th = c + (d - c) * i / (angle_samples - 1);
            const Complex a_val = arc_extend(u, order, std::polar(r, th), cfg);
            sup = std::max(sup, std::abs(a_val - eval_fourier(ref_coeffs, th)));
        }
        if (!rep.sup_errors.empty() && sup >= rep.sup_errors.back()) rep.decreasing = false;
        rep.sup_errors.push_back(sup);
    }
    return rep;
}

ArcClassification arc_classify(const PowerSeries& f, double a, double b, int p,
                               const ClassifierThresholds& thr, double window_margin) {
    if (!(b > a) || !(b - a < kTwoPi)) throw std::invalid_argument("arc_classify: invalid arc");
    if (!(window_margin > 0) || !(window_margin < 0.5))
        throw std::invalid_argument("arc_classify: window margin must be in (0, 0.5)");
    ArcClassification out;
    out.window_lo = a + window_margin * (b - a);
    out.window_hi = b - window_margin * (b - a);
    const int samples = 65;
    auto sup_at = [&](int l, double rho) {
        const PowerSeries d = series_derivative(f, l);
        double sup = 0.0;
        for (int i = 0; i < samples; ++i) {
            const double th = out.window_lo + (out.window_hi - out.window_lo) * i / (samples - 1);
            sup = std::max(sup, std::abs(horner(d, std::polar(std::min(rho, 1.0), th))));
        }
        return sup;
    };
    ApClassification cls = classify_by_growth(f.degree(), f.assumed_radius, p, thr, sup_at);
    out.evidence = cls.evidence;
    out.conclusive = cls.conclusive;

    if (cls.evidence.size() > 1 && cls.evidence[1].verdict == Verdict::converges) {
        // cross-check dg/dt = i e^{it} f'(e^{it}) at the deepest resolved radius
        const double rho = 1.0 - std::ldexp(1.0, -thr.j_max);
        const double h = 1e-4;
        const PowerSeries fp = series_derivative(f, 1);
        double worst = 0.0;
        for (int i = 0; i < samples; ++i) {
            const double t = out.window_lo + (out.window_hi - out.window_lo) * i / (samples - 1);
            const Complex fd =
                (horner(f, std::polar(rho, t + h)) - horner(f, std::polar(rho, t - h))) / (2.0 * h);
            const Complex exact =
                Complex(0, 1) * rho * std::polar(1.0, t) * horner(fp, std::polar(rho, t));
            worst = std::max(worst, std::abs(fd - exact));
        }
        out.trace_formula_discrepancy = worst;
    }
    return out;
}

}  // namespace apdisk
