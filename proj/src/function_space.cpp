#include "apdisk/function_space.hpp"

#include <cmath>

#include "apdisk/fft.hpp"

namespace apdisk {

CVector resample_trig(const CVector& samples, int Q) {
    const int M = static_cast<int>(samples.size());
    if (Q < M || !is_pow2(Q)) throw std::invalid_argument("resample_trig: Q must be a power of two >= M");
    if (Q == M) return samples;
    CVector c = fourier_coeffs(samples);
    CVector padded = CVector::Zero(Q);
    // split at the Nyquist bin, shared between +M/2 and -M/2
    for (int k = 0; k < M / 2; ++k) padded[k] = c[k];
    for (int k = M / 2 + 1; k < M; ++k) padded[Q - M + k] = c[k];
    padded[M / 2] = 0.5 * c[M / 2];
    padded[Q - M / 2] = 0.5 * c[M / 2];
    return samples_from_coeffs(padded);
}

Complex eval_fourier(const CVector& coeffs, double t) {
    const int M = static_cast<int>(coeffs.size());
    const Complex e = std::polar(1.0, t);
    const Complex einv = std::conj(e);
    // positive frequencies 0..M/2 by Horner, then negative ones
    Complex pos = 0.0;
    for (int k = M / 2; k >= 1; --k) pos = (pos + coeffs[k]) * e;
    Complex neg = 0.0;
    for (int k = M / 2 + 1; k < M; ++k) neg += coeffs[k] * std::pow(einv, M - k);
    return coeffs[0] + pos + neg;
}

Complex series_eval(const PowerSeries& f, Complex z) {
    if (!(std::abs(z) < f.assumed_radius))
        throw std::domain_error("series_eval: |z| >= assumed_radius");
    Complex acc = 0.0;
    for (int n = f.degree(); n >= 0; --n) acc = acc * z + f.coeffs[n];
    return acc;
}

PowerSeries series_derivative(const PowerSeries& f, int order) {
    if (order < 0) throw std::invalid_argument("series_derivative: negative order");
    if (order == 0) return f;
    const int n = f.degree();
    if (order > n) {
        PowerSeries zero;
        zero.coeffs = CVector::Zero(1);
        zero.assumed_radius = f.assumed_radius;
        return zero;
    }
    PowerSeries d;
    d.assumed_radius = f.assumed_radius;
    d.coeffs = CVector::Zero(n - order + 1);
    for (int m = order; m <= n; ++m) {
        double fall = 1.0;
        for (int q = 0; q < order; ++q) fall *= (m - q);
        d.coeffs[m - order] = f.coeffs[m] * fall;
    }
    return d;
}

BoundaryTrace trace_from_series(const PowerSeries& f, double rho, int M, bool assert_boundary) {
    if (M < 16 || !is_pow2(M))
        throw std::invalid_argument("trace_from_series: M must be a power of two >= 16");
    if (rho < 0) throw std::domain_error("trace_from_series: negative radius");
    if (rho > f.assumed_radius ||
        (rho == f.assumed_radius && !(rho == 1.0 && assert_boundary)))
        throw std::domain_error("trace_from_series: radius violates assumed radius of convergence");
    // fold a_n rho^n onto bin n mod M; exact because e^{i n theta_j} is
    // M-periodic in n on the uniform grid
    CVector folded = CVector::Zero(M);
    for (int n = 0; n <= f.degree(); ++n)
        folded[n % M] += f.coeffs[n] * std::pow(rho, n);
    BoundaryTrace g;
    g.samples = samples_from_coeffs(folded);
    return g;
}

double spectrum_tail_fraction(const BoundaryTrace& g) {
    const int M = g.size();
    CVector c = fourier_coeffs(g.samples);
    double total = 0.0, tail = 0.0;
    for (int k = 0; k < M; ++k) {
        const double e = std::norm(c[k]);
        total += e;
        if (std::abs(signed_freq(k, M)) >= M / 4) tail += e;
    }
    return total > 0.0 ? tail / total : 0.0;
}

BoundaryTrace trace_derivative(const BoundaryTrace& g, int order, DerivScheme scheme,
                               std::optional<double> h) {
    validate_trace(g);
    if (order < 0) throw std::invalid_argument("trace_derivative: negative order");
    const int M = g.size();
    BoundaryTrace out;
    out.smoothness_claim = g.smoothness_claim == kUnboundedOrder
                               ? kUnboundedOrder
                               : std::max(0, g.smoothness_claim - order);
    out.spectrum_warning = g.spectrum_warning || spectrum_tail_fraction(g) > 0.01;
    if (order == 0) {
        out.samples = g.samples;
        return out;
    }
    if (scheme == DerivScheme::spectral) {
        CVector c = fourier_coeffs(g.samples);
        for (int k = 0; k < M; ++k) {
            const int freq = signed_freq(k, M);
            if (k == M / 2 && order % 2 == 1) {
                c[k] = 0.0;  // Nyquist has no well-defined odd derivative
                continue;
            }
            c[k] *= std::pow(Complex(0.0, freq), order);
        }
        out.samples = samples_from_coeffs(c);
    } else {
        const double step = kTwoPi / M;
        if (h && std::abs(*h - step) > 1e-12 * step)
            throw std::invalid_argument("trace_derivative: central_fd step must equal the grid step 2*pi/M");
        CVector cur = g.samples;
        for (int pass = 0; pass < order; ++pass) {
            CVector next(M);
            for (int j = 0; j < M; ++j)
                next[j] = (cur[(j + 1) % M] - cur[(j + M - 1) % M]) / (2.0 * step);
            cur.swap(next);
        }
        out.samples = cur;
    }
    return out;
}

CubicSpline::CubicSpline(double a, double b, CVector values,
                         std::optional<Complex> slope_a, std::optional<Complex> slope_b)
    : a_(a), y_(std::move(values)) {
    const int n = static_cast<int>(y_.size()) - 1;
    if (n < 1) throw std::invalid_argument("CubicSpline: need at least two knots");
    if (!(b > a)) throw std::invalid_argument("CubicSpline: empty interval");
    h_ = (b - a) / n;
    // tridiagonal system for knot second derivatives (Thomas algorithm)
    CVector diag = CVector::Constant(n + 1, 2.0);
    CVector rhs = CVector::Zero(n + 1);
    RVector lower = RVector::Constant(n + 1, 0.5), upper = RVector::Constant(n + 1, 0.5);
    for (int i = 1; i < n; ++i)
        rhs[i] = 3.0 * (y_[i + 1] - 2.0 * y_[i] + y_[i - 1]) / (h_ * h_);
    if (slope_a) {
        upper[0] = 1.0;
        rhs[0] = 6.0 / h_ * ((y_[1] - y_[0]) / h_ - *slope_a);
    } else {
        upper[0] = 0.0;  // natural
    }
    if (slope_b) {
        lower[n] = 1.0;
        rhs[n] = 6.0 / h_ * (*slope_b - (y_[n] - y_[n - 1]) / h_);
    } else {
        lower[n] = 0.0;
    }
    m_ = CVector::Zero(n + 1);
    CVector cp(n + 1), dp(n + 1);
    cp[0] = upper[0] / diag[0];
    dp[0] = rhs[0] / diag[0];
    for (int i = 1; i <= n; ++i) {
        const Complex denom = diag[i] - lower[i] * cp[i - 1];
        cp[i] = upper[i] / denom;
        dp[i] = (rhs[i] - lower[i] * dp[i - 1]) / denom;
    }
    m_[n] = dp[n];
    for (int i = n - 1; i >= 0; --i) m_[i] = dp[i] - cp[i] * m_[i + 1];
}

Complex CubicSpline::operator()(double t) const {
    const int n = static_cast<int>(y_.size()) - 1;
    double s = (t - a_) / h_;
    int i = static_cast<int>(std::floor(s));
    if (i < 0) i = 0;
    if (i >= n) i = n - 1;
    const double x = s - i;  // in [0, 1]
    const double xm = 1.0 - x;
    return xm * y_[i] + x * y_[i + 1] +
           h_ * h_ / 6.0 *
               ((xm * xm * xm - xm) * m_[i] + (x * x * x - x) * m_[i + 1]);
}

}  // namespace apdisk
