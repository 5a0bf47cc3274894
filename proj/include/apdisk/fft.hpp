#pragma once

#include <unsupported/Eigen/FFT>

#include "apdisk/types.hpp"

namespace apdisk {

/// X_k = sum_j x_j e^{-2*pi*i*j*k/M}
inline CVector fft_forward(const CVector& x) {
    Eigen::FFT<double> fft;
    std::vector<Complex> in(x.data(), x.data() + x.size()), out;
    fft.fwd(out, in);
    return Eigen::Map<const CVector>(out.data(), static_cast<Eigen::Index>(out.size()));
}

/// x_j = (1/M) sum_k X_k e^{+2*pi*i*j*k/M}
inline CVector fft_inverse(const CVector& X) {
    Eigen::FFT<double> fft;
    std::vector<Complex> in(X.data(), X.data() + X.size()), out;
    fft.inv(out, in);
    return Eigen::Map<const CVector>(out.data(), static_cast<Eigen::Index>(out.size()));
}

/// Bin coefficients c_k with g_j = sum_k c_k e^{i*k*theta_j}.
inline CVector fourier_coeffs(const CVector& samples) {
    return fft_forward(samples) / static_cast<double>(samples.size());
}

/// Samples g_j = sum_k c_k e^{i*k*theta_j} from bin coefficients c.
inline CVector samples_from_coeffs(const CVector& coeffs) {
    return fft_inverse(coeffs) * static_cast<double>(coeffs.size());
}

/// Signed frequency of DFT bin k for an M-point transform.
inline int signed_freq(int k, int M) { return k <= M / 2 ? k : k - M; }

/// Trigonometric interpolation of periodic samples onto a finer power-of-two
/// grid (zero-padded spectrum). Q must be >= M.
CVector resample_trig(const CVector& samples, int Q);

/// Evaluate sum_k c_k e^{i*k*t} (signed frequencies) at an arbitrary angle.
Complex eval_fourier(const CVector& coeffs, double t);

}  // namespace apdisk
