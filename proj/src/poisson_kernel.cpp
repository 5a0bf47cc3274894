#include "apdisk/poisson_kernel.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>
#include <vector>

namespace apdisk {
namespace {

// One term of d^l P / d theta^l:
//   coeff * (1 - r^2) * r^rpow * sin^sinpow(dt) * cos^cospow(dt) / D^denpow
// with D = 1 + r^2 - 2 r cos(dt). Differentiating in theta maps a term to
// three terms, so the whole family stays closed under differentiation.
struct Term {
    double coeff;
    int rpow, sinpow, cospow, denpow;
};

using TermKey = std::tuple<int, int, int, int>;

std::vector<Term> differentiate(const std::vector<Term>& in) {
    std::map<TermKey, double> acc;
    auto add = [&acc](double c, int rp, int sp, int cp, int dp) {
        if (c != 0.0) acc[{rp, sp, cp, dp}] += c;
    };
    for (const Term& t : in) {
        if (t.sinpow > 0) add(t.coeff * t.sinpow, t.rpow, t.sinpow - 1, t.cospow + 1, t.denpow);
        if (t.cospow > 0) add(-t.coeff * t.cospow, t.rpow, t.sinpow + 1, t.cospow - 1, t.denpow);
        // d/dtheta D^{-k} = -k D^{-k-1} * 2 r sin(dt)
        add(-2.0 * t.denpow * t.coeff, t.rpow + 1, t.sinpow + 1, t.cospow, t.denpow + 1);
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (const auto& [key, c] : acc) {
        if (c == 0.0) continue;
        auto [rp, sp, cp, dp] = key;
        out.push_back({c, rp, sp, cp, dp});
    }
    return out;
}

const std::vector<Term>& kernel_terms(int order) {
    static std::mutex mtx;
    static std::vector<std::vector<Term>> table = {{{1.0, 0, 0, 0, 1}}};
    std::lock_guard<std::mutex> lock(mtx);
    while (static_cast<int>(table.size()) <= order)
        table.push_back(differentiate(table.back()));
    return table[order];
}

double ipow(double x, int n) {
    double v = 1.0;
    for (int i = 0; i < n; ++i) v *= x;
    return v;
}

double reduce_dtheta(double dtheta) {
    // remainder lands in [-pi, pi]; the kernels are even/odd about 0 so the
    // representative is enough.
    return std::remainder(dtheta, kTwoPi);
}

void validate_point(double r, double denom) {
    if (!(r >= 0.0) || !(r <= 1.0))
        throw std::domain_error("poisson kernel: radius outside [0, 1]");
    if (denom <= 0.0)
        throw std::domain_error("poisson kernel: singular evaluation at r = 1, dtheta = 0 (mod 2*pi)");
}

}  // namespace

double poisson_eval(const KernelPoint& p) {
    const double dt = reduce_dtheta(p.dtheta);
    const double denom = 1.0 + p.r * p.r - 2.0 * p.r * std::cos(dt);
    validate_point(p.r, denom);
    return (1.0 - p.r * p.r) / denom;
}

double poisson_dtheta(int order, const KernelPoint& p) {
    if (order < 0) throw std::invalid_argument("poisson_dtheta: negative order");
    const double dt = reduce_dtheta(p.dtheta);
    const double s = std::sin(dt), c = std::cos(dt);
    const double denom = 1.0 + p.r * p.r - 2.0 * p.r * c;
    validate_point(p.r, denom);
    const double one_minus_r2 = (1.0 - p.r) * (1.0 + p.r);
    if (one_minus_r2 == 0.0) return 0.0;  // rim, off the singularity: exact zero for all orders
    double sum = 0.0;
    for (const Term& t : kernel_terms(order)) {
        double v = t.coeff * ipow(p.r, t.rpow) / ipow(denom, t.denpow);
        if (t.sinpow) v *= ipow(s, t.sinpow);
        if (t.cospow) v *= ipow(c, t.cospow);
        sum += v;
    }
    return one_minus_r2 * sum;
}

Complex herglotz_eval(Complex z, double t, double pole_tol) {
    const Complex w = std::polar(1.0, -t) * z;
    const Complex denom = 1.0 - w;
    if (std::abs(denom) < pole_tol)
        throw std::domain_error("herglotz kernel: evaluation within pole tolerance of e^{it}");
    return (1.0 + w) / denom;
}

Complex herglotz_dz(Complex z, double t, double pole_tol) {
    const Complex e = std::polar(1.0, -t);
    const Complex denom = 1.0 - e * z;
    if (std::abs(denom) < pole_tol)
        throw std::domain_error("herglotz kernel: evaluation within pole tolerance of e^{it}");
    return 2.0 * e / (denom * denom);
}

}  // namespace apdisk
