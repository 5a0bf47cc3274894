#include "apdisk/seminorms.hpp"

#include <cmath>
#include <map>

#include "apdisk/fft.hpp"

namespace apdisk {
namespace {

GaussPoly poly_derivative(const GaussPoly& p) {
    GaussPoly d;
    if (p.degree() < 1) {
        d.c = {GaussInt{}};
        return d;
    }
    d.c.resize(p.degree());
    for (int k = 1; k <= p.degree(); ++k) d.c[k - 1] = static_cast<long long>(k) * p.c[k];
    d.trim();
    return d;
}

GaussPoly poly_add(const GaussPoly& x, const GaussPoly& y) {
    GaussPoly s;
    s.c.resize(std::max(x.c.size(), y.c.size()));
    for (size_t k = 0; k < s.c.size(); ++k) s.c[k] = x.coeff(int(k)) + y.coeff(int(k));
    s.trim();
    return s;
}

// multiply by i*z
GaussPoly poly_iz(const GaussPoly& p) {
    GaussPoly r;
    r.c.resize(p.c.size() + 1);
    for (size_t k = 0; k < p.c.size(); ++k) r.c[k + 1] = kGaussI * p.c[k];
    r.trim();
    return r;
}

// Laurent polynomial over the Gaussian integers, exponent of z -> coefficient
using Laurent = std::map<int, GaussInt>;

void laurent_add(Laurent& acc, int pow, GaussInt g) {
    if (g.is_zero()) return;
    auto [it, inserted] = acc.try_emplace(pow, g);
    if (!inserted) {
        it->second = it->second + g;
        if (it->second.is_zero()) acc.erase(it);
    }
}

Laurent laurent_mul(const Laurent& x, const Laurent& y) {
    Laurent r;
    for (const auto& [px, cx] : x)
        for (const auto& [py, cy] : y) laurent_add(r, px + py, cx * cy);
    return r;
}

GaussInt i_power(int n) {
    switch (((n % 4) + 4) % 4) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

}  // namespace

std::vector<std::vector<GaussPoly>> chain_polys(int p) {
    if (p < 1) throw std::invalid_argument("chain_polys: order must be >= 1");
    std::vector<std::vector<GaussPoly>> P(p);
    P[0].resize(1);
    P[0][0].c = {GaussInt{}, kGaussI};  // P_{1,1} = i z
    for (int l = 1; l < p; ++l) {
        P[l].resize(l + 1);
        for (int k = 1; k <= l + 1; ++k) {
            const GaussPoly& same = (k <= l) ? P[l - 1][k - 1] : GaussPoly{{GaussInt{}}};
            const GaussPoly& below = (k >= 2) ? P[l - 1][k - 2] : GaussPoly{{GaussInt{}}};
            P[l][k - 1] = poly_iz(poly_add(poly_derivative(same), below));
        }
    }
    // leading-term structure P_{l,l} = (iz)^l
    for (int l = 1; l <= p; ++l) {
        const GaussPoly& lead = P[l - 1][l - 1];
        if (lead.degree() != l || !(lead.c[l] == i_power(l)))
            throw std::logic_error("chain_polys: leading term P_{l,l} != (iz)^l");
        for (int k = 0; k < l; ++k)
            if (!lead.c[k].is_zero()) throw std::logic_error("chain_polys: P_{l,l} not a monomial");
    }
    return P;
}

std::vector<std::vector<GaussPoly>> inverse_polys(const std::vector<std::vector<GaussPoly>>& P) {
    const int p = static_cast<int>(P.size());
    // R[l-1][k-1] = coefficient of g^{(k)} in f^{(l)}, as a Laurent polynomial
    // in z (expected to involve only non-positive powers)
    std::vector<std::vector<Laurent>> R(p);
    std::vector<std::vector<GaussPoly>> Q(p);
    for (int l = 1; l <= p; ++l) {
        R[l - 1].assign(l, {});
        // start from g^{(l)}: f^{(l)} = (g^{(l)} - sum_{m<l} P_{m,l}(z) f^{(m)}) / (iz)^l
        laurent_add(R[l - 1][l - 1], 0, GaussInt{1, 0});
        for (int m = 1; m < l; ++m) {
            Laurent pml;
            for (int d = 0; d <= P[l - 1][m - 1].degree(); ++d)
                laurent_add(pml, d, P[l - 1][m - 1].coeff(d));
            for (int k = 1; k <= m; ++k) {
                Laurent prod = laurent_mul(pml, R[m - 1][k - 1]);
                for (const auto& [pow, g] : prod)
                    laurent_add(R[l - 1][k - 1], pow, GaussInt{-1, 0} * g);
            }
        }
        // divide by (iz)^l: multiply by (-i)^l z^{-l}
        const GaussInt inv = i_power(-l);
        for (int k = 1; k <= l; ++k) {
            Laurent shifted;
            for (const auto& [pow, g] : R[l - 1][k - 1]) laurent_add(shifted, pow - l, inv * g);
            R[l - 1][k - 1] = std::move(shifted);
        }
        // convert: only non-positive z powers may remain, z^{-j} -> w^j
        Q[l - 1].resize(l);
        for (int k = 1; k <= l; ++k) {
            GaussPoly q;
            q.c = {GaussInt{}};
            for (const auto& [pow, g] : R[l - 1][k - 1]) {
                if (pow > 0)
                    throw std::logic_error("inverse_polys: positive power survived back-substitution");
                const int wk = -pow;
                if (wk >= static_cast<int>(q.c.size())) q.c.resize(wk + 1);
                q.c[wk] = g;
            }
            q.trim();
            Q[l - 1][k - 1] = std::move(q);
        }
    }
    return Q;
}

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> coeff_sums(
    const std::vector<std::vector<GaussPoly>>& P,
    const std::vector<std::vector<GaussPoly>>& Q) {
    const int p = static_cast<int>(P.size());
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(p, p), b = Eigen::MatrixXd::Zero(p, p);
    for (int l = 1; l <= p; ++l)
        for (int k = 1; k <= l; ++k) {
            a(k - 1, l - 1) = P[l - 1][k - 1].coeff_abs_sum();
            b(k - 1, l - 1) = Q[l - 1][k - 1].coeff_abs_sum();
        }
    return {a, b};
}

ChainRuleSystem chain_rule_system(int p) {
    ChainRuleSystem sys;
    sys.order = p;
    sys.P = chain_polys(p);
    sys.Q = inverse_polys(sys.P);
    std::tie(sys.a, sys.b) = coeff_sums(sys.P, sys.Q);
    return sys;
}

namespace {

constexpr double kProxyRadius = 1.0 - 1.0 / 16384.0;  // 1 - 2^-14

int auto_grid(const PowerSeries& f, int grid) {
    if (grid > 0) {
        if (!is_pow2(grid) || grid < 16)
            throw std::invalid_argument("seminorm: grid must be a power of two >= 16");
        return grid;
    }
    return std::max(256, next_pow2(2 * (f.degree() + 1)));
}

}  // namespace

SeminormInfo seminorm_info(const PowerSeries& f, int order, int grid, RimPolicy policy) {
    if (order < 0) throw std::invalid_argument("seminorm: negative order");
    const bool rim_exact = f.assumed_radius > 1.0;
    if (policy == RimPolicy::rim && !rim_exact)
        throw std::domain_error("seminorm: rim policy requires assumed_radius > 1");
    const bool use_rim = policy == RimPolicy::rim || (policy == RimPolicy::automatic && rim_exact);

    SeminormInfo info;
    info.grid = auto_grid(f, grid);
    PowerSeries d = series_derivative(f, order);
    if (use_rim) {
        info.radius = 1.0;
        BoundaryTrace t = trace_from_series(d, 1.0, info.grid);
        info.value = t.samples.cwiseAbs().maxCoeff();
    } else {
        // dilated proxy: |f_rho|_l with f_rho(z) = f(rho z), so the reported
        // value is rho^l * sup_{|z|=rho} |f^{(l)}|
        info.proxy = true;
        info.radius = kProxyRadius;
        BoundaryTrace t = trace_from_series(d, kProxyRadius, info.grid);
        info.value = std::pow(kProxyRadius, order) * t.samples.cwiseAbs().maxCoeff();
    }
    return info;
}

double seminorm(const PowerSeries& f, int order, int grid, RimPolicy policy) {
    return seminorm_info(f, order, grid, policy).value;
}

double seminorm_trace(const BoundaryTrace& g, int order) {
    BoundaryTrace d = trace_derivative(g, order, DerivScheme::spectral);
    return d.samples.cwiseAbs().maxCoeff();
}

namespace {

// sup_t |g^{(l)}(t)| for g(t) = f(rho e^{it}), with the spectral-derivative
// coefficients (i n)^l a_n rho^n formed exactly; avoids the forward-FFT
// roundoff that n^l would otherwise amplify
double angular_seminorm(const PowerSeries& f, int l, double rho, int M) {
    CVector c = CVector::Zero(M);
    double rpow = 1.0;
    for (int n = 0; n <= f.degree(); ++n) {
        c[n % M] += std::pow(Complex(0.0, n), l) * f.coeffs[n] * rpow;
        rpow *= rho;
    }
    return samples_from_coeffs(c).cwiseAbs().maxCoeff();
}

}  // namespace

EquivalenceReport check_equivalence(const PowerSeries& f, int p, int grid) {
    if (p < 0) throw std::invalid_argument("check_equivalence: negative order");
    EquivalenceReport rep;
    rep.p = p;
    const int M = auto_grid(f, grid);
    const bool rim_exact = f.assumed_radius > 1.0;
    rep.proxy = !rim_exact;
    const double rho = rim_exact ? 1.0 : kProxyRadius;

    // g is the rim trace of the (possibly dilated) function; both families of
    // semi-norms are evaluated on the same object so the inequalities are
    // exact statements about it
    for (int l = 0; l <= p; ++l) {
        PowerSeries d = series_derivative(f, l);
        BoundaryTrace t = trace_from_series(d, rho, M);
        rep.f_norms.push_back(std::pow(rho, l) * t.samples.cwiseAbs().maxCoeff());
        rep.g_norms.push_back(angular_seminorm(f, l, rho, M));
    }
    rep.eq0_residual = (rep.g_norms[0] - rep.f_norms[0]) / std::max(1.0, rep.f_norms[0]);
    if (p >= 1) {
        ChainRuleSystem sys = chain_rule_system(p);
        for (int l = 1; l <= p; ++l) {
            double lhs_a = 0.0, lhs_b = 0.0;
            for (int k = 1; k <= l; ++k) {
                lhs_a += sys.a(k - 1, l - 1) * rep.f_norms[k];
                lhs_b += sys.b(k - 1, l - 1) * rep.g_norms[k];
            }
            // residuals are relative to the bounding side of each inequality
            rep.a_residuals.push_back((lhs_a - rep.g_norms[l]) / std::max(1.0, lhs_a));
            rep.b_residuals.push_back((lhs_b - rep.f_norms[l]) / std::max(1.0, lhs_b));
        }
    }
    return rep;
}

}  // namespace apdisk
