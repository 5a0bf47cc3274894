#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "apdisk/corpus.hpp"
#include "apdisk/seminorms.hpp"

using namespace apdisk;

namespace {

// Independent oracle for the P-family: symbolic differentiation of
//   g^{(l)}(t) = sum over terms c * e^{ijt} * f^{(k)}(e^{it})
// as a table keyed by (k, j), structurally unrelated to the z-polynomial
// recurrence used by the library.
using TermTable = std::map<std::pair<int, int>, GaussInt>;

TermTable oracle_terms(int l) {
    TermTable terms;
    terms[{1, 1}] = kGaussI;  // d/dt f(e^{it}) = i e^{it} f'(e^{it})
    for (int step = 1; step < l; ++step) {
        TermTable next;
        for (const auto& [key, c] : terms) {
            const auto [k, j] = key;
            next[{k, j}] = next[{k, j}] + (static_cast<long long>(j) * kGaussI) * c;
            next[{k + 1, j + 1}] = next[{k + 1, j + 1}] + kGaussI * c;
        }
        terms = std::move(next);
    }
    return terms;
}

GaussPoly make_poly(std::initializer_list<GaussInt> coeffs) {
    GaussPoly p;
    p.c = coeffs;
    p.trim();
    return p;
}

bool poly_eq(const GaussPoly& x, const GaussPoly& y) {
    const int d = std::max(x.degree(), y.degree());
    for (int k = 0; k <= d; ++k)
        if (!(x.coeff(k) == y.coeff(k))) return false;
    return true;
}

using Laurent = std::map<int, GaussInt>;

Laurent laurent_of(const GaussPoly& p, int power_sign) {
    Laurent out;
    for (int k = 0; k <= p.degree(); ++k)
        if (!p.coeff(k).is_zero()) out[power_sign * k] = p.coeff(k);
    return out;
}

Laurent laurent_mul(const Laurent& x, const Laurent& y) {
    Laurent out;
    for (const auto& [px, cx] : x)
        for (const auto& [py, cy] : y) {
            const GaussInt prod = cx * cy;
            out[px + py] = out[px + py] + prod;
        }
    return out;
}

}  // namespace

TEST_CASE("chain_polys matches the symbolic term oracle exactly") {
    const auto P = chain_polys(4);
    for (int l = 1; l <= 4; ++l) {
        const TermTable terms = oracle_terms(l);
        for (int k = 1; k <= l; ++k) {
            const GaussPoly& pkl = P[l - 1][k - 1];
            for (int j = 0; j <= std::max(pkl.degree(), l); ++j) {
                GaussInt expect;
                auto it = terms.find({k, j});
                if (it != terms.end()) expect = it->second;
                CHECK(pkl.coeff(j) == expect);
            }
        }
    }
}

TEST_CASE("frozen low-order values of both families") {
    const ChainRuleSystem sys = chain_rule_system(3);
    const GaussInt o{1, 0}, i{0, 1}, mo{-1, 0}, mi{0, -1};
    CHECK(poly_eq(sys.p(1, 1), make_poly({{}, i})));
    CHECK(poly_eq(sys.p(1, 2), make_poly({{}, mo})));
    CHECK(poly_eq(sys.p(2, 2), make_poly({{}, {}, mo})));
    CHECK(poly_eq(sys.p(1, 3), make_poly({{}, mi})));
    CHECK(poly_eq(sys.p(2, 3), make_poly({{}, {}, {-0, -3}})));
    CHECK(poly_eq(sys.p(3, 3), make_poly({{}, {}, {}, mi})));

    CHECK(poly_eq(sys.q(1, 1), make_poly({{}, mi})));
    CHECK(poly_eq(sys.q(1, 2), make_poly({{}, {}, i})));
    CHECK(poly_eq(sys.q(2, 2), make_poly({{}, {}, mo})));
    CHECK(poly_eq(sys.q(1, 3), make_poly({{}, {}, {}, {0, -2}})));
    CHECK(poly_eq(sys.q(2, 3), make_poly({{}, {}, {}, {3, 0}})));
    CHECK(poly_eq(sys.q(3, 3), make_poly({{}, {}, {}, i})));
    CHECK(o == GaussInt{1, 0});
}

TEST_CASE("leading structure P_ll = (iz)^l") {
    const auto P = chain_polys(4);
    for (int l = 1; l <= 4; ++l) {
        GaussInt lead{1, 0};
        for (int t = 0; t < l; ++t) lead = lead * kGaussI;
        const GaussPoly& pll = P[l - 1][l - 1];
        CHECK(pll.degree() == l);
        CHECK(pll.coeff(l) == lead);
        for (int k = 0; k < l; ++k) CHECK(pll.coeff(k).is_zero());
    }
}

TEST_CASE("inverse composition residual is identically zero") {
    const ChainRuleSystem sys = chain_rule_system(4);
    for (int l = 1; l <= 4; ++l) {
        for (int m = 1; m <= l; ++m) {
            // sum_k Q_{k,l}(z^{-1}) P_{m,k}(z) must equal delta_{lm} exactly
            Laurent acc;
            for (int k = m; k <= l; ++k)
                for (const auto& [pw, c] : laurent_mul(laurent_of(sys.q(k, l), -1),
                                                       laurent_of(sys.p(m, k), +1)))
                    acc[pw] = acc[pw] + c;
            for (const auto& [pw, c] : acc) {
                const GaussInt expect = (pw == 0 && m == l) ? GaussInt{1, 0} : GaussInt{};
                CHECK(c == expect);
            }
        }
    }
}

TEST_CASE("coefficient sums a and b for low orders") {
    const ChainRuleSystem sys = chain_rule_system(3);
    CHECK(sys.a(0, 0) == doctest::Approx(1.0));
    CHECK(sys.a(0, 2) == doctest::Approx(1.0));
    CHECK(sys.a(1, 2) == doctest::Approx(3.0));
    CHECK(sys.a(2, 2) == doctest::Approx(1.0));
    CHECK(sys.b(0, 2) == doctest::Approx(2.0));
    CHECK(sys.b(1, 2) == doctest::Approx(3.0));
    CHECK(sys.b(2, 2) == doctest::Approx(1.0));
}

TEST_CASE("seminorm of a monomial is the falling factorial") {
    const PowerSeries& f = corpus_get("monomial_5").series;
    double expect = 1.0;
    for (int l = 0; l <= 5; ++l) {
        const SeminormInfo info = seminorm_info(f, l);
        CHECK_FALSE(info.proxy);
        CHECK(info.value == doctest::Approx(expect).epsilon(1e-12));
        expect *= (5 - l);
    }
    CHECK(seminorm(f, 6) == doctest::Approx(0.0));
}

TEST_CASE("interior proxy is flagged for radius-1 series") {
    const PowerSeries& f = corpus_get("zeta_series_2.5").series;
    const SeminormInfo info = seminorm_info(f, 0);
    CHECK(info.proxy);
    CHECK(info.radius < 1.0);
    // |f|_0 approaches zeta(2.5) - small truncation/dilation loss
    CHECK(info.value > 1.0);
    CHECK(info.value < 1.342);
}

TEST_CASE("equivalence inequalities hold with tiny residuals") {
    for (const char* name : {"monomial_3", "cubic", "zeta_series_1.5", "zeta_series_4.5"}) {
        const EquivalenceReport rep = check_equivalence(corpus_get(name).series, 3);
        CHECK(std::abs(rep.eq0_residual) <= 1e-9 * std::max(1.0, rep.f_norms[0]));
        for (double r : rep.a_residuals) CHECK(r >= -1e-9);
        for (double r : rep.b_residuals) CHECK(r >= -1e-9);
    }
}

TEST_CASE("equivalence identity |g|_1 = a_11 |f|_1 for a monomial") {
    const EquivalenceReport rep = check_equivalence(corpus_get("monomial_3").series, 1);
    CHECK(rep.g_norms[1] == doctest::Approx(rep.f_norms[1]).epsilon(1e-10));
}
