#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "apdisk/corpus.hpp"
#include "apdisk/fft.hpp"
#include "apdisk/harmonic_extension.hpp"

using namespace apdisk;

namespace {

BoundaryTrace sample_mode(int k, int M) {
    BoundaryTrace g;
    g.samples.resize(M);
    for (int j = 0; j < M; ++j) g.samples[j] = std::polar(1.0, k * kTwoPi * j / M);
    return g;
}

ArcTrace ones_arc() {
    ArcTrace u;
    u.a = 0.0;
    u.b = 1.0;
    u.samples = CVector::Ones(129);
    return u;
}

}  // namespace

TEST_CASE("poisson_extend: eigenfunction identity for single modes") {
    const int M = 128;
    for (int k : {0, 1, 7, -5, 20}) {
        const BoundaryTrace u = sample_mode(k, M);
        for (double r : {0.5, 0.9}) {
            for (double theta : {0.3, 2.1}) {
                const Complex got = poisson_extend(u, std::polar(r, theta));
                const Complex expect = std::pow(r, std::abs(k)) * std::polar(1.0, k * theta);
                CHECK(std::abs(got - expect) <= 1e-9);
            }
        }
    }
}

TEST_CASE("poisson_extend: domain guard and mean value at 0") {
    const BoundaryTrace u = sample_mode(3, 64);
    CHECK_THROWS_AS(poisson_extend(u, Complex(1.0, 0.0)), std::domain_error);
    CHECK(std::abs(poisson_extend(u, Complex(0.0, 0.0))) <= 1e-12);  // mean of e^{3it}
}

TEST_CASE("commutation: both derivative routes agree for a trig polynomial") {
    const BoundaryTrace& u = corpus_get("trig_poly_8").trace;
    for (int l : {1, 2, 3}) {
        for (double r : {0.5, 0.9}) {
            const CommutedDerivative d = poisson_extend_dtheta(u, l, std::polar(r, 0.8));
            CHECK(d.discrepancy <= 1e-10);
        }
    }
}

TEST_CASE("five-point laplacian of the extension is near zero") {
    const BoundaryTrace& u = corpus_get("trig_poly_8").trace;
    const double h = 1e-3;
    const Complex z(0.4, 0.25);
    const Complex lap = (poisson_extend(u, z + Complex(h, 0)) + poisson_extend(u, z - Complex(h, 0)) +
                         poisson_extend(u, z + Complex(0, h)) + poisson_extend(u, z - Complex(0, h)) -
                         4.0 * poisson_extend(u, z)) /
                        (h * h);
    CHECK(std::abs(lap) <= 1e-4);
}

TEST_CASE("arc_extend: laplacian near zero, value continuous in r") {
    const ArcTrace& u = corpus_get("arc_cosine").arc;
    const double h = 1e-3;
    const Complex z = std::polar(0.5, 0.5);
    const Complex lap = (arc_extend(u, 0, z + Complex(h, 0)) + arc_extend(u, 0, z - Complex(h, 0)) +
                         arc_extend(u, 0, z + Complex(0, h)) + arc_extend(u, 0, z - Complex(0, h)) -
                         4.0 * arc_extend(u, 0, z)) /
                        (h * h);
    CHECK(std::abs(lap) <= 1e-4);
}

TEST_CASE("arc_extend: rim flatness is exact off the closed arc") {
    const ArcTrace u = ones_arc();
    for (int l : {0, 1, 2}) {
        for (double theta : {1.2, 2.0, 4.0, -0.15}) {
            CHECK(arc_extend(u, l, std::polar(1.0, theta)) == Complex(0.0));
        }
    }
}

TEST_CASE("arc_extend: guards") {
    const ArcTrace u = ones_arc();
    CHECK_THROWS_AS(arc_extend(u, 0, std::polar(1.1, 2.0)), std::domain_error);
    CHECK_THROWS_AS(arc_extend(u, 0, std::polar(1.0, 0.5)), std::domain_error);  // on the arc
    CHECK_THROWS_AS(arc_extend(u, 0, std::polar(1.0, 1.0 + 1e-12)), std::domain_error);  // too close
}

TEST_CASE("split_extension: A + B reproduces the full extension") {
    const BoundaryTrace& g = corpus_get("trig_poly_8").trace;
    const SplitExtension split = split_extension(g, 0.5, 2.5);
    for (double r : {0.3, 0.8}) {
        for (double theta : {0.1, 1.5, 4.4}) {
            const Complex z = std::polar(r, theta);
            const Complex whole = poisson_extend(g, z);
            const Complex parts = split.A.eval(0, z) + split.B.eval(0, z);
            CHECK(std::abs(whole - parts) <= 1e-8);
        }
    }
}

TEST_CASE("smooth_arc_completion: matches the data and the endpoint derivatives") {
    const ArcTrace& u = corpus_get("arc_cosine").arc;
    const BoundaryTrace g = smooth_arc_completion(u, 2, 1024);
    CHECK(g.smoothness_claim == 2);

    // on-arc agreement at grid points that land inside [a, b]
    for (int j = 0; j < g.size(); ++j) {
        const double t = g.angle(j);
        if (t > u.a + 0.05 && t < u.b - 0.05)
            CHECK(std::abs(g.samples[j] - std::cos(t)) <= 1e-7);
    }

    // C^2 seam: second central differences stay bounded across both endpoints
    const CVector c = fourier_coeffs(g.samples);
    const double h = 1e-3;
    for (double seam : {u.a, u.b}) {
        const Complex d2 = (eval_fourier(c, seam + h) - 2.0 * eval_fourier(c, seam) +
                            eval_fourier(c, seam - h)) /
                           (h * h);
        CHECK(std::abs(d2) <= 10.0);
    }
}

TEST_CASE("smooth_arc_completion: order guard") {
    const ArcTrace& u = corpus_get("arc_cosine").arc;
    CHECK_THROWS_AS(smooth_arc_completion(u, 5, 1024), std::invalid_argument);
}

TEST_CASE("graded_arc_rule: integrates smooth functions accurately") {
    const ArcRule rule = graded_arc_rule(0.0, 1.0, 512);
    double acc = 0.0;
    for (Eigen::Index i = 0; i < rule.nodes.size(); ++i) acc += rule.weights[i] * std::sin(rule.nodes[i]);
    CHECK(acc == doctest::Approx(1.0 - std::cos(1.0)).epsilon(1e-10));
    CHECK(rule.nodes[0] == 0.0);
    CHECK(rule.nodes[rule.nodes.size() - 1] == 1.0);
}

TEST_CASE("adaptive node counts grow toward the rim") {
    const ExtensionConfig cfg;
    CHECK(arc_node_count(0.999, 129, cfg) >= 64000);
    CHECK(arc_node_count(0.5, 129, cfg) >= cfg.min_nodes);
}
