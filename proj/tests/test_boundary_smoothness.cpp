#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "apdisk/boundary_smoothness.hpp"
#include "apdisk/corpus.hpp"

using namespace apdisk;

TEST_CASE("radial_sweep: closed form for monomials") {
    const PowerSeries& f = corpus_get("monomial_3").series;
    const std::vector<double> radii{0.5, 0.7, 0.9, 0.99};
    const ConvergenceReport rep = radial_sweep(f, {0, 1, 2}, radii, 256);
    for (size_t io = 0; io < 3; ++io) {
        const double l = double(io);
        for (size_t ir = 0; ir < radii.size(); ++ir) {
            const double expect = std::pow(3.0, l) * (1.0 - std::pow(radii[ir], 3));
            CHECK(std::abs(rep.sup_errors(io, ir) - expect) <= 1e-8);
        }
        CHECK(rep.verdicts[io] == Verdict::converges);
    }
}

TEST_CASE("radial_sweep: constant function has zero error") {
    const PowerSeries f(CVector::Constant(1, Complex(2.5, -1.0)), 4.0);
    const ConvergenceReport rep = radial_sweep(f, {0, 1}, {0.5, 0.9}, 64);
    CHECK(rep.sup_errors.maxCoeff() == 0.0);
    CHECK(rep.verdicts[0] == Verdict::converges);
}

TEST_CASE("radial_sweep: marginal series shows decay at l=1, growth of M_2") {
    const PowerSeries& f = corpus_get("zeta_series_2.5").series;
    const std::vector<double> radii{0.9, 0.99, 0.999};
    const ConvergenceReport rep = radial_sweep(f, {1, 2}, radii, 256);
    CHECK(rep.sup_errors(0, 2) < rep.sup_errors(0, 1));
    CHECK(rep.sup_errors(0, 1) < rep.sup_errors(0, 0));
    CHECK(rep.sup_norms(1, 2) > rep.sup_norms(1, 1));
    CHECK(rep.sup_norms(1, 1) > rep.sup_norms(1, 0));
}

TEST_CASE("radial_sweep: schedule validation") {
    const PowerSeries& f = corpus_get("monomial_1").series;
    CHECK_THROWS_AS(radial_sweep(f, {0}, {0.9, 0.5}, 64), std::invalid_argument);
    CHECK_THROWS_AS(radial_sweep(f, {0}, {0.5, 1.0}, 64), std::invalid_argument);
    CHECK_THROWS_AS(radial_sweep(f, {0}, {}, 64), std::invalid_argument);
}

TEST_CASE("verify_trace_formula: Taylor remainder scale for f(z) = z") {
    const PowerSeries f(( CVector(2) << 0.0, 1.0).finished(), 4.0);
    const double h = 1e-3;
    CHECK(verify_trace_formula(f, 256, h) <= h * h / 6.0 + 1e-12);
}

TEST_CASE("verify_trace_formula: cubic benchmark and O(h^2) scaling") {
    const PowerSeries& f = corpus_get("cubic").series;
    const double d1 = verify_trace_formula(f, 1024, 1e-4);
    const double d2 = verify_trace_formula(f, 1024, 5e-5);
    CHECK(d1 <= 1e-6);
    CHECK(d1 / d2 >= 3.5);
    CHECK(d1 / d2 <= 4.5);
}

TEST_CASE("verify_trace_formula: constant is exact") {
    const PowerSeries f(CVector::Constant(1, Complex(3.0, 1.0)), 4.0);
    CHECK(verify_trace_formula(f, 64, 1e-4) == 0.0);
}

TEST_CASE("classify_Ap: polynomial reaches the cap") {
    const ApClassification cls = classify_Ap(corpus_get("monomial_5").series, 4);
    CHECK(cls.p_hat == 4);
    CHECK(cls.capped);
    CHECK(cls.conclusive);
    for (const OrderEvidence& ev : cls.evidence) CHECK(ev.verdict == Verdict::converges);
}

TEST_CASE("classify_Ap: marginal series lands on its true class") {
    const ApClassification cls = classify_Ap(corpus_get("zeta_series_2.5").series, 4);
    CHECK(cls.p_hat == 1);
    CHECK(cls.conclusive);
    CHECK(cls.evidence[2].verdict == Verdict::diverges);
    CHECK(cls.evidence[3].forced);  // monotone: forced divergent above the break
}

TEST_CASE("classify_Ap: scalar invariance") {
    const PowerSeries& f = corpus_get("zeta_series_3.5").series;
    const PowerSeries scaled(CVector(f.coeffs * Complex(7.0, 0.0)), f.assumed_radius);
    const ApClassification a = classify_Ap(f, 3);
    const ApClassification b = classify_Ap(scaled, 3);
    REQUIRE(a.evidence.size() == b.evidence.size());
    CHECK(a.p_hat == b.p_hat);
    for (size_t i = 0; i < a.evidence.size(); ++i) {
        CHECK(a.evidence[i].verdict == b.evidence[i].verdict);
        CHECK(a.evidence[i].slope == doctest::Approx(b.evidence[i].slope).epsilon(1e-9));
    }
}

TEST_CASE("arc_decay_check: explicit bound for constant data") {
    ArcTrace u;
    u.a = 0.0;
    u.b = 1.0;
    u.samples = CVector::Ones(129);
    const ArcDecayReport rep = arc_decay_check(u, 2.0, 5.0, 1, {0.9, 0.99}, 16);
    CHECK(rep.bound_satisfied);
    CHECK(rep.decreasing);
    for (size_t i = 0; i < rep.radii.size(); ++i) CHECK(rep.sup_values[i] <= rep.bounds[i]);
}

TEST_CASE("arc_decay_check: window validation") {
    ArcTrace u;
    u.a = 0.0;
    u.b = 1.0;
    u.samples = CVector::Ones(33);
    CHECK_THROWS_AS(arc_decay_check(u, 0.5, 2.0, 1, {0.9}), std::invalid_argument);   // overlaps arc
    CHECK_THROWS_AS(arc_decay_check(u, 2.0, 6.3, 1, {0.9}), std::invalid_argument);   // wraps past a
}

TEST_CASE("arc_decay_check: higher order decay for sin(pi t)") {
    ArcTrace u;
    u.a = 0.0;
    u.b = 1.0;
    u.samples.resize(129);
    for (int i = 0; i < 129; ++i) u.samples[i] = std::sin(kPi * i / 128.0);
    const ArcDecayReport rep = arc_decay_check(u, 2.0, 5.0, 2, {0.9, 0.99, 0.999}, 16);
    CHECK(rep.decreasing);
}

TEST_CASE("arc_convergence_check: cosine data converges at l = 0, 1") {
    const ArcTrace& full = corpus_get("arc_cosine").arc;
    ArcTrace u = full;
    u.derivs_a.resize(2);
    u.derivs_b.resize(2);
    for (int l : {0, 1}) {
        const ArcConvergenceReport rep = arc_convergence_check(u, l, 0.25, 0.75, {0.9, 0.99, 0.999});
        CHECK(rep.decreasing);
        CHECK(rep.sup_errors.back() <= 1e-2);
    }
}

TEST_CASE("arc_convergence_check: guards") {
    const ArcTrace& u = corpus_get("arc_cosine").arc;
    CHECK_THROWS_AS(arc_convergence_check(u, 5, 0.25, 0.75, {0.9}), std::invalid_argument);
    CHECK_THROWS_AS(arc_convergence_check(u, 0, -0.1, 0.75, {0.9}), std::invalid_argument);
}

TEST_CASE("arc_classify: polynomial is convergent on any arc") {
    const ArcClassification cls = arc_classify(corpus_get("cubic").series, 0.5, 2.0, 2);
    CHECK(cls.conclusive);
    for (const OrderEvidence& ev : cls.evidence) CHECK(ev.verdict == Verdict::converges);
    CHECK(cls.trace_formula_discrepancy >= 0.0);
    CHECK(cls.trace_formula_discrepancy <= 1e-5);
}

TEST_CASE("arc_classify: singularity inside vs outside the arc") {
    const PowerSeries& f = corpus_get("zeta_series_1.5").series;
    // arc away from the z = 1 singularity: order 1 converges on the window
    const ArcClassification away = arc_classify(f, 0.5, kTwoPi - 0.5, 1);
    CHECK(away.evidence[1].verdict == Verdict::converges);
    // arc containing the singularity at t = 0 is divergent already at order 1
    const ArcClassification across = arc_classify(f, -0.5, 0.5, 1);
    CHECK(across.evidence[1].verdict == Verdict::diverges);
}
