#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "apdisk/corpus.hpp"

using namespace apdisk;

TEST_CASE("registry size and required members") {
    const auto& all = corpus_all();
    CHECK(all.size() >= 12);
    for (const char* name :
         {"monomial_1", "monomial_3", "monomial_5", "trig_poly_8", "cubic", "exp_20",
          "zeta_series_1.5", "zeta_series_2.5", "zeta_series_3.5", "zeta_series_4.5",
          "arc_cosine", "arc_parabola", "arc_expwave", "conformal_identity", "conformal_bump"})
        CHECK_NOTHROW(corpus_get(name));
    CHECK_THROWS_AS(corpus_get("nonexistent"), std::invalid_argument);
}

TEST_CASE("every entry documents its ground truth") {
    for (const CorpusEntry& e : corpus_all()) CHECK_FALSE(e.ground_truth.empty());
}

TEST_CASE("filters") {
    CHECK(corpus_filter_kind(CorpusKind::arc).size() >= 2);
    CHECK(corpus_filter_kind(CorpusKind::map).size() >= 2);
    const auto class0 = corpus_filter_class(0, 0);
    bool found = false;
    for (const CorpusEntry& e : class0) found |= e.name == "zeta_series_1.5";
    CHECK(found);
}

TEST_CASE("zeta classes follow the coefficient rule") {
    CHECK(corpus_get("zeta_series_1.5").true_class == 0);
    CHECK(corpus_get("zeta_series_2.5").true_class == 1);
    CHECK(corpus_get("zeta_series_3.5").true_class == 2);
    CHECK(corpus_get("zeta_series_4.5").true_class == 3);
    const PowerSeries& f = corpus_get("zeta_series_2.5").series;
    CHECK(f.degree() == 8192);
    CHECK(f.coeffs[0] == Complex(0.0));
    CHECK(std::abs(f.coeffs[4] - Complex(std::pow(4.0, -2.5))) <= 1e-17);
    CHECK(f.assumed_radius == 1.0);
}

TEST_CASE("generators are deterministic") {
    const CVector& a = corpus_get("zeta_series_3.5").series.coeffs;
    const CVector& b = corpus_get("zeta_series_3.5").series.coeffs;
    CHECK(a.data() == b.data());  // same registry object
    for (int trial = 0; trial < 2; ++trial) {
        const PowerSeries& f = corpus_get("exp_20").series;
        CHECK(f.coeffs[5] == Complex(1.0 / 120.0));
    }
}

TEST_CASE("arc_cosine carries exact endpoint derivatives to order 4") {
    const ArcTrace& u = corpus_get("arc_cosine").arc;
    CHECK(u.a == 0.0);
    CHECK(u.b == 1.0);
    CHECK(u.endpoint_order() == 4);
    for (int j = 1; j <= 4; ++j) {
        CHECK(std::abs(u.derivs_a[j - 1] - Complex(std::cos(j * kPi / 2))) <= 1e-15);
        CHECK(std::abs(u.derivs_b[j - 1] - Complex(std::cos(1.0 + j * kPi / 2))) <= 1e-15);
    }
    for (int i = 0; i < u.size(); ++i)
        CHECK(std::abs(u.samples[i] - Complex(std::cos(u.node(i)))) <= 1e-15);
}

TEST_CASE("arc fixtures satisfy their stated closed forms") {
    const ArcTrace& p = corpus_get("arc_parabola").arc;
    CHECK(std::abs(p.samples[0]) == 0.0);
    CHECK(std::abs(p.samples[p.size() - 1]) <= 1e-15);
    CHECK(p.derivs_a[0] == Complex(1.0));
    CHECK(p.derivs_b[1] == Complex(-2.0));

    const ArcTrace& w = corpus_get("arc_expwave").arc;
    CHECK(std::abs(w.derivs_a[0] - Complex(0.0, 2.0)) <= 1e-15);
    CHECK(std::abs(w.derivs_b[0] - Complex(0.0, 2.0) * std::polar(1.0, 2.0)) <= 1e-15);
}

TEST_CASE("trig trace matches its generating sum") {
    const BoundaryTrace& g = corpus_get("trig_poly_8").trace;
    REQUIRE(g.size() == 256);
    const double t = g.angle(17);
    Complex expect = 0.0;
    for (int k = -8; k <= 8; ++k) expect += std::polar(1.0 / ((1.0 + std::abs(k)) * (1.0 + std::abs(k))), k * t);
    CHECK(std::abs(g.samples[17] - expect) <= 1e-14);
}

TEST_CASE("map fixtures") {
    const PowerSeries& id = corpus_get("conformal_identity").series;
    CHECK(id.degree() == 1);
    CHECK(id.coeffs[1] == Complex(1.0));
    const PowerSeries& bump = corpus_get("conformal_bump").series;
    CHECK(bump.coeffs[2] == Complex(0.3));
    CHECK(bump.assumed_radius > 1.0);
}
