#include "apdisk/corpus.hpp"

#include <cmath>
#include <limits>

namespace apdisk {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

PowerSeries monomial(int k) {
    CVector c = CVector::Zero(k + 1);
    c[k] = 1.0;
    return PowerSeries(c, kInf);
}

PowerSeries zeta_series(double s, int N) {
    CVector c = CVector::Zero(N + 1);
    for (int n = 1; n <= N; ++n) c[n] = std::pow(double(n), -s);
    return PowerSeries(c, 1.0);
}

PowerSeries exp_series(int N) {
    CVector c(N + 1);
    double fact = 1.0;
    for (int n = 0; n <= N; ++n) {
        if (n) fact *= n;
        c[n] = 1.0 / fact;
    }
    return PowerSeries(c, kInf);
}

// trig polynomial sum_{|k| <= 8} c_k e^{ikt} with c_k = (1+|k|)^{-2}
BoundaryTrace trig_poly_trace(int M) {
    BoundaryTrace g;
    g.samples.resize(M);
    for (int j = 0; j < M; ++j) {
        const double t = kTwoPi * j / M;
        Complex v = 0.0;
        for (int k = -8; k <= 8; ++k)
            v += std::polar(1.0 / ((1.0 + std::abs(k)) * (1.0 + std::abs(k))), k * t);
        g.samples[j] = v;
    }
    return g;
}

template <typename F>
ArcTrace make_arc(double a, double b, int n, int p, F&& deriv) {  // deriv(j, t) = u^{(j)}(t)
    ArcTrace u;
    u.a = a;
    u.b = b;
    u.samples.resize(n);
    for (int i = 0; i < n; ++i) u.samples[i] = deriv(0, a + (b - a) * i / (n - 1));
    for (int j = 1; j <= p; ++j) {
        u.derivs_a.push_back(deriv(j, a));
        u.derivs_b.push_back(deriv(j, b));
    }
    return u;
}

std::vector<CorpusEntry> build_registry() {
    std::vector<CorpusEntry> reg;
    auto add_series = [&](std::string name, PowerSeries f, int cls, std::string note) {
        CorpusEntry e;
        e.name = std::move(name);
        e.kind = CorpusKind::series;
        e.series = std::move(f);
        e.true_class = cls;
        e.ground_truth = std::move(note);
        reg.push_back(std::move(e));
    };

    for (int k : {1, 3, 5})
        add_series("monomial_" + std::to_string(k), monomial(k), kUnboundedOrder,
                   "z^k: entire, all derivatives bounded; |f|_l = k(k-1)...(k-l+1) for l <= k");
    add_series("cubic", PowerSeries((CVector(4) << 0.0, 2.0, 0.0, 1.0).finished(), kInf),
               kUnboundedOrder, "z^3 + 2z: polynomial, class unbounded; g'''(t) bounded by 29");
    add_series("exp_20", exp_series(20), kUnboundedOrder,
               "truncated exp: entire; rim sup-norm e at t = 0");
    for (double s : {1.5, 2.5, 3.5, 4.5}) {
        const int cls = static_cast<int>(std::floor(s - 1.0 - 1e-9));
        std::string name = "zeta_series_" + std::to_string(s).substr(0, 3);
        add_series(std::move(name), zeta_series(s, 8192), cls,
                   "sum n^-s z^n, N=8192: f^(p) rim-bounded iff s - p > 1, so class = ceil(s) - 2; "
                   "divergence witnessed at theta = 0 by positive terms sum n^(p-s)");
    }

    {
        CorpusEntry e;
        e.name = "trig_poly_8";
        e.kind = CorpusKind::trace;
        e.trace = trig_poly_trace(256);
        e.ground_truth =
            "sum_{|k|<=8} (1+|k|)^-2 e^{ikt}: Poisson extension has exact modes r^|k| e^{ik theta}; "
            "l-th derivative scales mode k by (ik)^l";
        reg.push_back(std::move(e));
    }

    auto add_arc = [&](std::string name, ArcTrace u, std::string note) {
        CorpusEntry e;
        e.name = std::move(name);
        e.kind = CorpusKind::arc;
        e.arc = std::move(u);
        e.ground_truth = std::move(note);
        reg.push_back(std::move(e));
    };
    add_arc("arc_cosine",
            make_arc(0.0, 1.0, 257, 4, [](int j, double t) { return Complex(std::cos(t + j * kPi / 2)); }),
            "cos t on [0,1], endpoint derivatives to order 4: u^(j)(t) = cos(t + j pi/2)");
    add_arc("arc_parabola",
            make_arc(0.0, 1.0, 257, 2,
                     [](int j, double t) {
                         if (j == 0) return Complex(t * (1.0 - t));
                         if (j == 1) return Complex(1.0 - 2.0 * t);
                         return Complex(-2.0);
                     }),
            "t(1-t) on [0,1], derivatives 1-2t and -2; vanishes at both endpoints");
    add_arc("arc_expwave",
            make_arc(0.0, 1.0, 257, 2,
                     [](int j, double t) { return std::pow(Complex(0, 2), j) * std::polar(1.0, 2 * t); }),
            "e^{i2t} on [0,1]: u^(j) = (2i)^j e^{i2t}, eigenfunction of d/dt");

    auto add_map = [&](std::string name, PowerSeries phi, std::string note) {
        CorpusEntry e;
        e.name = std::move(name);
        e.kind = CorpusKind::map;
        e.series = std::move(phi);
        e.ground_truth = std::move(note);
        reg.push_back(std::move(e));
    };
    add_map("conformal_identity", PowerSeries((CVector(2) << 0.0, 1.0).finished(), kInf),
            "phi(z) = z: unit-circle chart, gamma'(t) = i e^{it}");
    add_map("conformal_bump", PowerSeries((CVector(3) << 0.0, 1.0, 0.3).finished(), kInf),
            "phi(z) = z + 0.3 z^2: injective on the closed disk since |0.3| < 1/2; "
            "phi' = 1 + 0.6 z has its only root at -5/3, outside the disk");

    return reg;
}

}  // namespace

std::string to_string(CorpusKind k) {
    switch (k) {
        case CorpusKind::series: return "series";
        case CorpusKind::trace: return "trace";
        case CorpusKind::arc: return "arc";
        default: return "map";
    }
}

const std::vector<CorpusEntry>& corpus_all() {
    static const std::vector<CorpusEntry> registry = build_registry();
    return registry;
}

const CorpusEntry& corpus_get(const std::string& name) {
    for (const CorpusEntry& e : corpus_all())
        if (e.name == name) return e;
    throw std::invalid_argument("corpus: unknown entry '" + name + "'");
}

std::vector<CorpusEntry> corpus_filter_kind(CorpusKind kind) {
    std::vector<CorpusEntry> out;
    for (const CorpusEntry& e : corpus_all())
        if (e.kind == kind) out.push_back(e);
    return out;
}

std::vector<CorpusEntry> corpus_filter_class(int lo, int hi) {
    std::vector<CorpusEntry> out;
    for (const CorpusEntry& e : corpus_all())
        if (e.true_class >= lo && e.true_class <= hi) out.push_back(e);
    return out;
}

}  // namespace apdisk
