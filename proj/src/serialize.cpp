#include "apdisk/serialize.hpp"

#include <iomanip>
#include <ostream>

namespace apdisk {
namespace {

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("serialize: complex values must be [re, im] pairs");
    return {j[0].get<double>(), j[1].get<double>()};
}

json cvector_to_json(const CVector& v) {
    json arr = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(complex_to_json(v[i]));
    return arr;
}

CVector cvector_from_json(const json& arr) {
    if (!arr.is_array()) throw std::invalid_argument("serialize: expected an array of [re, im] pairs");
    CVector v(arr.size());
    for (size_t i = 0; i < arr.size(); ++i) v[i] = complex_from_json(arr[i]);
    return v;
}

json verdicts_to_json(const std::vector<Verdict>& vs) {
    json arr = json::array();
    for (Verdict v : vs) arr.push_back(to_string(v));
    return arr;
}

json evidence_to_json(const std::vector<OrderEvidence>& evidence) {
    json arr = json::array();
    for (const OrderEvidence& ev : evidence) {
        arr.push_back({{"order", ev.order},
                       {"sup_norms", ev.sup_norms},
                       {"slope", ev.slope},
                       {"residual", ev.residual},
                       {"verdict", to_string(ev.verdict)},
                       {"forced", ev.forced}});
    }
    return arr;
}

}  // namespace

json series_to_json(const PowerSeries& f) {
    return {{"coeffs", cvector_to_json(f.coeffs)}, {"assumed_radius", f.assumed_radius}};
}

PowerSeries series_from_json(const json& j) {
    if (!j.contains("coeffs") || !j.contains("assumed_radius"))
        throw std::invalid_argument("serialize: function spec needs coeffs and assumed_radius");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (key != "coeffs" && key != "assumed_radius")
            throw std::invalid_argument("serialize: unknown key '" + key + "' in function spec");
    }
    return PowerSeries(cvector_from_json(j["coeffs"]), j["assumed_radius"].get<double>());
}

json arc_to_json(const ArcTrace& u) {
    json derivs;
    json da = json::array(), db = json::array();
    for (Complex d : u.derivs_a) da.push_back(complex_to_json(d));
    for (Complex d : u.derivs_b) db.push_back(complex_to_json(d));
    derivs["a"] = da;
    derivs["b"] = db;
    return {{"arc", {u.a, u.b}},
            {"samples", cvector_to_json(u.samples)},
            {"endpoint_derivatives", derivs}};
}

ArcTrace arc_from_json(const json& j) {
    if (!j.contains("arc") || !j.contains("samples"))
        throw std::invalid_argument("serialize: arc spec needs arc and samples");
    ArcTrace u;
    u.a = j["arc"][0].get<double>();
    u.b = j["arc"][1].get<double>();
    u.samples = cvector_from_json(j["samples"]);
    if (j.contains("endpoint_derivatives")) {
        const json& d = j["endpoint_derivatives"];
        if (d.contains("a"))
            for (const json& e : d["a"]) u.derivs_a.push_back(complex_from_json(e));
        if (d.contains("b"))
            for (const json& e : d["b"]) u.derivs_b.push_back(complex_from_json(e));
    }
    validate_arc(u);
    return u;
}

json sweep_to_json(const ConvergenceReport& rep) {
    json errors = json::array(), norms = json::array();
    for (size_t io = 0; io < rep.orders.size(); ++io) {
        json re = json::array(), rn = json::array();
        for (size_t ir = 0; ir < rep.radii.size(); ++ir) {
            re.push_back(rep.sup_errors(io, ir));
            rn.push_back(rep.sup_norms(io, ir));
        }
        errors.push_back(re);
        norms.push_back(rn);
    }
    return {{"orders", rep.orders},
            {"radii", rep.radii},
            {"sup_errors", errors},
            {"sup_norms", norms},
            {"fitted_exponent", rep.fitted_exponent},
            {"verdicts", verdicts_to_json(rep.verdicts)}};
}

json classification_to_json(const ApClassification& cls) {
    return {{"p_hat", cls.p_hat},
            {"p_cap", cls.p_cap},
            {"capped", cls.capped},
            {"conclusive", cls.conclusive},
            {"evidence", evidence_to_json(cls.evidence)},
            {"thresholds",
             {{"alpha_div", cls.thresholds.alpha_div},
              {"residual_tol", cls.thresholds.residual_tol},
              {"j_min", cls.thresholds.j_min},
              {"j_max", cls.thresholds.j_max},
              {"fit_j_min", cls.thresholds.fit_j_min},
              {"saturation_factor", cls.thresholds.saturation_factor},
              {"grid", cls.thresholds.grid}}}};
}

json arc_decay_to_json(const ArcDecayReport& rep) {
    return {{"radii", rep.radii},
            {"sup_values", rep.sup_values},
            {"bounds", rep.bounds},
            {"bound_satisfied", rep.bound_satisfied},
            {"decreasing", rep.decreasing}};
}

json arc_convergence_to_json(const ArcConvergenceReport& rep) {
    return {{"radii", rep.radii}, {"sup_errors", rep.sup_errors}, {"decreasing", rep.decreasing}};
}

json equivalence_to_json(const EquivalenceReport& rep) {
    return {{"p", rep.p},
            {"proxy", rep.proxy},
            {"f_norms", rep.f_norms},
            {"g_norms", rep.g_norms},
            {"eq0_residual", rep.eq0_residual},
            {"a_residuals", rep.a_residuals},
            {"b_residuals", rep.b_residuals}};
}

namespace {

// i^m * Z[x] representation when it exists, else [re, im] pairs
json gauss_poly_to_json(const GaussPoly& poly) {
    for (int m = 0; m < 4; ++m) {
        // dividing by i^m means multiplying by i^(4-m)
        GaussInt inv{1, 0};
        for (int t = 0; t < (4 - m) % 4; ++t) inv = inv * kGaussI;
        bool pure = true;
        json ints = json::array();
        for (const GaussInt& g : poly.c) {
            const GaussInt d = g * inv;
            if (d.im != 0) {
                pure = false;
                break;
            }
            ints.push_back(d.re);
        }
        if (pure) return {{"i_power", m}, {"coeffs", ints}};
    }
    json pairs = json::array();
    for (const GaussInt& g : poly.c) pairs.push_back({g.re, g.im});
    return {{"coeffs_complex", pairs}};
}

}  // namespace

json chain_system_to_json(const ChainRuleSystem& sys) {
    json P = json::array(), Q = json::array(), a = json::array(), b = json::array();
    for (int l = 1; l <= sys.order; ++l) {
        json pl = json::array(), ql = json::array(), al = json::array(), bl = json::array();
        for (int k = 1; k <= l; ++k) {
            pl.push_back(gauss_poly_to_json(sys.p(k, l)));
            ql.push_back(gauss_poly_to_json(sys.q(k, l)));
            al.push_back(sys.a(k - 1, l - 1));
            bl.push_back(sys.b(k - 1, l - 1));
        }
        P.push_back(pl);
        Q.push_back(ql);
        a.push_back(al);
        b.push_back(bl);
    }
    return {{"order", sys.order}, {"P", P}, {"Q", Q}, {"a", a}, {"b", b}};
}

json chart_certificate_to_json(const JordanChart& chart) {
    const char* status = chart.map.injectivity == CertificateStatus::verified  ? "verified"
                         : chart.map.injectivity == CertificateStatus::asserted ? "asserted"
                                                                                : "failed";
    return {{"phi", series_to_json(chart.map.phi)},
            {"injectivity", status},
            {"certificate_grid", chart.map.certificate_grid},
            {"grid", chart.size()}};
}

namespace {

std::ostream& csv_stream(std::ostream& os) {
    os << std::setprecision(17);
    return os;
}

}  // namespace

void sweep_to_csv(const ConvergenceReport& rep, std::ostream& os) {
    csv_stream(os) << "order,radius,sup_error\n";
    for (size_t io = 0; io < rep.orders.size(); ++io)
        for (size_t ir = 0; ir < rep.radii.size(); ++ir)
            os << rep.orders[io] << ',' << rep.radii[ir] << ',' << rep.sup_errors(io, ir) << '\n';
}

void seminorms_to_csv(const std::vector<double>& norms, std::ostream& os) {
    csv_stream(os) << "order,seminorm\n";
    for (size_t l = 0; l < norms.size(); ++l) os << l << ',' << norms[l] << '\n';
}

void chart_to_csv(const JordanChart& chart, std::ostream& os) {
    csv_stream(os) << "t,re_gamma,im_gamma,re_dgamma,im_dgamma\n";
    for (int j = 0; j < chart.size(); ++j)
        os << chart.angle(j) << ',' << chart.gamma[j].real() << ',' << chart.gamma[j].imag() << ','
           << chart.gamma_prime[j].real() << ',' << chart.gamma_prime[j].imag() << '\n';
}

}  // namespace apdisk
