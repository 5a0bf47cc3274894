#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "apdisk/boundary_smoothness.hpp"
#include "apdisk/conformal.hpp"
#include "apdisk/corpus.hpp"
#include "apdisk/harmonic_extension.hpp"
#include "apdisk/seminorms.hpp"
#include "apdisk/serialize.hpp"

namespace {

using namespace apdisk;
namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitInconclusive = 3;

fs::path resolve_out(const std::string& path) {
    fs::path p(path);
    const char* dir = std::getenv("APDISK_OUT_DIR");
    if (dir && *dir && p.is_relative()) p = fs::path(dir) / p;
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    return p;
}

void write_text(const std::string& path, const std::string& body) {
    const fs::path p = resolve_out(path);
    std::ofstream os(p);
    if (!os) throw std::runtime_error("cannot open output file " + p.string());
    os << body;
}

json load_spec_json(const std::string& spec) {
    if (!spec.empty() && spec.front() == '{') return json::parse(spec);
    std::ifstream is(spec);
    if (!is) throw std::invalid_argument("cannot read spec file " + spec);
    return json::parse(is);
}

PowerSeries resolve_series(const std::string& spec) {
    if (spec.rfind("corpus:", 0) == 0) {
        const CorpusEntry& e = corpus_get(spec.substr(7));
        if (e.kind != CorpusKind::series && e.kind != CorpusKind::map)
            throw std::invalid_argument("corpus entry " + e.name + " is not a power series");
        return e.series;
    }
    return series_from_json(load_spec_json(spec));
}

ArcTrace resolve_arc(const std::string& spec) {
    if (spec.rfind("corpus:", 0) == 0) {
        const CorpusEntry& e = corpus_get(spec.substr(7));
        if (e.kind != CorpusKind::arc)
            throw std::invalid_argument("corpus entry " + e.name + " is not an arc trace");
        return e.arc;
    }
    return arc_from_json(load_spec_json(spec));
}

Complex parse_complex(const std::string& s) {
    std::istringstream is(s);
    double re = 0, im = 0;
    char comma = 0;
    if (!(is >> re)) throw std::invalid_argument("bad complex literal: " + s);
    if (is >> comma) {
        if (comma != ',' || !(is >> im)) throw std::invalid_argument("bad complex literal: " + s);
    }
    return {re, im};
}

void print_summary(const json& j) { std::cout << j.dump() << std::endl; }

struct Options {
    std::string spec, second_spec, out, csv, z_str = "0,0", window;
    std::vector<int> orders{1};
    std::vector<double> radii{0.9, 0.99, 0.999};
    int p = 3, p_max = 4, M = 1024, grid = 1024;
    double h = 1e-4;
    bool strict = false;
    ClassifierThresholds thr;
};

std::pair<double, double> parse_window(const std::string& s, const char* what) {
    const size_t comma = s.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument(std::string(what) + " must be two comma-separated angles");
    return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
}

json config_json(const Options& o, std::initializer_list<const char*> keys) {
    json cfg;
    for (const char* key : keys) {
        const std::string k = key;
        if (k == "spec") cfg["spec"] = o.spec;
        else if (k == "phi") cfg["phi"] = o.second_spec;
        else if (k == "z") cfg["z"] = o.z_str;
        else if (k == "orders") cfg["orders"] = o.orders;
        else if (k == "radii") cfg["radii"] = o.radii;
        else if (k == "p") cfg["p"] = o.p;
        else if (k == "p_max") cfg["p_max"] = o.p_max;
        else if (k == "M") cfg["M"] = o.M;
        else if (k == "h") cfg["h"] = o.h;
        else if (k == "window") cfg["window"] = o.window;
        else if (k == "strict") cfg["strict"] = o.strict;
    }
    return cfg;
}

int run_extend(const Options& o) {
    const PowerSeries f = resolve_series(o.spec);
    const Complex z = parse_complex(o.z_str);
    const BoundaryTrace u = trace_from_series(f, 1.0, o.M, true);
    const int order = o.orders.empty() ? 0 : o.orders.front();
    Complex value;
    double discrepancy = 0.0;
    if (order == 0) {
        value = poisson_extend(u, z);
    } else {
        const CommutedDerivative d = poisson_extend_dtheta(u, order, z);
        value = d.primary;
        discrepancy = d.discrepancy;
    }
    print_summary({{"subcommand", "extend"},
                   {"value", {value.real(), value.imag()}},
                   {"order", order},
                   {"commutation_discrepancy", discrepancy},
                   {"config", config_json(o, {"spec", "z", "M"})}});
    return kExitOk;
}

int run_sweep(const Options& o) {
    const PowerSeries f = resolve_series(o.spec);
    const ConvergenceReport rep = radial_sweep(f, o.orders, o.radii, o.M);
    if (!o.csv.empty()) {
        std::ostringstream os;
        sweep_to_csv(rep, os);
        write_text(o.csv, os.str());
    }
    json body = sweep_to_json(rep);
    body["config"] = config_json(o, {"spec", "orders", "radii", "M"});
    if (!o.out.empty()) write_text(o.out, body.dump(2) + "\n");
    json verdicts = json::array();
    bool inconclusive = false;
    for (Verdict v : rep.verdicts) {
        verdicts.push_back(to_string(v));
        inconclusive |= v == Verdict::inconclusive;
    }
    print_summary({{"subcommand", "sweep"}, {"verdicts", verdicts},
                   {"config", config_json(o, {"spec", "orders", "radii", "M"})}});
    return (o.strict && inconclusive) ? kExitInconclusive : kExitOk;
}

int run_classify(const Options& o) {
    const PowerSeries f = resolve_series(o.spec);
    const ApClassification cls = classify_Ap(f, o.p_max, o.thr);
    json body = classification_to_json(cls);
    body["config"] = config_json(o, {"spec", "p_max", "strict"});
    if (!o.out.empty()) write_text(o.out, body.dump(2) + "\n");
    print_summary({{"subcommand", "classify"},
                   {"p_hat", cls.p_hat},
                   {"capped", cls.capped},
                   {"conclusive", cls.conclusive},
                   {"config", body["config"]}});
    return (o.strict && !cls.conclusive) ? kExitInconclusive : kExitOk;
}

int run_arc_decay(const Options& o) {
    const ArcTrace u = resolve_arc(o.spec);
    const auto [t1, t2] = parse_window(o.window, "--window");
    const int order = o.orders.empty() ? 1 : o.orders.front();
    const ArcDecayReport rep = arc_decay_check(u, t1, t2, order, o.radii);
    json body = arc_decay_to_json(rep);
    body["config"] = config_json(o, {"spec", "window", "orders", "radii"});
    if (!o.out.empty()) write_text(o.out, body.dump(2) + "\n");
    print_summary({{"subcommand", "arc-decay"},
                   {"bound_satisfied", rep.bound_satisfied},
                   {"decreasing", rep.decreasing},
                   {"config", body["config"]}});
    return kExitOk;
}

int run_arc_converge(const Options& o) {
    const ArcTrace u = resolve_arc(o.spec);
    const auto [c, d] = parse_window(o.window, "--window");
    const int order = o.orders.empty() ? 0 : o.orders.front();
    const ArcConvergenceReport rep = arc_convergence_check(u, order, c, d, o.radii, o.M);
    json body = arc_convergence_to_json(rep);
    body["config"] = config_json(o, {"spec", "window", "orders", "radii", "M"});
    if (!o.out.empty()) write_text(o.out, body.dump(2) + "\n");
    print_summary({{"subcommand", "arc-converge"},
                   {"decreasing", rep.decreasing},
                   {"final_sup_error", rep.sup_errors.empty() ? -1.0 : rep.sup_errors.back()},
                   {"config", body["config"]}});
    return kExitOk;
}

int run_seminorms(const Options& o) {
    const PowerSeries f = resolve_series(o.spec);
    const EquivalenceReport rep = check_equivalence(f, o.p);
    if (!o.csv.empty()) {
        std::ostringstream os;
        seminorms_to_csv(rep.f_norms, os);
        write_text(o.csv, os.str());
    }
    json body = equivalence_to_json(rep);
    body["config"] = config_json(o, {"spec", "p"});
    if (!o.out.empty()) write_text(o.out, body.dump(2) + "\n");
    double min_residual = -std::abs(rep.eq0_residual);
    for (double r : rep.a_residuals) min_residual = std::min(min_residual, r);
    for (double r : rep.b_residuals) min_residual = std::min(min_residual, r);
    print_summary({{"subcommand", "seminorms"},
                   {"proxy", rep.proxy},
                   {"min_residual", min_residual},
                   {"config", body["config"]}});
    return kExitOk;
}

int run_chain_polys(const Options& o) {
    const ChainRuleSystem sys = chain_rule_system(o.p);
    json body = chain_system_to_json(sys);
    body["config"] = config_json(o, {"p"});
    if (!o.out.empty()) write_text(o.out, body.dump(2) + "\n");
    print_summary({{"subcommand", "chain-polys"}, {"order", sys.order}, {"config", body["config"]}});
    return kExitOk;
}

int run_conformal_verify(const Options& o) {
    const PowerSeries phi = resolve_series(o.second_spec);
    const PowerSeries F = resolve_series(o.spec);
    try {
        const JordanChart chart = build_chart(phi, o.M);
        const double disc = verify_chain_rule(F, chart, o.h);
        if (!o.csv.empty()) {
            std::ostringstream os;
            chart_to_csv(chart, os);
            write_text(o.csv, os.str());
        }
        json body = chart_certificate_to_json(chart);
        body["chain_rule_discrepancy"] = disc;
        body["config"] = config_json(o, {"spec", "phi", "h", "M"});
        if (!o.out.empty()) write_text(o.out, body.dump(2) + "\n");
        print_summary({{"subcommand", "conformal-verify"},
                       {"chart", "accepted"},
                       {"chain_rule_discrepancy", disc},
                       {"config", body["config"]}});
        return kExitOk;
    } catch (const ChartRejection& rej) {
        print_summary({{"subcommand", "conformal-verify"},
                       {"chart", "rejected"},
                       {"witness_kind", rej.kind},
                       {"witness", {rej.witness_a.real(), rej.witness_a.imag()}},
                       {"error", rej.what()},
                       {"config", config_json(o, {"spec", "phi", "h", "M"})}});
        return kExitValidation;
    }
}

int run_corpus(const Options& o) {
    json entries = json::array();
    for (const CorpusEntry& e : corpus_all()) {
        json item = {{"name", e.name}, {"kind", to_string(e.kind)}, {"ground_truth", e.ground_truth}};
        if (e.true_class != kUnboundedOrder) item["class"] = e.true_class;
        if (e.kind == CorpusKind::series || e.kind == CorpusKind::map) {
            item["degree"] = e.series.degree();
            if (!o.out.empty()) item["spec"] = series_to_json(e.series);
        }
        if (e.kind == CorpusKind::arc && !o.out.empty()) item["spec"] = arc_to_json(e.arc);
        entries.push_back(item);
    }
    if (!o.out.empty())
        write_text(o.out, json{{"entries", entries}, {"config", json::object()}}.dump(2) + "\n");
    print_summary({{"subcommand", "corpus"}, {"count", entries.size()}});
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"apdisk: Poisson extension and boundary-regularity toolkit"};
    app.require_subcommand(1);

    Options o;
    auto add_common = [&](CLI::App* sub, bool needs_spec) {
        if (needs_spec)
            sub->add_option("--spec", o.spec, "function spec: corpus:NAME, a JSON file path, or inline JSON")
                ->required();
        sub->add_option("--out", o.out, "JSON artifact path (APDISK_OUT_DIR prefixes relative paths)");
        sub->add_flag("--strict", o.strict, "exit 3 on inconclusive verdicts");
        return sub;
    };

    CLI::App* extend = add_common(app.add_subcommand("extend", "Poisson extension at a point"), true);
    extend->add_option("--z", o.z_str, "evaluation point re,im")->required();
    extend->add_option("--order", o.orders, "angular derivative order (default 0)");
    extend->add_option("--M", o.M, "trace grid size");

    CLI::App* sweep = add_common(app.add_subcommand("sweep", "radial convergence sweep"), true);
    sweep->add_option("--orders", o.orders, "derivative orders");
    sweep->add_option("--radii", o.radii, "radius schedule, increasing toward 1");
    sweep->add_option("--M", o.M, "angle grid size");
    sweep->add_option("--csv", o.csv, "CSV output: order,radius,sup_error");

    CLI::App* classify = add_common(app.add_subcommand("classify", "heuristic A^p classification"), true);
    classify->add_option("--p-max", o.p_max, "cap for unbounded verdicts");
    classify->add_option("--alpha-div", o.thr.alpha_div, "divergence slope threshold");
    classify->add_option("--residual-tol", o.thr.residual_tol, "max trusted fit residual");

    CLI::App* decay = add_common(app.add_subcommand("arc-decay", "decay on the complementary arc"), true);
    decay->add_option("--window", o.window, "compact window theta1,theta2 in the complement")->required();
    decay->add_option("--order", o.orders, "kernel derivative order (default 1)");
    decay->add_option("--radii", o.radii, "radius schedule");

    CLI::App* conv = add_common(app.add_subcommand("arc-converge", "convergence to arc data"), true);
    conv->add_option("--window", o.window, "compact window c,d inside the arc")->required();
    conv->add_option("--order", o.orders, "derivative order (default 0)");
    conv->add_option("--radii", o.radii, "radius schedule");
    conv->add_option("--M", o.M, "completion grid size");

    CLI::App* semi = add_common(app.add_subcommand("seminorms", "semi-norm equivalence report"), true);
    semi->add_option("--p", o.p, "max order");
    semi->add_option("--csv", o.csv, "CSV output: order,seminorm");

    CLI::App* polys = add_common(app.add_subcommand("chain-polys", "chain-rule polynomial families"), false);
    polys->add_option("--p", o.p, "max order")->required();

    CLI::App* conf = add_common(
        app.add_subcommand("conformal-verify", "chart checks and the chain-rule identity"), true);
    conf->add_option("--phi", o.second_spec, "disk map spec")->required();
    conf->add_option("--fd-step", o.h, "finite-difference step");
    conf->add_option("--M", o.M, "chart grid size");
    conf->add_option("--csv", o.csv, "CSV output: t,re_gamma,im_gamma,re_dgamma,im_dgamma");

    CLI::App* corpus = add_common(app.add_subcommand("corpus", "list or dump the fixture registry"), false);
    (void)corpus;

    o.orders.clear();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kExitValidation;
    }

    try {
        if (extend->parsed()) return run_extend(o);
        if (sweep->parsed()) return run_sweep(o);
        if (classify->parsed()) return run_classify(o);
        if (decay->parsed()) return run_arc_decay(o);
        if (conv->parsed()) return run_arc_converge(o);
        if (semi->parsed()) return run_seminorms(o);
        if (polys->parsed()) return run_chain_polys(o);
        if (conf->parsed()) return run_conformal_verify(o);
        if (corpus->parsed()) return run_corpus(o);
    } catch (const std::exception& e) {
        std::cout << json{{"error", e.what()}}.dump() << std::endl;
        return kExitValidation;
    }
    return kExitValidation;
}
