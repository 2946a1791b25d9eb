#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "balobs/report.hpp"

using namespace balobs;

namespace {

struct Options {
    std::string registry_name;
    std::string model_path;
    std::string convention;
    std::string assign;
    std::string metric_sample;
    std::string fd_steps = "1e-2,5e-3,2.5e-3";
    std::string format = "text";
};

Cplx parse_complex(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace((unsigned char)c)) s += c;
    if (s.empty()) throw StructuralError("empty numeric literal");
    // Split into real and imaginary addends; '+'/'-' separate unless
    // they follow an exponent marker or start the string.
    std::vector<std::string> parts;
    size_t start = 0;
    for (size_t i = 1; i < s.size(); ++i) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            parts.push_back(s.substr(start, i - start));
            start = i;
        }
    }
    parts.push_back(s.substr(start));
    double re = 0.0, im = 0.0;
    for (const auto& p : parts) {
        if (p.empty()) continue;
        if (p.back() == 'i') {
            std::string body = p.substr(0, p.size() - 1);
            if (body.empty() || body == "+") im += 1.0;
            else if (body == "-") im -= 1.0;
            else im += std::stod(body);
        } else {
            re += std::stod(p);
        }
    }
    return Cplx(re, im);
}

void apply_assign_string(Assignment& a, const std::string& text) {
    size_t pos = 0;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        pos = comma == std::string::npos ? text.size() : comma + 1;
        if (item.empty()) continue;
        size_t eq = item.find('=');
        if (eq == std::string::npos) throw StructuralError("bad assignment '" + item + "' (want k=v)");
        a.set(item.substr(0, eq), parse_complex(item.substr(eq + 1)));
    }
}

void apply_metric_sample(Assignment& a, const ModelFile& m, const std::string& sample) {
    if (sample == "identity") {
        const HermMetric& g = m.metric();
        for (int j = 0; j < g.n(); ++j)
            for (int k = j; k < g.n(); ++k) {
                const GaussPoly& e = g.entry(j, k);
                // Only direct variable entries can be sampled by name.
                if (e.term_count() == 1 && e.total_degree() == 1) {
                    for (const auto& [mono, c] : e.terms()) {
                        for (size_t v = 0; v < mono.exp.size(); ++v)
                            if (mono.exp[v] == 1)
                                a.set(static_cast<int>(v), j == k ? Cplx(1.0, 0.0) : Cplx(0.0, 0.0));
                    }
                }
            }
        return;
    }
    std::ifstream in(sample);
    if (!in) throw StructuralError("cannot open metric sample file '" + sample + "'");
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        bool blank = true;
        for (char c : line)
            if (!std::isspace((unsigned char)c)) blank = false;
        if (blank) continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos) throw StructuralError("bad metric sample line: " + line);
        std::string name = line.substr(0, eq);
        name.erase(remove_if(name.begin(), name.end(), [](char c) { return std::isspace((unsigned char)c); }),
                   name.end());
        a.set(name, parse_complex(line.substr(eq + 1)));
    }
}

std::vector<double> parse_steps(const std::string& text) {
    std::vector<double> steps;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        pos = comma == std::string::npos ? text.size() : comma + 1;
        if (!item.empty()) steps.push_back(std::stod(item));
    }
    if (steps.empty()) throw StructuralError("no finite-difference steps given");
    return steps;
}

ModelFile load_model(const Options& opt) {
    if (!opt.registry_name.empty() && !opt.model_path.empty())
        throw StructuralError("--registry and --model are mutually exclusive");
    if (!opt.registry_name.empty()) return registry(opt.registry_name);
    if (!opt.model_path.empty()) {
        std::ifstream in(opt.model_path);
        if (!in) throw StructuralError("cannot open model file '" + opt.model_path + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        ModelFile m = parse_model(ss.str(), opt.model_path);
        if (!m.algebra) throw StructuralError("model file declares no algebra");
        return m;
    }
    throw StructuralError("one of --registry or --model is required");
}

OmegaConvention pick_convention(const Options& opt, const ModelFile& m) {
    if (!opt.convention.empty()) return convention_from_name(opt.convention);
    if (!m.default_metric.empty()) return m.metric_conventions.at(m.default_metric);
    return OmegaConvention::HermitianStandard;
}

ReportContext make_context(const std::string& cmd, const Options& opt, const ModelFile& m,
                           bool with_convention, bool with_curve) {
    ReportContext cx;
    cx.command = cmd;
    cx.model = opt.registry_name.empty() ? opt.model_path : opt.registry_name;
    if (with_convention) cx.convention = convention_name(pick_convention(opt, m));
    if (with_curve && !m.default_curve.empty()) cx.curve = m.default_curve;
    if (!m.default_metric.empty()) cx.metric = m.default_metric;
    cx.assumptions = m.assumptions;
    return cx;
}

Assignment make_assignment(const Options& opt, const ModelFile& m, bool use_fd_defaults) {
    Assignment a(m.vars);
    if (use_fd_defaults && !opt.registry_name.empty()) {
        for (const auto& [k, v] : registry_fd_defaults(opt.registry_name)) {
            if (m.vars->find(k)) a.set(k, v);
        }
    }
    if (!opt.metric_sample.empty()) apply_metric_sample(a, m, opt.metric_sample);
    if (!opt.assign.empty()) apply_assign_string(a, opt.assign);
    return a;
}

ReportFormat pick_format(const Options& opt) {
    if (opt.format == "text") return ReportFormat::Text;
    if (opt.format == "json") return ReportFormat::Json;
    throw StructuralError("unknown format '" + opt.format + "'");
}

int run(const std::string& cmd, const Options& opt) {
    ReportFormat fmt = pick_format(opt);
    ModelFile m = load_model(opt);
    const AlgebraPtr& alg = m.algebra;

    if (cmd == "check-algebra") {
        ReportContext cx = make_context(cmd, opt, m, false, false);
        DSquaredReport rep = d_squared_check(alg);
        std::cout << report_check_algebra(cx, rep, fmt);
        return rep.ok ? 0 : 2;
    }
    if (cmd == "check-balanced") {
        ReportContext cx = make_context(cmd, opt, m, true, false);
        WForm omega = omega_from_metric(m.metric(), pick_convention(opt, m));
        BalancedResult res = balanced_check(alg, omega);
        std::cout << report_balanced(cx, alg, res, fmt);
        return res.balanced ? 0 : 2;
    }
    if (cmd == "mc-residual") {
        ReportContext cx = make_context(cmd, opt, m, false, true);
        CalcContext<GaussPoly> cc(alg);
        VForm res = mc_residual(cc, m.curve().phi_t);
        std::cout << report_mc_residual(cx, alg, res, fmt);
        return res.is_zero() ? 0 : 2;
    }
    if (cmd == "obstruction") {
        ReportContext cx = make_context(cmd, opt, m, true, true);
        WForm omega = omega_from_metric(m.metric(), pick_convention(opt, m));
        WForm theta = first_order_obstruction(alg, omega, m.curve().derivative_at_zero(alg));
        std::cout << report_obstruction(cx, alg, theta, fmt);
        return 0;
    }
    if (cmd == "conditions") {
        ReportContext cx = make_context(cmd, opt, m, true, true);
        ObstructionReport rep =
            analyze(m.metric(), pick_convention(opt, m), m.curve(), m.assumptions);
        cx.notes = rep.notes;
        std::cout << report_conditions(cx, alg, rep.class_residual, fmt);
        return 0;
    }
    if (cmd == "verdict") {
        ReportContext cx = make_context(cmd, opt, m, true, true);
        Assignment a = make_assignment(opt, m, false);
        ObstructionReport rep =
            analyze(m.metric(), pick_convention(opt, m), m.curve(), m.assumptions, &a);
        cx.notes = rep.notes;
        std::cout << report_verdict(cx, alg, rep.class_residual, *rep.verdict_result, fmt);
        return rep.verdict_result->obstructed ? 2 : 0;
    }
    if (cmd == "verify-theorem") {
        ReportContext cx = make_context(cmd, opt, m, true, true);
        OmegaConvention conv = pick_convention(opt, m);
        MetricCurve mc = m.metric_curves.empty()
                             ? MetricCurve::constant(m.metric(), conv)
                             : m.metric_curves.begin()->second;
        if (m.metric_curves.empty()) cx.notes.push_back("constant metric curve");
        Assignment a = make_assignment(opt, m, true);
        FDReport rep = fd_theorem_check(alg, mc, m.curve(), parse_steps(opt.fd_steps), a);
        std::cout << report_fd(cx, rep, fmt);
        return rep.ok ? 0 : 2;
    }
    if (cmd == "cohomology") {
        ReportContext cx = make_context(cmd, opt, m, false, false);
        std::vector<std::pair<Weight, int>> dims;
        int total = 0;
        for (const Weight& w : default_sectors(alg)) {
            int d = invariant_h01_dimension(alg, {w});
            dims.emplace_back(w, d);
            total += d;
        }
        std::cout << report_cohomology(cx, alg, dims, total, fmt);
        return 0;
    }
    throw StructuralError("unknown command " + cmd);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"balobs: first-order obstructions to curves of balanced metrics on invariant Hermitian geometries"};
    app.require_subcommand(1);

    Options opt;
    std::vector<CLI::App*> subs;
    for (const char* name : {"check-algebra", "check-balanced", "mc-residual", "obstruction",
                             "conditions", "verdict", "verify-theorem", "cohomology"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--registry", opt.registry_name, "built-in model name (iwasawa, nakamura-i[:curve], nakamura-ii)");
        sub->add_option("--model", opt.model_path, "path to a .balg model file");
        sub->add_option("--convention", opt.convention, "paper-literal | hermitian-standard")
            ->check(CLI::IsMember({"paper-literal", "hermitian-standard"}));
        sub->add_option("--assign", opt.assign, "comma-separated k=v numeric assignments");
        sub->add_option("--metric-sample", opt.metric_sample, "identity | path to a sample file");
        sub->add_option("--fd-steps", opt.fd_steps, "comma-separated finite-difference steps");
        sub->add_option("--format", opt.format, "text | json")->check(CLI::IsMember({"text", "json"}));
        subs.push_back(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        return run(app.get_subcommands().front()->get_name(), opt);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const StructuralError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
