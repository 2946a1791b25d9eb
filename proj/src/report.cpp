#include "balobs/report.hpp"

#include <algorithm>
#include <cstdio>

#include <json.hpp>

namespace balobs {

using Json = nlohmann::ordered_json;

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return std::string(buf);
}

std::string fmt_complex(const Cplx& z) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%.15g%+.15gi", z.real(), z.imag());
    return std::string(buf);
}

namespace {

Json header(const ReportContext& cx) {
    Json j;
    j["command"] = cx.command;
    j["model"] = cx.model;
    if (!cx.convention.empty()) j["convention"] = cx.convention;
    if (!cx.curve.empty()) j["curve"] = cx.curve;
    if (!cx.metric.empty()) j["metric"] = cx.metric;
    j["assumptions"] = cx.assumptions;
    return j;
}

std::string finish(Json& j, const ReportContext& cx) {
    j["notes"] = cx.notes;
    return j.dump(2) + "\n";
}

std::string text_header(const ReportContext& cx) {
    std::string s = "== balobs " + cx.command + " ==\n";
    s += "model: " + cx.model + "\n";
    if (!cx.convention.empty()) s += "convention: " + cx.convention + "\n";
    if (!cx.curve.empty()) s += "curve: " + cx.curve + "\n";
    if (!cx.metric.empty()) s += "metric: " + cx.metric + "\n";
    for (const auto& a : cx.assumptions) s += "assumption: " + a + "\n";
    return s;
}

std::string text_footer(const ReportContext& cx) {
    std::string s;
    for (const auto& n : cx.notes) s += "note: " + n + "\n";
    return s;
}

} // namespace

std::string report_check_algebra(const ReportContext& cx, const DSquaredReport& rep, ReportFormat f) {
    if (f == ReportFormat::Json) {
        Json j = header(cx);
        j["ok"] = rep.ok;
        j["violations"] = rep.violations;
        return finish(j, cx);
    }
    std::string s = text_header(cx);
    s += rep.ok ? "d^2 = 0 and characters closed: pass\n" : "d^2 check failed:\n";
    for (const auto& v : rep.violations) s += "  " + v + "\n";
    return s + text_footer(cx);
}

std::string report_balanced(const ReportContext& cx, const AlgebraPtr& alg,
                            const BalancedResult& res, ReportFormat f) {
    if (f == ReportFormat::Json) {
        Json j = header(cx);
        j["balanced"] = res.balanced;
        j["residual"] = res.balanced ? "0" : alg->form_str(res.residual);
        return finish(j, cx);
    }
    std::string s = text_header(cx);
    if (res.balanced) s += "balanced: delbar(omega^(n-1)) = 0 exactly\n";
    else s += "not balanced; residual = " + alg->form_str(res.residual) + "\n";
    return s + text_footer(cx);
}

std::string report_mc_residual(const ReportContext& cx, const AlgebraPtr& alg, const VForm& residual,
                               ReportFormat f) {
    bool zero = residual.is_zero();
    if (f == ReportFormat::Json) {
        Json j = header(cx);
        j["residual_zero"] = zero;
        Json comps = Json::array();
        for (int i = 0; i < (int)residual.comp.size(); ++i) {
            if (residual.comp[i].is_zero()) continue;
            Json c;
            c["frame"] = "Z" + std::to_string(i + 1);
            c["form"] = alg->form_str(residual.comp[i]);
            comps.push_back(c);
        }
        j["components"] = comps;
        return finish(j, cx);
    }
    std::string s = text_header(cx);
    if (zero) {
        s += "residual 0 (identically in t)\n";
    } else {
        s += "Maurer-Cartan residual is nonzero:\n";
        for (int i = 0; i < (int)residual.comp.size(); ++i)
            if (!residual.comp[i].is_zero())
                s += "  (" + alg->form_str(residual.comp[i]) + ") @ Z" + std::to_string(i + 1) + "\n";
    }
    return s + text_footer(cx);
}

std::string report_obstruction(const ReportContext& cx, const AlgebraPtr& alg, const WForm& theta,
                               ReportFormat f) {
    if (f == ReportFormat::Json) {
        Json j = header(cx);
        j["theta"] = alg->form_str(theta);
        Json terms = Json::array();
        for (const auto& [k, c] : theta.terms()) {
            Json t;
            WForm mono = monomial_form<GaussPoly>(alg->n(), k, GaussPoly(alg->vars(), GaussRat(1)), alg);
            t["monomial"] = alg->form_str(mono);
            t["coefficient"] = c.str();
            terms.push_back(t);
        }
        j["terms"] = terms;
        return finish(j, cx);
    }
    std::string s = text_header(cx);
    s += "theta = del(i_{phi'(0)}(omega^(n-1)))\n";
    if (theta.is_zero()) {
        s += "theta = 0\n";
    } else {
        for (const auto& [k, c] : theta.terms()) {
            WForm mono = monomial_form<GaussPoly>(alg->n(), k, GaussPoly(alg->vars(), GaussRat(1)), alg);
            s += "  [" + alg->form_str(mono) + "]  " + c.str() + "\n";
        }
    }
    return s + text_footer(cx);
}

std::string report_conditions(const ReportContext& cx, const AlgebraPtr& alg,
                              const ClassResidual& cr, ReportFormat f) {
    if (f == ReportFormat::Json) {
        Json j = header(cx);
        Json conds = Json::array();
        for (size_t i = 0; i < cr.conditions.size(); ++i) {
            Json c;
            c["monomial"] = cr.condition_monomials[i];
            c["condition"] = cr.conditions[i].str();
            c["unscaled"] = cr.conditions_raw[i].str();
            conds.push_back(c);
        }
        j["conditions"] = conds;
        j["exact_part"] = alg->form_str(cr.exact_part);
        j["potential"] = alg->form_str(cr.potential);
        j["verdict"] = cr.conditions.empty() ? "no-first-order-obstruction" : "conditions-required";
        return finish(j, cx);
    }
    std::string s = text_header(cx);
    if (cr.conditions.empty()) {
        s += "no first-order obstruction: the class of theta is zero\n";
    } else {
        s += "necessary vanishing conditions (one per non-exact monomial):\n";
        for (size_t i = 0; i < cr.conditions.size(); ++i)
            s += "  on " + cr.condition_monomials[i] + ":  " + cr.conditions[i].str() + " = 0\n";
    }
    if (!cr.exact_part.is_zero())
        s += "delbar-exact part removed: " + alg->form_str(cr.exact_part) + "\n";
    return s + text_footer(cx);
}

std::string report_verdict(const ReportContext& cx, const AlgebraPtr&, const ClassResidual& cr,
                           const VerdictResult& v, ReportFormat f) {
    if (f == ReportFormat::Json) {
        Json j = header(cx);
        Json conds = Json::array();
        for (size_t i = 0; i < cr.conditions.size(); ++i) {
            Json c;
            c["condition"] = cr.conditions[i].str();
            c["value"] = fmt_complex(v.values[i]);
            c["fired"] = std::find(v.fired.begin(), v.fired.end(), i) != v.fired.end();
            conds.push_back(c);
        }
        j["conditions"] = conds;
        j["tolerance"] = fmt_double(v.tolerance);
        j["verdict"] = v.obstructed ? "obstructed" : "no-first-order-obstruction";
        return finish(j, cx);
    }
    std::string s = text_header(cx);
    for (size_t i = 0; i < cr.conditions.size(); ++i) {
        bool fired = std::find(v.fired.begin(), v.fired.end(), i) != v.fired.end();
        s += std::string(fired ? "* " : "  ") + cr.conditions[i].str() + " = " +
             fmt_complex(v.values[i]) + "\n";
    }
    s += v.obstructed
             ? "verdict: obstructed (first-order necessary condition violated)\n"
             : "verdict: not obstructed at first order (necessary conditions hold at this point)\n";
    return s + text_footer(cx);
}

std::string report_fd(const ReportContext& cx, const FDReport& rep, ReportFormat f) {
    if (f == ReportFormat::Json) {
        Json j = header(cx);
        Json steps = Json::array();
        for (size_t i = 0; i < rep.steps.size(); ++i) {
            Json s;
            s["h"] = fmt_double(rep.steps[i]);
            s["max_error"] = fmt_double(rep.max_errors[i]);
            steps.push_back(s);
        }
        j["steps"] = steps;
        Json orders = Json::array();
        for (double o : rep.order_estimates) orders.push_back(fmt_double(o));
        j["order_estimates"] = orders;
        j["order_estimable"] = rep.order_estimable;
        j["order_mean"] = fmt_double(rep.order_mean);
        j["residual_norm"] = fmt_double(rep.derivative_norm);
        j["ok"] = rep.ok;
        return finish(j, cx);
    }
    std::string s = text_header(cx);
    s += "finite-difference check of del(i_phi'(0) omega^(n-1)) = -delbar((omega^(n-1))'(0))\n";
    for (size_t i = 0; i < rep.steps.size(); ++i)
        s += "  h = " + fmt_double(rep.steps[i]) + "  max error = " + fmt_double(rep.max_errors[i]) + "\n";
    if (rep.order_estimable)
        s += "estimated order: " + fmt_double(rep.order_mean) + "\n";
    else
        s += "order not estimable: finite-difference errors are at the noise floor\n";
    s += "symbolic residual norm at sample: " + fmt_double(rep.derivative_norm) + "\n";
    s += rep.ok ? "derivative identity validated numerically\n" : "validation FAILED\n";
    return s + text_footer(cx);
}

std::string report_cohomology(const ReportContext& cx, const AlgebraPtr& alg,
                              const std::vector<std::pair<Weight, int>>& dims, int total,
                              ReportFormat f) {
    if (f == ReportFormat::Json) {
        Json j = header(cx);
        Json sectors = Json::array();
        for (const auto& [w, d] : dims) {
            Json s;
            std::string ws = alg->weight_str(w);
            s["weight"] = ws.empty() ? "[1]" : ws;
            s["h01"] = d;
            sectors.push_back(s);
        }
        j["sectors"] = sectors;
        j["h01_total"] = total;
        return finish(j, cx);
    }
    std::string s = text_header(cx);
    for (const auto& [w, d] : dims) {
        std::string ws = alg->weight_str(w);
        s += "  sector " + (ws.empty() ? std::string("[1]") : ws) + ": h01 = " + std::to_string(d) + "\n";
    }
    s += "invariant dim H^{0,1} = " + std::to_string(total) + "\n";
    return s + text_footer(cx);
}

} // namespace balobs
