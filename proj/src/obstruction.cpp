#include "balobs/obstruction.hpp"

#include <Eigen/Dense>

#include "balobs/numeric.hpp"

namespace balobs {

static int t_index(const AlgebraPtr& alg) { return alg->vars()->index_of("t"); }

void DeformationCurve::validate(const AlgebraPtr& alg) const {
    phi_t.expect_bidegree(0, 1, "deformation curve");
    int t = t_index(alg);
    for (const auto& compf : phi_t.comp)
        for (const auto& [k, c] : compf.terms())
            if (!c.coeff_of_power(t, 0).is_zero())
                throw StructuralError("deformation curve with phi(0) != 0");
}

VForm DeformationCurve::derivative_at_zero(const AlgebraPtr& alg) const {
    int t = t_index(alg);
    VForm out(alg);
    for (int i = 0; i < (int)phi_t.comp.size(); ++i) {
        for (const auto& [k, c] : phi_t.comp[i].terms()) {
            GaussPoly lin = c.coeff_of_power(t, 1);
            if (!lin.is_zero()) out.comp[i].add_term(k, lin);
        }
    }
    return out;
}

NumVForm DeformationCurve::eval(const AlgebraPtr&, const Assignment& a, double t_value) const {
    Assignment at = a;
    at.set("t", Cplx(t_value, 0.0));
    return eval_vform(phi_t, at);
}

MetricCurve MetricCurve::constant(const HermMetric& g, OmegaConvention conv) {
    MetricCurve mc;
    mc.base = g;
    mc.convention = conv;
    mc.omega_t = omega_from_metric(g, conv);
    return mc;
}

MetricCurve MetricCurve::linear(const HermMetric& g, OmegaConvention conv, const WForm& omega_dot) {
    MetricCurve mc = constant(g, conv);
    GaussPoly tvar = GaussPoly::variable(g.algebra()->vars(), "t");
    mc.omega_t += omega_dot.scaled(tvar);
    return mc;
}

WForm MetricCurve::omega0() const {
    const AlgebraPtr& alg = base.algebra();
    int t = t_index(alg);
    WForm out(alg->n(), alg);
    for (const auto& [k, c] : omega_t.terms()) out.add_term(k, c.coeff_of_power(t, 0));
    return out;
}

WForm MetricCurve::power_derivative_at_zero(const AlgebraPtr& alg) const {
    WForm pow = wedge_power(omega_t, alg->n() - 1);
    int t = t_index(alg);
    WForm out(alg->n(), alg);
    for (const auto& [k, c] : pow.terms()) {
        GaussPoly lin = c.coeff_of_power(t, 1);
        if (!lin.is_zero()) out.add_term(k, lin);
    }
    return out;
}

WForm first_order_obstruction(const AlgebraPtr& alg, const WForm& omega, const VForm& phi_prime0) {
    phi_prime0.expect_bidegree(0, 1, "phi'(0)");
    CalcContext<GaussPoly> cx(alg);
    WForm pow = wedge_power(omega, alg->n() - 1);
    WForm contracted = contract(phi_prime0, pow);
    if (contracted.is_zero()) return WForm(alg->n(), alg);
    return del(cx, contracted);
}

WForm theorem_residual(const AlgebraPtr& alg, const MetricCurve& mc, const DeformationCurve& dc) {
    CalcContext<GaussPoly> cx(alg);
    WForm theta = first_order_obstruction(alg, mc.omega0(), dc.derivative_at_zero(alg));
    WForm dot = mc.power_derivative_at_zero(alg);
    if (dot.is_zero()) return theta;
    return theta + delbar(cx, dot);
}

ClassResidual corollary_conditions(const AlgebraPtr& alg, const WForm& omega, const VForm& phi_prime0) {
    return reduce_class(alg, first_order_obstruction(alg, omega, phi_prime0));
}

ObstructionReport analyze(const HermMetric& g, OmegaConvention conv, const DeformationCurve& dc,
                          const std::vector<std::string>& assumptions, const Assignment* assign) {
    const AlgebraPtr& alg = g.algebra();
    ObstructionReport rep;
    rep.model = alg->name();
    rep.curve = dc.name;
    rep.convention = conv;
    rep.assumptions = assumptions;
    dc.validate(alg);
    {
        CalcContext<GaussPoly> cx(alg);
        rep.mc_checked = mc_residual(cx, dc.phi_t).is_zero();
    }
    WForm omega = omega_from_metric(g, conv);
    rep.theta = first_order_obstruction(alg, omega, dc.derivative_at_zero(alg));
    rep.theorem_res = theorem_residual(alg, MetricCurve::constant(g, conv), dc);
    rep.class_residual = reduce_class(alg, rep.theta);
    if (assign) rep.verdict_result = verdict(alg, g, rep.class_residual, *assign);
    rep.notes.push_back(rep.mc_checked
                            ? "curve satisfies the Maurer-Cartan equation identically in t"
                            : "curve satisfies Maurer-Cartan only to first order (linear "
                              "parametrization; higher-order corrections not included)");
    rep.notes.push_back("obstructions are first-order necessary conditions only; they never "
                        "assert existence of a balanced family");
    rep.notes.push_back("nonvanishing is certified in the invariant character-weighted "
                        "subcomplex; identification with full Dolbeault classes rests on the "
                        "harmonicity of the complement representatives, verified numerically "
                        "but not proved");
    return rep;
}

VerdictResult verdict(const AlgebraPtr&, const HermMetric& g, const ClassResidual& conditions,
                      const Assignment& assign, double tol) {
    Eigen::MatrixXcd G = eval_metric_matrix(g, assign);
    if (!posdef_check(G))
        throw StructuralError("metric assignment is not positive definite");
    VerdictResult out;
    out.tolerance = tol;
    for (size_t i = 0; i < conditions.conditions.size(); ++i) {
        Cplx v = conditions.conditions[i].eval(assign);
        out.values.push_back(v);
        if (std::abs(v) > tol) {
            out.obstructed = true;
            out.fired.push_back(i);
        }
    }
    return out;
}

} // namespace balobs
