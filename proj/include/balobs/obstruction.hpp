#pragma once

#include "balobs/sector.hpp"

namespace balobs {

/// Deformation curve phi(t): a (0,1) vector form whose coefficients are
/// polynomials in the reserved real parameter t, with phi(0) = 0.
struct DeformationCurve {
    std::string name;
    VForm phi_t;

    void validate(const AlgebraPtr& alg) const;
    /// t-linear part of the curve.
    VForm derivative_at_zero(const AlgebraPtr& alg) const;
    /// Numeric evaluation at a parameter value (assignment must cover
    /// the direction coefficients).
    NumVForm eval(const AlgebraPtr& alg, const Assignment& a, double t_value) const;
};

/// Metric curve omega(t) = omega + t*omega_1 (+ higher t-terms folded
/// into the t-polynomial coefficients of omega_t).
struct MetricCurve {
    HermMetric base;
    WForm omega_t; // includes the t = 0 part
    OmegaConvention convention = OmegaConvention::HermitianStandard;

    static MetricCurve constant(const HermMetric& g, OmegaConvention conv);
    static MetricCurve linear(const HermMetric& g, OmegaConvention conv, const WForm& omega_dot);

    WForm omega0() const;
    /// d/dt at t=0 of the coefficients of omega(t)^{n-1}.
    WForm power_derivative_at_zero(const AlgebraPtr& alg) const;
};

/// Theta = del(i_{phi'(0)}(omega^{n-1})), the first-order obstruction
/// form of bidegree (n-1, n).
WForm first_order_obstruction(const AlgebraPtr& alg, const WForm& omega, const VForm& phi_prime0);

/// R = del(i_{phi'(0)}(omega^{n-1})) + delbar((omega^{n-1}(0))');
/// identically zero is the necessary condition for a balanced family.
WForm theorem_residual(const AlgebraPtr& alg, const MetricCurve& mc, const DeformationCurve& dc);

/// reduce_class of the obstruction form: vanishing conditions for the
/// Dolbeault class of Theta.
ClassResidual corollary_conditions(const AlgebraPtr& alg, const WForm& omega, const VForm& phi_prime0);

struct VerdictResult {
    bool obstructed = false;
    std::vector<size_t> fired;     // indices of conditions that evaluated nonzero
    std::vector<Cplx> values;      // value of each condition at the assignment
    double tolerance = 1e-9;
};

/// Numeric verdict: obstructed iff some condition evaluates nonzero
/// beyond tolerance. The metric assignment must be positive definite.
VerdictResult verdict(const AlgebraPtr& alg, const HermMetric& g, const ClassResidual& conditions,
                      const Assignment& assign, double tol = 1e-9);

struct ObstructionReport {
    std::string model;
    std::string curve;
    OmegaConvention convention = OmegaConvention::HermitianStandard;
    bool mc_checked = false; // curve satisfies Maurer-Cartan identically in t
    WForm theta;
    WForm theorem_res;
    ClassResidual class_residual;
    std::optional<VerdictResult> verdict_result;
    std::vector<std::string> assumptions;
    std::vector<std::string> notes;
};

/// Runs the full corollary pipeline for one curve: obstruction form,
/// theorem residual for the constant metric curve, class reduction and
/// (when an assignment is supplied) the numeric verdict.
ObstructionReport analyze(const HermMetric& g, OmegaConvention conv, const DeformationCurve& dc,
                          const std::vector<std::string>& assumptions,
                          const Assignment* assign = nullptr);

} // namespace balobs
