#pragma once

#include <Eigen/Dense>

#include "balobs/obstruction.hpp"

namespace balobs {

NumForm eval_form(const WForm& f, const Assignment& a);
NumVForm eval_vform(const VForm& v, const Assignment& a);
Eigen::MatrixXcd eval_metric_matrix(const HermMetric& g, const Assignment& a);

/// Hermitian within 1e-12 is a precondition (throws otherwise); true
/// iff all leading principal minors are positive.
bool posdef_check(const Eigen::MatrixXcd& A);

/// C-antilinear Hodge star for a numeric positive-definite metric:
/// factor the metric into a unitary coframe, star there, transform
/// back. *1 = omega^n/n! and ** = +-1 per bidegree by construction.
NumForm hodge_star(const AlgebraPtr& alg, const NumForm& f, const Eigen::MatrixXcd& G);

/// delbar adjoint -*(delbar(*f)).
NumForm delbar_adjoint(const AlgebraPtr& alg, const NumForm& f, const Eigen::MatrixXcd& G);

/// delbar f = 0 and delbar* f = 0 within tol on coefficients.
bool harmonic_check(const AlgebraPtr& alg, const NumForm& f, const Eigen::MatrixXcd& G,
                    double tol = 1e-10);

/// L2-type pairing <a,b> = (a wedge *b) / vol, both top forms.
Cplx inner_product(const AlgebraPtr& alg, const NumForm& a, const NumForm& b,
                   const Eigen::MatrixXcd& G);

/// Generator images of (I - K)^{-1} for a small perturbation K, by
/// fixed-point iteration (direct solve is the weight-free special
/// case; the iteration also covers weight-mixing entries).
FrameOp<Cplx> invert_perturbation(const FrameOp<Cplx>& K, double tol = 1e-14, int max_iter = 128);

/// Inner form of the deformed Dolbeault operator:
///   (I - phibar phi)^{-1} simcontract ([del, i_phi] + delbar)
///                         ((I - phibar phi) simcontract alpha).
/// The outer extension map is omitted: it is an isomorphism and does
/// not affect vanishing.
NumForm delbar_t_inner(const AlgebraPtr& alg, const NumVForm& phi, const NumForm& alpha);

/// Same with the outer extension map applied.
NumForm delbar_t_full(const AlgebraPtr& alg, const NumVForm& phi, const NumForm& alpha);

struct FDReport {
    std::vector<double> steps;
    std::vector<double> max_errors;     // per step: |FD derivative - R| on coefficients
    std::vector<double> order_estimates; // successive-ratio estimates
    double order_mean = 0.0;
    double derivative_norm = 0.0;
    // false when the errors sit at the floating-point noise floor
    // (exactly-linear families); the order gate is skipped then.
    bool order_estimable = false;
    bool ok = false;
};

/// Central-difference derivative of the inner form along the curve,
/// compared against the numeric evaluation of the symbolic residual
/// R = Theta + delbar((omega^{n-1}(0))').
FDReport fd_theorem_check(const AlgebraPtr& alg, const MetricCurve& mc, const DeformationCurve& dc,
                          const std::vector<double>& steps, const Assignment& assign,
                          double error_budget_factor = 1e-3);

} // namespace balobs
