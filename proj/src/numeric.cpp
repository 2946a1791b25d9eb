#include "balobs/numeric.hpp"

#include <cmath>

namespace balobs {

NumForm eval_form(const WForm& f, const Assignment& a) {
    NumForm out(f.n(), f.algebra());
    for (const auto& [k, c] : f.terms()) out.add_term(k, c.eval(a));
    return out;
}

NumVForm eval_vform(const VForm& v, const Assignment& a) {
    NumVForm out(v.alg);
    for (int i = 0; i < v.n(); ++i) out.comp[i] = eval_form(v.comp[i], a);
    return out;
}

Eigen::MatrixXcd eval_metric_matrix(const HermMetric& g, const Assignment& a) {
    int n = g.n();
    auto G = g.g_matrix();
    Eigen::MatrixXcd M(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) M(j, k) = G[j][k].eval(a);
    return M;
}

bool posdef_check(const Eigen::MatrixXcd& A) {
    if (A.rows() != A.cols()) throw StructuralError("posdef_check: square matrix required");
    if ((A - A.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
        throw StructuralError("posdef_check: matrix is not Hermitian");
    for (int k = 1; k <= A.rows(); ++k) {
        Cplx det = A.topLeftCorner(k, k).determinant();
        if (std::abs(det.imag()) > 1e-9 * std::max(1.0, std::abs(det.real())))
            throw StructuralError("posdef_check: principal minor is not real");
        if (det.real() <= 0.0) return false;
    }
    return true;
}

namespace {

// Unitary-coframe star on one monomial: the complementary index sets
// with the volume normalization and reordering parities. Monomials of
// degree (p,q) carry metric norm 2^{(p+q)/2} in this convention, which
// is what makes ** = (-1)^{p+q} and *1 = omega^n/n! hold together.
NumForm unitary_star(const AlgebraPtr& alg, const NumForm& f) {
    const int n = alg->n();
    const uint32_t full = (n >= 32) ? ~0u : ((1u << n) - 1u);
    Cplx half_i(0.0, 0.5);
    Cplx vol_const = std::pow(half_i, n);
    if ((n * (n - 1) / 2) % 2) vol_const = -vol_const;
    NumForm out(n, alg);
    for (const auto& [k, c] : f.terms()) {
        uint32_t hc = full & ~k.holo;
        uint32_t ac = full & ~k.anti;
        int sign = merge_sign(k.holo, hc) * merge_sign(k.anti, ac);
        if ((k.q() * (n - k.p())) % 2) sign = -sign;
        double norm2 = std::ldexp(1.0, k.p() + k.q()); // 2^{p+q}
        Cplx coeff = vol_const * norm2 * std::conj(c) * double(sign);
        out.add_term(FKey{-k.w, hc, ac}, coeff);
    }
    return out;
}

// Coframe substitution eta^j -> sum_m M(j,m) theta^m as a generator map.
FrameOp<Cplx> coframe_substitution(const AlgebraPtr& alg, const Eigen::MatrixXcd& M) {
    const int n = alg->n();
    FrameOp<Cplx> op;
    op.n = n;
    op.alg = alg;
    op.img_h.assign(n, NumForm(n, alg));
    op.img_a.assign(n, NumForm(n, alg));
    for (int j = 0; j < n; ++j)
        for (int m = 0; m < n; ++m) {
            Cplx v = M(j, m);
            if (v != Cplx(0.0, 0.0)) {
                op.img_h[j].add_term(FKey{{}, 1u << m, 0}, v);
                op.img_a[j].add_term(FKey{{}, 0, 1u << m}, std::conj(v));
            }
        }
    return op;
}

// S with S^dagger S = conj(G), so omega becomes (i/2) sum theta^{m ~m}.
Eigen::MatrixXcd unitary_coframe_matrix(const Eigen::MatrixXcd& G) {
    Eigen::MatrixXcd Gc = G.conjugate();
    Eigen::LLT<Eigen::MatrixXcd> llt(Gc);
    if (llt.info() != Eigen::Success)
        throw StructuralError("hodge star: metric is not positive definite");
    Eigen::MatrixXcd L = llt.matrixL();
    return L.adjoint();
}

} // namespace

NumForm hodge_star(const AlgebraPtr& alg, const NumForm& f, const Eigen::MatrixXcd& G) {
    if (!posdef_check(G)) throw StructuralError("hodge star: metric is not positive definite");
    Eigen::MatrixXcd S = unitary_coframe_matrix(G);
    Eigen::MatrixXcd Sinv = S.inverse();
    // eta^j = sum_m Sinv(j,m) theta^m and theta^m = sum_j S(m,j) eta^j.
    FrameOp<Cplx> to_theta = coframe_substitution(alg, Sinv);
    FrameOp<Cplx> to_eta = coframe_substitution(alg, S);
    NumForm in_theta = simcontract(to_theta, f);
    NumForm starred = unitary_star(alg, in_theta);
    return simcontract(to_eta, starred);
}

NumForm delbar_adjoint(const AlgebraPtr& alg, const NumForm& f, const Eigen::MatrixXcd& G) {
    CalcContext<Cplx> cx(alg);
    NumForm sf = hodge_star(alg, f, G);
    NumForm dsf = delbar(cx, sf);
    if (dsf.is_zero()) return NumForm(alg->n(), alg);
    return -hodge_star(alg, dsf, G);
}

bool harmonic_check(const AlgebraPtr& alg, const NumForm& f, const Eigen::MatrixXcd& G, double tol) {
    CalcContext<Cplx> cx(alg);
    return norm_inf(delbar(cx, f)) <= tol && norm_inf(delbar_adjoint(alg, f, G)) <= tol;
}

Cplx inner_product(const AlgebraPtr& alg, const NumForm& a, const NumForm& b,
                   const Eigen::MatrixXcd& G) {
    const int n = alg->n();
    const uint32_t full = (1u << n) - 1u;
    NumForm one(n, alg);
    one.add_term(FKey{{}, 0, 0}, Cplx(1.0, 0.0));
    NumForm vol = hodge_star(alg, one, G);
    const Cplx* vc = vol.coeff(FKey{{}, full, full});
    if (!vc) throw StructuralError("inner_product: volume form is degenerate");
    NumForm top = a.wedge(hodge_star(alg, b, G));
    const Cplx* tc = top.coeff(FKey{{}, full, full});
    return tc ? (*tc / *vc) : Cplx(0.0, 0.0);
}

namespace {

// Applies a generator map linearly to a 1-form (mixed types allowed).
NumForm apply_op_oneform(const FrameOp<Cplx>& op, const NumForm& f) {
    NumForm out(op.n, op.alg);
    for (const auto& [k, c] : f.terms()) {
        if (k.p() + k.q() != 1) throw StructuralError("apply_op_oneform: not a 1-form");
        const NumForm& img = k.p() == 1 ? op.img_h[std::countr_zero(k.holo)]
                                        : op.img_a[std::countr_zero(k.anti)];
        for (const auto& [ik, ic] : img.terms())
            out.add_term(FKey{ik.w + k.w, ik.holo, ik.anti}, ic * c);
    }
    return out;
}

double op_norm(const FrameOp<Cplx>& K) {
    double m = 0.0;
    for (const auto& f : K.img_h) m = std::max(m, norm_inf(f));
    for (const auto& f : K.img_a) m = std::max(m, norm_inf(f));
    return m;
}

} // namespace

FrameOp<Cplx> invert_perturbation(const FrameOp<Cplx>& K, double tol, int max_iter) {
    FrameOp<Cplx> inv = FrameOp<Cplx>::identity(K.alg);
    auto solve_gen = [&](const NumForm& unit) {
        NumForm v = unit;
        for (int it = 0; it < max_iter; ++it) {
            NumForm next = unit + apply_op_oneform(K, v);
            double delta = norm_inf(next - v);
            v = next;
            if (delta <= tol) return v;
        }
        throw StructuralError("frame endomorphism not invertible at this deformation size");
    };
    if (op_norm(K) >= 0.5)
        throw StructuralError("frame endomorphism perturbation too large to invert");
    for (int i = 0; i < K.n; ++i) {
        inv.img_h[i] = solve_gen(inv.img_h[i]);
        inv.img_a[i] = solve_gen(inv.img_a[i]);
    }
    return inv;
}

NumForm delbar_t_inner(const AlgebraPtr& alg, const NumVForm& phi, const NumForm& alpha) {
    CalcContext<Cplx> cx(alg);
    FrameOp<Cplx> K = op_phibar_phi(phi);
    FrameOp<Cplx> fwd = FrameOp<Cplx>::identity(alg) - K;
    FrameOp<Cplx> inv = invert_perturbation(K);
    NumForm beta = simcontract(fwd, alpha);
    NumForm inner = del(cx, contract(phi, beta)) - contract(phi, del(cx, beta)) + delbar(cx, beta);
    return simcontract(inv, inner);
}

NumForm delbar_t_full(const AlgebraPtr& alg, const NumVForm& phi, const NumForm& alpha) {
    return extension_map(phi, delbar_t_inner(alg, phi, alpha));
}

FDReport fd_theorem_check(const AlgebraPtr& alg, const MetricCurve& mc, const DeformationCurve& dc,
                          const std::vector<double>& steps, const Assignment& assign,
                          double error_budget_factor) {
    FDReport rep;
    rep.steps = steps;

    CalcContext<GaussPoly> cx(alg);
    WForm R_sym = theorem_residual(alg, mc, dc);
    NumForm R_num = eval_form(R_sym, assign);
    rep.derivative_norm = norm_inf(R_num);

    auto omega_pow_at = [&](double t_value) {
        Assignment at = assign;
        at.set("t", Cplx(t_value, 0.0));
        WForm pow = wedge_power(mc.omega_t, alg->n() - 1);
        return eval_form(pow, at);
    };

    for (double h : steps) {
        NumVForm phi_p = dc.eval(alg, assign, h);
        NumVForm phi_m = dc.eval(alg, assign, -h);
        NumForm inner_p = delbar_t_inner(alg, phi_p, omega_pow_at(h));
        NumForm inner_m = delbar_t_inner(alg, phi_m, omega_pow_at(-h));
        NumForm diff = (inner_p - inner_m).scaled(Cplx(1.0 / (2.0 * h), 0.0));
        rep.max_errors.push_back(norm_inf(diff - R_num));
    }

    // Order estimation needs errors above the floating-point noise
    // floor; an exactly-linear family has nothing left to estimate.
    double noise = 1e-12 * std::max(1.0, rep.derivative_norm);
    rep.order_estimable = true;
    for (double e : rep.max_errors)
        if (e <= noise) rep.order_estimable = false;
    if (rep.order_estimable) {
        for (size_t i = 0; i + 1 < steps.size(); ++i) {
            double e0 = rep.max_errors[i], e1 = rep.max_errors[i + 1];
            rep.order_estimates.push_back(std::log(e0 / e1) / std::log(steps[i] / steps[i + 1]));
        }
        if (!rep.order_estimates.empty()) {
            double s = 0.0;
            for (double o : rep.order_estimates) s += o;
            rep.order_mean = s / rep.order_estimates.size();
        }
    }

    rep.ok = true;
    for (size_t i = 0; i < steps.size(); ++i)
        if (rep.max_errors[i] > error_budget_factor * steps[i]) rep.ok = false;
    if (rep.order_estimable && !rep.order_estimates.empty() &&
        (rep.order_mean < 1.7 || rep.order_mean > 2.3))
        rep.ok = false;
    return rep;
}

} // namespace balobs
