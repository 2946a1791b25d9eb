#pragma once

#include "balobs/algebra.hpp"

namespace balobs {

/// Structure data of an algebra converted to the coefficient ring C.
/// For GaussPoly this is the algebra as declared; for Cplx the constant
/// structure coefficients are evaluated to complex doubles.
template <class C>
struct CalcContext {
    const AlgebraPtr alg;
    std::vector<Form<C>> d_eta;
    std::vector<Form<C>> d_etabar;
    std::vector<Form<C>> dlog10;
    std::vector<Form<C>> dlog01;

    explicit CalcContext(AlgebraPtr a) : alg(std::move(a)) {
        int n = alg->n();
        for (int k = 0; k < n; ++k) {
            Form<C> s = convert(alg->d_eta(k));
            d_eta.push_back(s);
            d_etabar.push_back(s.conj());
        }
        for (const auto& ch : alg->characters()) {
            dlog10.push_back(convert(ch.dlog10));
            dlog01.push_back(convert(ch.dlog01));
        }
    }

    static Form<C> convert(const WForm& f) {
        Form<C> r(f.n(), f.algebra());
        for (const auto& [k, c] : f.terms()) {
            if (!c.is_constant())
                throw StructuralError("structure coefficients must be constants");
            r.add_term(k, CoeffOps<C>::from_gaussrat(c.constant_value()));
        }
        return r;
    }
};

/// Exterior differential: Leibniz over the structure 2-forms plus the
/// closed character log-differential on each weight sector.
template <class C>
Form<C> d(const CalcContext<C>& cx, const Form<C>& f) {
    const int n = cx.alg->n();
    if (f.n() && f.n() != n) throw StructuralError("form does not match algebra");
    Form<C> out(n, cx.alg);
    for (const auto& [key, coeff] : f.terms()) {
        // Weight sector: d(e^w m) = e^w (dlog(w) ^ m + d m).
        if (!key.w.is_zero()) {
            Form<C> dlog(n, cx.alg);
            for (size_t c = 0; c < cx.dlog10.size(); ++c) {
                int e = key.w.get(c);
                if (e == 0) continue;
                dlog += (cx.dlog10[c] + cx.dlog01[c]).scaled(GaussRat(e));
            }
            out += dlog.wedge(monomial_form<C>(n, key, coeff, cx.alg));
        }
        // Leibniz over the factors, differential moved to the front.
        int pos = 0;
        for (uint32_t x = key.holo; x; x &= x - 1, ++pos) {
            int i = std::countr_zero(x);
            FKey rest{key.w, key.holo & ~(1u << i), key.anti};
            C c = (pos % 2) ? CoeffOps<C>::scale(coeff, GaussRat(-1)) : coeff;
            out += cx.d_eta[i].wedge(monomial_form<C>(n, rest, c, cx.alg));
        }
        int p = key.p();
        int apos = 0;
        for (uint32_t x = key.anti; x; x &= x - 1, ++apos) {
            int j = std::countr_zero(x);
            FKey rest{key.w, key.holo, key.anti & ~(1u << j)};
            C c = ((p + apos) % 2) ? CoeffOps<C>::scale(coeff, GaussRat(-1)) : coeff;
            out += cx.d_etabar[j].wedge(monomial_form<C>(n, rest, c, cx.alg));
        }
    }
    return out;
}

/// (p+1,q) projection of d; input must be bidegree-homogeneous.
template <class C>
Form<C> del(const CalcContext<C>& cx, const Form<C>& f) {
    Bidegree b = f.bidegree();
    if (b.kind == Bidegree::Mixed) throw StructuralError("del on mixed-degree form");
    if (b.kind == Bidegree::ZeroForm) return Form<C>(cx.alg->n(), cx.alg);
    return d(cx, f).project(b.p + 1, b.q);
}

/// (p,q+1) projection of d; input must be bidegree-homogeneous.
template <class C>
Form<C> delbar(const CalcContext<C>& cx, const Form<C>& f) {
    Bidegree b = f.bidegree();
    if (b.kind == Bidegree::Mixed) throw StructuralError("delbar on mixed-degree form");
    if (b.kind == Bidegree::ZeroForm) return Form<C>(cx.alg->n(), cx.alg);
    return d(cx, f).project(b.p, b.q + 1);
}

/// (0,1)-form with values in the (1,0) frame: component i is the
/// coefficient of Z_{i+1}. Components may live in weight sectors and
/// depend polynomially on the curve parameter.
template <class C>
struct VectorForm {
    AlgebraPtr alg;
    std::vector<Form<C>> comp;

    explicit VectorForm(AlgebraPtr a) : alg(std::move(a)), comp(alg->n(), Form<C>(alg->n(), alg)) {}
    VectorForm() = default;

    int n() const { return static_cast<int>(comp.size()); }
    bool is_zero() const {
        for (const auto& c : comp) if (!c.is_zero()) return false;
        return true;
    }
    VectorForm operator+(const VectorForm& o) const {
        VectorForm r = *this;
        for (int i = 0; i < n(); ++i) r.comp[i] += o.comp[i];
        return r;
    }
    VectorForm operator-(const VectorForm& o) const {
        VectorForm r = *this;
        for (int i = 0; i < n(); ++i) r.comp[i] -= o.comp[i];
        return r;
    }
    VectorForm scaled(const GaussRat& c) const {
        VectorForm r = *this;
        for (auto& f : r.comp) f = f.scaled(c);
        return r;
    }
    double norm_inf() const;

    /// Checks every component is homogeneous of the given bidegree.
    void expect_bidegree(int p, int q, const char* what) const {
        for (const auto& c : comp) {
            Bidegree b = c.bidegree();
            if (b.kind == Bidegree::Pure && !(b.p == p && b.q == q))
                throw StructuralError(std::string(what) + ": component of wrong bidegree");
            if (b.kind == Bidegree::Mixed)
                throw StructuralError(std::string(what) + ": mixed-degree component");
        }
    }
};

using VForm = VectorForm<GaussPoly>;
using NumVForm = VectorForm<Cplx>;

/// Contraction i_phi: (p,q) -> (p-1,q+1), summed over the frame.
template <class C>
Form<C> contract(const VectorForm<C>& phi, const Form<C>& f) {
    if (phi.alg && f.algebra() && phi.alg != f.algebra())
        throw StructuralError("contract: mismatched algebras");
    Form<C> out(f.n(), f.algebra() ? f.algebra() : phi.alg);
    for (int i = 0; i < phi.n(); ++i) {
        if (phi.comp[i].is_zero()) continue;
        out += phi.comp[i].wedge(frame_contract(f, i, true));
    }
    return out;
}

/// Contraction by the conjugate vector form, i_{conj(phi)}:
/// (p,q) -> (p+1,q-1).
template <class C>
Form<C> contract_conj(const VectorForm<C>& phi, const Form<C>& f) {
    Form<C> out(f.n(), f.algebra() ? f.algebra() : phi.alg);
    for (int j = 0; j < phi.n(); ++j) {
        if (phi.comp[j].is_zero()) continue;
        out += phi.comp[j].conj().wedge(frame_contract(f, j, false));
    }
    return out;
}

/// A linear substitution on the 2n coframe generators; entries are
/// general weighted 1-forms. Used for the simultaneous contraction and
/// for coframe changes.
template <class C>
struct FrameOp {
    int n = 0;
    AlgebraPtr alg;
    std::vector<Form<C>> img_h;
    std::vector<Form<C>> img_a;

    static FrameOp identity(const AlgebraPtr& a) {
        FrameOp op;
        op.n = a->n();
        op.alg = a;
        for (int i = 0; i < op.n; ++i) {
            op.img_h.push_back(monomial_form<C>(op.n, FKey{{}, 1u << i, 0}, CoeffOps<C>::from_gaussrat(GaussRat(1)), a));
            op.img_a.push_back(monomial_form<C>(op.n, FKey{{}, 0, 1u << i}, CoeffOps<C>::from_gaussrat(GaussRat(1)), a));
        }
        return op;
    }

    FrameOp operator+(const FrameOp& o) const {
        FrameOp r = *this;
        for (int i = 0; i < n; ++i) {
            r.img_h[i] += o.img_h[i];
            r.img_a[i] += o.img_a[i];
        }
        return r;
    }
    FrameOp operator-(const FrameOp& o) const {
        FrameOp r = *this;
        for (int i = 0; i < n; ++i) {
            r.img_h[i] -= o.img_h[i];
            r.img_a[i] -= o.img_a[i];
        }
        return r;
    }
};

/// Replace a (1,0)-form's factors eta^k by phi^k.
template <class C>
Form<C> substitute_holo_by_phi(const VectorForm<C>& phi, const Form<C>& one_form) {
    Form<C> out(one_form.n(), one_form.algebra() ? one_form.algebra() : phi.alg);
    for (const auto& [k, c] : one_form.terms()) {
        if (k.p() != 1 || k.q() != 0) throw StructuralError("expected a (1,0)-form");
        int i = std::countr_zero(k.holo);
        Form<C> w(out.n(), out.algebra());
        for (const auto& [pk, pc] : phi.comp[i].terms())
            w.add_term(FKey{pk.w + k.w, pk.holo, pk.anti}, pc);
        out += w.scaled(c);
    }
    return out;
}

/// The operator phi-bar-phi (contraction of the conjugate through phi):
/// endomorphism data on antiholomorphic generators.
template <class C>
FrameOp<C> op_phibar_phi(const VectorForm<C>& phi) {
    FrameOp<C> op;
    op.n = phi.n();
    op.alg = phi.alg;
    op.img_h.assign(op.n, Form<C>(op.n, phi.alg));
    op.img_a.assign(op.n, Form<C>(op.n, phi.alg));
    for (int j = 0; j < op.n; ++j)
        op.img_a[j] = substitute_holo_by_phi(phi, phi.comp[j].conj());
    return op;
}

/// The operator phi-phi-bar: endomorphism data on holomorphic generators.
template <class C>
FrameOp<C> op_phi_phibar(const VectorForm<C>& phi) {
    FrameOp<C> op;
    op.n = phi.n();
    op.alg = phi.alg;
    op.img_h.assign(op.n, Form<C>(op.n, phi.alg));
    op.img_a.assign(op.n, Form<C>(op.n, phi.alg));
    for (int i = 0; i < op.n; ++i) {
        // Replace each antiholomorphic factor of phi^i by conj(phi^j).
        Form<C> acc(op.n, phi.alg);
        for (const auto& [k, c] : phi.comp[i].terms()) {
            if (k.p() != 0 || k.q() != 1) throw StructuralError("vector form component is not (0,1)");
            int j = std::countr_zero(k.anti);
            Form<C> conj_j = phi.comp[j].conj();
            Form<C> w(op.n, phi.alg);
            for (const auto& [pk, pc] : conj_j.terms())
                w.add_term(FKey{pk.w + k.w, pk.holo, pk.anti}, pc);
            acc += w.scaled(c);
        }
        op.img_h[i] = acc;
    }
    return op;
}

/// The generator map of (I + phi + conj(phi)), whose simultaneous
/// contraction equals the extension map.
template <class C>
FrameOp<C> op_identity_plus_phi(const VectorForm<C>& phi) {
    FrameOp<C> op = FrameOp<C>::identity(phi.alg);
    for (int i = 0; i < op.n; ++i) {
        op.img_h[i] += phi.comp[i];
        op.img_a[i] += phi.comp[i].conj();
    }
    return op;
}

/// Simultaneous contraction: every 1-form factor of every monomial is
/// replaced by its image under the generator map at once.
template <class C>
Form<C> simcontract(const FrameOp<C>& op, const Form<C>& f) {
    Form<C> out(f.n(), f.algebra() ? f.algebra() : op.alg);
    for (const auto& [k, c] : f.terms()) {
        Form<C> prod = monomial_form<C>(out.n(), FKey{k.w, 0, 0}, c, out.algebra());
        for (uint32_t x = k.holo; x; x &= x - 1)
            prod = prod.wedge(op.img_h[std::countr_zero(x)]);
        for (uint32_t x = k.anti; x; x &= x - 1)
            prod = prod.wedge(op.img_a[std::countr_zero(x)]);
        out += prod;
    }
    return out;
}

/// Extension map by iterated contractions: e^{i_phi} on the holomorphic
/// block wedge e^{i_conj(phi)} on the antiholomorphic block, finite sums.
template <class C>
Form<C> extension_map(const VectorForm<C>& phi, const Form<C>& f) {
    Form<C> out(f.n(), f.algebra() ? f.algebra() : phi.alg);
    const GaussRat one(1);
    for (const auto& [k, c] : f.terms()) {
        Form<C> A = monomial_form<C>(out.n(), FKey{{}, k.holo, 0},
                                     CoeffOps<C>::from_gaussrat(one), out.algebra());
        Form<C> B = monomial_form<C>(out.n(), FKey{{}, 0, k.anti},
                                     CoeffOps<C>::from_gaussrat(one), out.algebra());
        Form<C> EA(out.n(), out.algebra());
        {
            Form<C> cur = A;
            Rat fact(1);
            for (int kk = 0; kk <= k.p(); ++kk) {
                if (kk > 0) {
                    fact *= kk;
                    cur = contract(phi, cur);
                    if (cur.is_zero()) break;
                }
                EA += cur.scaled(GaussRat(Rat(1) / fact));
            }
        }
        Form<C> EB(out.n(), out.algebra());
        {
            Form<C> cur = B;
            Rat fact(1);
            for (int kk = 0; kk <= k.q(); ++kk) {
                if (kk > 0) {
                    fact *= kk;
                    cur = contract_conj(phi, cur);
                    if (cur.is_zero()) break;
                }
                EB += cur.scaled(GaussRat(Rat(1) / fact));
            }
        }
        out += EA.wedge(EB).scaled(c).wedge(monomial_form<C>(out.n(), FKey{k.w, 0, 0},
                                                             CoeffOps<C>::from_gaussrat(one), out.algebra()));
    }
    return out;
}

/// Lie derivative along Z_{i+1} of a (0,1)-form (Cartan formula; the
/// i_Z term vanishes on (0,1)-forms, weights contribute through dlog).
template <class C>
Form<C> lie_derivative(const CalcContext<C>& cx, int i, const Form<C>& beta) {
    return frame_contract(d(cx, beta), i, true);
}

/// Frame-adapted Nijenhuis bracket of (0,1) vector forms; components of
/// the result have bidegree (0,2).
template <class C>
VectorForm<C> bracket(const CalcContext<C>& cx, const VectorForm<C>& phi, const VectorForm<C>& psi) {
    const int n = cx.alg->n();
    VectorForm<C> out(cx.alg);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (!phi.comp[i].is_zero() && !psi.comp[j].is_zero())
                out.comp[j] += phi.comp[i].wedge(lie_derivative(cx, i, psi.comp[j]));
            if (!psi.comp[i].is_zero() && !phi.comp[j].is_zero())
                out.comp[j] += psi.comp[i].wedge(lie_derivative(cx, i, phi.comp[j]));
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (phi.comp[i].is_zero() || psi.comp[j].is_zero()) continue;
            Form<C> wedge_ij = phi.comp[i].wedge(psi.comp[j]);
            if (wedge_ij.is_zero()) continue;
            for (int k = 0; k < n; ++k) {
                GaussRat c = cx.alg->lie_bracket_coeff(i, j, k);
                if (!c.is_zero()) out.comp[k] += wedge_ij.scaled(c);
            }
        }
    }
    return out;
}

/// Componentwise Dolbeault operator on a (0,1) vector form (the frame
/// is holomorphic on the parallelisable models handled here).
template <class C>
VectorForm<C> delbar_vform(const CalcContext<C>& cx, const VectorForm<C>& phi) {
    phi.expect_bidegree(0, 1, "delbar_vform");
    VectorForm<C> out(cx.alg);
    for (int i = 0; i < cx.alg->n(); ++i)
        out.comp[i] = d(cx, phi.comp[i]).project(0, 2);
    return out;
}

/// Maurer-Cartan residual delbar(phi) - 1/2 [phi, phi], exact in t.
template <class C>
VectorForm<C> mc_residual(const CalcContext<C>& cx, const VectorForm<C>& phi) {
    phi.expect_bidegree(0, 1, "mc_residual");
    VectorForm<C> res = delbar_vform(cx, phi);
    VectorForm<C> br = bracket(cx, phi, phi);
    for (int i = 0; i < cx.alg->n(); ++i)
        res.comp[i] -= br.comp[i].scaled(GaussRat(make_rat(1, 2)));
    return res;
}

} // namespace balobs
