#include "balobs/sector.hpp"

namespace balobs {

static std::vector<FKey> sector_basis(const AlgebraPtr& alg, const Weight& w, int p, int q) {
    std::vector<FKey> keys;
    if (p < 0 || q < 0 || p > alg->n() || q > alg->n()) return keys;
    for (uint32_t h : comb_masks(alg->n(), p))
        for (uint32_t a : comb_masks(alg->n(), q)) keys.push_back(FKey{w, h, a});
    return keys;
}

static ExactMat dbar_matrix(const AlgebraPtr& alg, const std::vector<FKey>& from,
                            const std::vector<FKey>& to) {
    CalcContext<GaussPoly> cx(alg);
    std::map<FKey, size_t, FKeyLess> index;
    for (size_t i = 0; i < to.size(); ++i) index[to[i]] = i;
    ExactMat M(to.size(), from.size());
    for (size_t j = 0; j < from.size(); ++j) {
        WForm mono = monomial_form<GaussPoly>(alg->n(), from[j], GaussPoly(alg->vars(), GaussRat(1)), alg);
        WForm df = delbar(cx, mono);
        for (const auto& [k, c] : df.terms()) {
            auto it = index.find(k);
            if (it == index.end())
                throw StructuralError("delbar left the declared weight sector");
            M.at(it->second, j) = c.constant_value();
        }
    }
    return M;
}

SectorComplex build_sector(const AlgebraPtr& alg, const Weight& w, int p, int q) {
    SectorComplex s;
    s.alg = alg;
    s.w = w;
    s.p = p;
    s.q = q;
    s.basis = sector_basis(alg, w, p, q);
    s.basis_up = sector_basis(alg, w, p, q + 1);
    s.basis_down = sector_basis(alg, w, p, q - 1);
    s.dbar_out = dbar_matrix(alg, s.basis, s.basis_up);
    s.dbar_in = dbar_matrix(alg, s.basis_down, s.basis);
    return s;
}

int invariant_h01_dimension(const AlgebraPtr& alg, const std::vector<Weight>& sectors) {
    int total = 0;
    for (const auto& w : sectors) {
        SectorComplex s = build_sector(alg, w, 0, 1);
        size_t kernel = s.dim() - rank(s.dbar_out);
        size_t image = rank(s.dbar_in);
        total += static_cast<int>(kernel - image);
    }
    return total;
}

std::vector<Weight> default_sectors(const AlgebraPtr& alg) {
    std::vector<Weight> ws;
    Weight zero;
    zero.exp.assign(alg->characters().size(), 0);
    ws.push_back(zero);
    for (size_t c = 0; c < alg->characters().size(); ++c) {
        ws.push_back(alg->character_weight(static_cast<int>(c), 1));
        ws.push_back(alg->character_weight(static_cast<int>(c), -1));
    }
    return ws;
}

ClassResidual reduce_class(const AlgebraPtr& alg, const WForm& theta) {
    ClassResidual out;
    out.input = theta;
    out.exact_part = WForm(alg->n(), alg);
    out.potential = WForm(alg->n(), alg);
    out.residual = WForm(alg->n(), alg);
    if (theta.is_zero()) return out;

    Bidegree b = theta.bidegree();
    if (b.kind != Bidegree::Pure)
        throw StructuralError("reduce_class needs a bidegree-homogeneous form");
    {
        CalcContext<GaussPoly> cx(alg);
        if (!delbar(cx, theta).is_zero())
            throw StructuralError("reduce_class input is not delbar-closed");
    }

    for (const Weight& w : theta.weights()) {
        WForm part = theta.project_weight(w);
        SectorComplex s = build_sector(alg, w, b.p, b.q);
        std::vector<GaussPoly> v(s.dim(), GaussPoly(alg->vars()));
        for (size_t i = 0; i < s.basis.size(); ++i) {
            const GaussPoly* c = part.coeff(s.basis[i]);
            if (c) v[i] = *c;
        }
        ImageProjector proj = image_projector(s.dbar_in);
        auto apply_poly = [&](const ExactMat& M, const std::vector<GaussPoly>& x) {
            std::vector<GaussPoly> r(M.rows(), GaussPoly(alg->vars()));
            for (size_t i = 0; i < M.rows(); ++i)
                for (size_t j = 0; j < M.cols(); ++j)
                    if (!M.at(i, j).is_zero()) r[i] += x[j] * M.at(i, j);
            return r;
        };
        std::vector<GaussPoly> exact = apply_poly(proj.projector, v);
        std::vector<GaussPoly> pot = apply_poly(proj.preimage, v);
        for (size_t i = 0; i < s.basis.size(); ++i) {
            out.exact_part.add_term(s.basis[i], exact[i]);
            GaussPoly resid = v[i] - exact[i];
            if (!resid.is_zero()) {
                out.residual.add_term(s.basis[i], resid);
                out.conditions_raw.push_back(resid);
                out.conditions.push_back(resid.monic());
                WForm label = monomial_form<GaussPoly>(alg->n(), s.basis[i],
                                                       GaussPoly(alg->vars(), GaussRat(1)), alg);
                out.condition_monomials.push_back(alg->form_str(label));
            }
        }
        for (size_t i = 0; i < s.basis_down.size(); ++i)
            out.potential.add_term(s.basis_down[i], pot[i]);
    }

    if (out.exact_part + out.residual != theta)
        throw StructuralError("reduce_class: decomposition does not recompose");
    {
        CalcContext<GaussPoly> cx(alg);
        if (delbar(cx, out.potential) != out.exact_part)
            throw StructuralError("reduce_class: potential does not certify the exact part");
    }
    return out;
}

bool certify_exact(const AlgebraPtr& alg, const WForm& theta_term, const WForm& beta) {
    CalcContext<GaussPoly> cx(alg);
    return delbar(cx, beta) == theta_term;
}

} // namespace balobs
