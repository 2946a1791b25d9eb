#include "balobs/metrics.hpp"

namespace balobs {

std::string convention_name(OmegaConvention c) {
    return c == OmegaConvention::PaperLiteral ? "paper-literal" : "hermitian-standard";
}

OmegaConvention convention_from_name(const std::string& s) {
    if (s == "paper-literal") return OmegaConvention::PaperLiteral;
    if (s == "hermitian-standard") return OmegaConvention::HermitianStandard;
    throw StructuralError("unknown convention: " + s);
}

HermMetric::HermMetric(AlgebraPtr alg, std::vector<std::vector<GaussPoly>> upper)
    : alg_(std::move(alg)) {
    int n = alg_->n();
    if ((int)upper.size() != n) throw StructuralError("metric matrix has wrong size");
    A_.assign(n, std::vector<GaussPoly>(n, GaussPoly(alg_->vars())));
    for (int j = 0; j < n; ++j) {
        for (int k = j; k < n; ++k) {
            A_[j][k] = upper[j][k];
            A_[k][j] = upper[j][k].conj();
        }
        if (A_[j][j] != A_[j][j].conj())
            throw StructuralError("metric diagonal entry " + std::to_string(j + 1) +
                                  " is not self-conjugate");
    }
}

HermMetric HermMetric::generic(const AlgebraPtr& alg, const std::string& prefix) {
    int n = alg->n();
    std::vector<std::vector<GaussPoly>> upper(n, std::vector<GaussPoly>(n, GaussPoly(alg->vars())));
    for (int j = 0; j < n; ++j)
        for (int k = j; k < n; ++k) {
            std::string name = prefix + std::to_string(j + 1) + std::to_string(k + 1);
            upper[j][k] = GaussPoly::variable(alg->vars(), name);
        }
    return HermMetric(alg, std::move(upper));
}

HermMetric HermMetric::identity(const AlgebraPtr& alg) {
    int n = alg->n();
    std::vector<std::vector<GaussPoly>> upper(n, std::vector<GaussPoly>(n, GaussPoly(alg->vars())));
    for (int j = 0; j < n; ++j) upper[j][j] = GaussPoly(alg->vars(), GaussRat(1));
    return HermMetric(alg, std::move(upper));
}

std::vector<std::vector<GaussPoly>> HermMetric::g_matrix() const {
    int nn = n();
    GaussRat mi(make_rat(0), make_rat(-1)); // -i
    GaussRat pi_(make_rat(0), make_rat(1)); // +i
    std::vector<std::vector<GaussPoly>> G(nn, std::vector<GaussPoly>(nn, GaussPoly(alg_->vars())));
    for (int j = 0; j < nn; ++j)
        for (int k = 0; k < nn; ++k) {
            if (j == k) G[j][k] = A_[j][k];
            else if (j < k) G[j][k] = A_[j][k] * mi;
            else G[j][k] = A_[j][k] * pi_;
        }
    return G;
}

WForm omega_from_metric(const HermMetric& g, OmegaConvention conv) {
    const AlgebraPtr& alg = g.algebra();
    int n = g.n();
    WForm omega(n, alg);
    GaussRat half_i(make_rat(0), make_rat(1, 2));
    GaussRat half(make_rat(1, 2));
    if (conv == OmegaConvention::PaperLiteral) {
        for (int j = 0; j < n; ++j)
            omega += eta(alg, j + 1).wedge(etabar(alg, j + 1)).scaled(g.entry(j, j) * half_i);
        for (int j = 0; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                omega += eta(alg, j + 1).wedge(etabar(alg, k + 1))
                             .scaled((g.entry(j, k) - g.entry(k, j)) * half);
    } else {
        auto G = g.g_matrix();
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                omega += eta(alg, j + 1).wedge(etabar(alg, k + 1)).scaled(G[j][k] * half_i);
    }
    return omega;
}

WForm wedge_power(const WForm& omega, int k) {
    if (k < 1) throw StructuralError("wedge_power exponent must be >= 1");
    WForm out = omega;
    for (int i = 1; i < k; ++i) out = out.wedge(omega);
    return out;
}

WForm realness_defect(const WForm& omega) { return omega.conj() - omega; }

BalancedResult balanced_check(const AlgebraPtr& alg, const WForm& omega) {
    CalcContext<GaussPoly> cx(alg);
    WForm pow = wedge_power(omega, alg->n() - 1);
    BalancedResult r;
    r.residual = delbar(cx, pow);
    r.balanced = r.residual.is_zero();
    return r;
}

} // namespace balobs
