#include "balobs/algebra.hpp"

#include <cstdio>

#include "balobs/calculus.hpp"

namespace balobs {

std::vector<uint32_t> comb_masks(int n, int k) {
    std::vector<uint32_t> out;
    if (k < 0 || k > n) return out;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        uint32_t m = 0;
        for (int i : idx) m |= 1u << i;
        out.push_back(m);
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == n - k + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
    return out;
}

double norm_inf(const NumForm& f) {
    double m = 0.0;
    for (const auto& [k, c] : f.terms()) m = std::max(m, std::abs(c));
    return m;
}

template <>
double VectorForm<Cplx>::norm_inf() const {
    double m = 0.0;
    for (const auto& c : comp) m = std::max(m, balobs::norm_inf(c));
    return m;
}

template <>
double VectorForm<GaussPoly>::norm_inf() const {
    throw StructuralError("norm_inf on symbolic vector form");
}

AlgebraPtr CoframeAlgebra::create(std::string name, int n, VarTablePtr vars,
                                  std::vector<WForm> d_eta,
                                  std::vector<Character> characters,
                                  std::vector<std::string> assumptions,
                                  bool validate_d2) {
    if ((int)d_eta.size() != n) throw StructuralError("need one structure 2-form per generator");
    auto alg = std::shared_ptr<CoframeAlgebra>(new CoframeAlgebra());
    alg->name_ = std::move(name);
    alg->n_ = n;
    alg->vars_ = std::move(vars);
    alg->d_eta_ = std::move(d_eta);
    alg->characters_ = std::move(characters);
    alg->assumptions_ = std::move(assumptions);

    for (int k = 0; k < n; ++k) {
        const WForm& s = alg->d_eta_[k];
        for (const auto& [key, c] : s.terms()) {
            if (!key.w.is_zero())
                throw StructuralError("structure 2-forms must be weight-free");
            if (key.p() + key.q() != 2)
                throw StructuralError("d(eta) must have pure degree 2");
            if (key.p() == 0)
                throw StructuralError("non-integrable structure: d(eta^" + std::to_string(k + 1) +
                                      ") has a (0,2) component");
            if (!c.is_constant())
                throw StructuralError("structure constants must be Gaussian rationals");
        }
    }
    for (const auto& ch : alg->characters_) {
        Bidegree b10 = ch.dlog10.bidegree();
        Bidegree b01 = ch.dlog01.bidegree();
        if (b10.kind == Bidegree::Pure && !b10.is(1, 0))
            throw StructuralError("character " + ch.name + ": dlog10 is not a (1,0)-form");
        if (b01.kind == Bidegree::Pure && !b01.is(0, 1))
            throw StructuralError("character " + ch.name + ": dlog01 is not a (0,1)-form");
        if (b10.kind == Bidegree::Mixed || b01.kind == Bidegree::Mixed)
            throw StructuralError("character " + ch.name + ": mixed-degree dlog part");
        // Conjugate character = inverse character.
        if (ch.dlog10.conj() != -ch.dlog01)
            throw StructuralError("character " + ch.name +
                                  ": conj(dlog10) != -dlog01, conjugation would not negate the weight");
    }

    AlgebraPtr result = alg;
    if (validate_d2) {
        DSquaredReport rep = d_squared_check(result);
        if (!rep.ok) {
            std::string msg = "d^2 != 0:";
            for (const auto& v : rep.violations) msg += " " + v;
            throw StructuralError(msg);
        }
    }
    return result;
}

Weight CoframeAlgebra::character_weight(int c, int power) const {
    Weight w;
    w.exp.assign(characters_.size(), 0);
    w.exp.at(c) = power;
    return w;
}

std::string CoframeAlgebra::weight_str(const Weight& w) const {
    if (w.is_zero()) return "";
    std::string s = "[";
    bool first = true;
    for (size_t c = 0; c < characters_.size(); ++c) {
        int e = w.get(c);
        if (e == 0) continue;
        if (!first) s += "*";
        first = false;
        s += characters_[c].name;
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s + "]";
}

std::string CoframeAlgebra::form_str(const WForm& f) const {
    return f.str([this](const Weight& w) { return weight_str(w); },
                 [](const GaussPoly& p) {
                     if (p.is_constant() && p.constant_value() == GaussRat(1)) return std::string("");
                     return "(" + p.str() + ")";
                 });
}

static std::string cplx_str(const Cplx& z) {
    char buf[80];
    std::snprintf(buf, sizeof(buf), "(%.15g%+.15gi)", z.real(), z.imag());
    return std::string(buf);
}

std::string CoframeAlgebra::form_str(const NumForm& f) const {
    return f.str([this](const Weight& w) { return weight_str(w); }, cplx_str);
}

GaussRat CoframeAlgebra::lie_bracket_coeff(int i, int j, int k) const {
    if (i == j) return GaussRat(0);
    int a = std::min(i, j), b = std::max(i, j);
    FKey key{{}, (1u << a) | (1u << b), 0};
    const GaussPoly* c = d_eta_.at(k).coeff(key);
    GaussRat v = c ? c->constant_value() : GaussRat(0);
    // eta^k([Z_i, Z_j]) = -d(eta^k)(Z_i, Z_j).
    v = -v;
    if (i > j) v = -v;
    return v;
}

WForm eta(const AlgebraPtr& alg, int k) {
    if (k < 1 || k > alg->n()) throw StructuralError("eta index out of range");
    return monomial_form<GaussPoly>(alg->n(), FKey{{}, 1u << (k - 1), 0},
                                    GaussPoly(alg->vars(), GaussRat(1)), alg);
}

WForm etabar(const AlgebraPtr& alg, int k) {
    if (k < 1 || k > alg->n()) throw StructuralError("eta index out of range");
    return monomial_form<GaussPoly>(alg->n(), FKey{{}, 0, 1u << (k - 1)},
                                    GaussPoly(alg->vars(), GaussRat(1)), alg);
}

WForm unit_form(const AlgebraPtr& alg, const Weight& w) {
    return monomial_form<GaussPoly>(alg->n(), FKey{w, 0, 0}, GaussPoly(alg->vars(), GaussRat(1)), alg);
}

WForm basis_monomial(const AlgebraPtr& alg, const std::vector<int>& holo,
                     const std::vector<int>& anti) {
    WForm f = unit_form(alg);
    for (int k : holo) f = f.wedge(eta(alg, k));
    for (int k : anti) f = f.wedge(etabar(alg, k));
    return f;
}

DSquaredReport d_squared_check(const AlgebraPtr& alg) {
    DSquaredReport rep;
    CalcContext<GaussPoly> cx(alg);
    for (int k = 1; k <= alg->n(); ++k) {
        WForm dd = d(cx, d(cx, eta(alg, k)));
        if (!dd.is_zero()) {
            rep.ok = false;
            rep.violations.push_back("d(d(e" + std::to_string(k) + ")) = " + alg->form_str(dd));
        }
        WForm ddb = d(cx, d(cx, etabar(alg, k)));
        if (!ddb.is_zero()) {
            rep.ok = false;
            rep.violations.push_back("d(d(~e" + std::to_string(k) + ")) = " + alg->form_str(ddb));
        }
    }
    for (const auto& ch : alg->characters()) {
        WForm dl = d(cx, ch.dlog10 + ch.dlog01);
        if (!dl.is_zero()) {
            rep.ok = false;
            rep.violations.push_back("d(dlog " + ch.name + ") = " + alg->form_str(dl));
        }
    }
    return rep;
}

} // namespace balobs
