// Acceptance suite: one pass/fail line per criterion, nonzero exit if
// any criterion fails. Documented discrepancies are printed inline.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>

#include "balobs/model.hpp"
#include "balobs/numeric.hpp"
#include "balobs/report.hpp"

using namespace balobs;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
    int id;
    std::string title;
    bool pass = true;
    std::vector<std::string> details;

    void check(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            details.push_back("FAILED: " + what);
        }
    }
    void note(const std::string& what) { details.push_back(what); }
};

std::vector<Criterion> results;

Criterion& begin(int id, const std::string& title) {
    results.push_back(Criterion{id, title});
    return results.back();
}

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

bool same_up_to_constant(const GaussPoly& a, const GaussPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.monic() == b.monic();
}

// Per-monomial difference listing between two polynomials.
std::vector<std::string> term_diff(const VarTablePtr& vars, const GaussPoly& got,
                                   const GaussPoly& expect) {
    std::vector<std::string> out;
    GaussPoly diff = got - expect;
    for (const auto& [m, c] : diff.terms()) {
        std::string mono;
        for (size_t i = 0; i < m.exp.size(); ++i)
            for (unsigned e = 0; e < m.exp[i]; ++e)
                mono += (mono.empty() ? "" : "*") + vars->name((int)i);
        const GaussRat* gc = nullptr;
        for (const auto& [gm, gv] : got.terms())
            if (gm == m) gc = &gv;
        const GaussRat* ec = nullptr;
        for (const auto& [em, ev] : expect.terms())
            if (em == m) ec = &ev;
        out.push_back("  monomial " + mono + ": engine " + (gc ? gc->str() : "0") + ", display " +
                      (ec ? ec->str() : "0"));
    }
    return out;
}

Assignment fd_assignment(const ModelFile& m, const std::string& reg, bool generic_metric) {
    Assignment a(m.vars);
    for (const auto& [k, v] : registry_fd_defaults(reg))
        if (m.vars->find(k)) a.set(k, v);
    if (generic_metric) {
        a.set("al11", 1.3);
        a.set("al22", 1.1);
        a.set("al33", 1.2);
        a.set("al12", Cplx(0.10, 0.05));
        a.set("al13", Cplx(-0.04, 0.08));
        a.set("al23", Cplx(0.06, -0.02));
    }
    return a;
}

std::string run_cli(const std::string& args, int& exit_code) {
    const char* bin = std::getenv("BALOBS_BIN");
    if (!bin) {
        exit_code = -1;
        return "";
    }
    std::string cmd = std::string(bin) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        exit_code = -1;
        return "";
    }
    std::string out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

// ---------------------------------------------------------------- 1
void criterion1() {
    Criterion& c = begin(1, "Iwasawa obstruction golden test (paper-literal, with contingency)");
    ModelFile iw = registry("iwasawa");
    const AlgebraPtr& alg = iw.algebra;
    VForm prime = iw.curve("kuranishi").derivative_at_zero(alg);

    // the Example-2 coefficient exactly as displayed (including its a22 term)
    GaussPoly display = parse_poly_expr(
        iw.vars,
        "a12*(al13*~al13 - al11*al33) + a21*(al22*al33 - al23*~al23)"
        " - a11*(i*al33*al12 + al13*~al23) + a22*(-i*al33*~al13 + ~al13*al23)");
    GaussPoly corrected = parse_poly_expr(
        iw.vars,
        "a12*(al13*~al13 - al11*al33) + a21*(al22*al33 - al23*~al23)"
        " - a11*(i*al33*al12 + al13*~al23) + a22*(-i*al33*~al12 + ~al13*al23)");

    auto theta_coeff = [&](OmegaConvention conv) {
        WForm omega = omega_from_metric(iw.metric(), conv);
        WForm theta = first_order_obstruction(alg, omega, prime);
        const GaussPoly* p = theta.coeff(FKey{{}, 0b011, 0b111});
        GaussPoly other(iw.vars);
        for (const auto& [k, cc] : theta.terms())
            if (!(k == FKey{{}, 0b011, 0b111})) other += cc;
        c.check(other.is_zero(), "theta has support beyond e1^e2^~e1^~e2^~e3");
        return p ? *p : GaussPoly(iw.vars);
    };

    Clock::time_point t0 = Clock::now();
    GaussPoly pl = theta_coeff(OmegaConvention::PaperLiteral);
    double elapsed = ms_since(t0);
    c.check(elapsed < 1000.0, "runtime over 1 s");

    if (same_up_to_constant(pl, display)) {
        c.note("paper-literal reproduces the display verbatim");
        return;
    }

    // Contingency: the discrepancy must be isolated to the omega
    // convention. (a) FD oracle agrees with the engine's symbolic R
    // under both conventions at a metric where they differ;
    c.note("paper-literal does NOT reproduce the display; invoking the documented contingency");
    for (OmegaConvention conv : {OmegaConvention::PaperLiteral, OmegaConvention::HermitianStandard}) {
        MetricCurve mc = MetricCurve::constant(iw.metric(), conv);
        Assignment a = fd_assignment(iw, "iwasawa", /*generic_metric=*/true);
        FDReport rep = fd_theorem_check(alg, mc, iw.curve("kuranishi"), {1e-2, 5e-3, 2.5e-3}, a);
        c.check(rep.ok, std::string("FD oracle disagrees with symbolic R under ") +
                            convention_name(conv));
        std::ostringstream os;
        os << "FD agreement under " << convention_name(conv) << ": max errors";
        for (size_t i = 0; i < rep.steps.size(); ++i)
            os << " " << fmt_double(rep.max_errors[i]) << " (h=" << fmt_double(rep.steps[i]) << ")";
        os << ", order " << fmt_double(rep.order_mean);
        c.note(os.str());
    }

    // (b) termwise documentation of the mismatch;
    c.note("paper-literal vs display, differing monomials:");
    for (const auto& line : term_diff(iw.vars, pl.monic(), display.monic())) c.note(line);

    GaussPoly hs = theta_coeff(OmegaConvention::HermitianStandard);
    GaussPoly hs_monic = hs.monic();
    c.note("hermitian-standard vs display, differing monomials:");
    std::vector<std::string> hs_diff = term_diff(iw.vars, hs_monic, display.monic());
    for (const auto& line : hs_diff) c.note(line);
    // exactly one pair of monomials differs: the display's a22*al33*~al13
    // against the engine's a22*al33*~al12 (conjugation-symmetry forces
    // the al12 version; cross-checked by criterion 2's case (ii) display)
    c.check(hs_diff.size() == 2, "hermitian-standard should differ from the display in exactly "
                                 "one monomial pair (the displayed a22 term)");
    c.check(same_up_to_constant(hs, corrected),
            "hermitian-standard must reproduce the display with the a22 term read as "
            "-i*al33*~al12 + ~al13*al23");
    c.note("conclusion: discrepancy isolated to the omega convention; hermitian-standard "
           "matches the display up to the single documented a22 monomial");
}

// ---------------------------------------------------------------- 2
void criterion2() {
    Criterion& c = begin(2, "Nakamura case (ii) golden conditions");
    ModelFile nk = registry("nakamura-ii");
    const AlgebraPtr& alg = nk.algebra;
    WForm omega = omega_from_metric(nk.metric(), OmegaConvention::HermitianStandard);
    WForm theta = first_order_obstruction(alg, omega, nk.curve().derivative_at_zero(alg));

    GaussPoly e13 = parse_poly_expr(nk.vars, "a2*(al23*~al23 - al22*al33) + a1*(i*al33*al12 + al13*~al23)");
    GaussPoly e12 = parse_poly_expr(nk.vars, "a3*(al23*~al23 - al22*al33) + a1*(i*al22*al13 - al12*al23)");

    ClassResidual cr = reduce_class(alg, theta);
    c.check(cr.conditions.size() == 2, "expected exactly two conditions");
    if (cr.conditions.size() == 2) {
        c.check(same_up_to_constant(cr.conditions[0], e12), "condition on e1^e2^~e1^~e2^~e3");
        c.check(same_up_to_constant(cr.conditions[1], e13), "condition on e1^e3^~e1^~e2^~e3");
    }
    c.check(cr.exact_part.is_zero(), "character-free sector must contain the full residual");
    for (const auto& [k, cc] : cr.residual.terms())
        c.check(k.w.is_zero(), "residual must be weight-free");
    // raw coefficients carry the paper's 1/2 prefactor exactly
    const GaussPoly* raw13 = theta.coeff(FKey{{}, 0b101, 0b111});
    c.check(raw13 && *raw13 == e13 * GaussRat(make_rat(1, 2)), "exact 1/2 prefactor on eta^13");
}

// ---------------------------------------------------------------- 3
void criterion3() {
    Criterion& c = begin(3, "Nakamura character-lattice case: the four Kuranishi classes and certificates");
    ModelFile nk = registry("nakamura-i");
    const AlgebraPtr& alg = nk.algebra;
    WForm omega = omega_from_metric(nk.metric(), OmegaConvention::HermitianStandard);
    Weight P = alg->character_weight(0, 1);
    Weight Pinv = alg->character_weight(0, -1);
    Weight zero;
    zero.exp.assign(1, 0);

    // class1: diagonal parameters free
    {
        ClassResidual cr = corollary_conditions(alg, omega, nk.curve("class1").derivative_at_zero(alg));
        GaussPoly g12 = parse_poly_expr(nk.vars,
                                        "a11*(i*al22*al13 - al12*al23) + a31*(al23*~al23 - al22*al33)");
        GaussPoly g13 = parse_poly_expr(nk.vars,
                                        "a11*(i*al33*al12 + al13*~al23) + a21*(al23*~al23 - al22*al33)");
        c.check(cr.conditions.size() == 2, "class1: expected two conditions");
        if (cr.conditions.size() == 2) {
            c.check(same_up_to_constant(cr.conditions[0], g12), "class1 condition on eta^12");
            c.check(same_up_to_constant(cr.conditions[1], g13), "class1 condition on eta^13");
        }
        c.note("class1 second condition asserted with the factor i*al33*al12: the exact "
               "computation and the one-parameter-family version agree on it; the commonly "
               "printed summary form has i*al11*al12 there, inconsistent with both, and is "
               "documented as a defect of that display");
    }

    // class2: off-diagonal parameters free
    {
        ClassResidual cr = corollary_conditions(alg, omega, nk.curve("class2").derivative_at_zero(alg));
        GaussPoly det = parse_poly_expr(nk.vars, "al23*~al23 - al22*al33");
        c.check(cr.conditions.size() == 2, "class2: expected two conditions");
        if (cr.conditions.size() == 2) {
            c.check(same_up_to_constant(cr.conditions[0], parse_poly_expr(nk.vars, "a31") * det),
                    "class2 condition a31*(...)");
            c.check(same_up_to_constant(cr.conditions[1], parse_poly_expr(nk.vars, "a21") * det),
                    "class2 condition a21*(...)");
        }
    }

    // class3, class4: empty condition lists
    for (const char* cls : {"class3", "class4"}) {
        WForm theta = first_order_obstruction(alg, omega, nk.curve(cls).derivative_at_zero(alg));
        ClassResidual cr = reduce_class(alg, theta);
        c.check(cr.conditions.empty(), std::string(cls) + ": condition list must be empty");
        c.check(cr.residual.is_zero(), std::string(cls) + ": residual must vanish");
        c.check(theta.project_weight(zero).is_zero(),
                std::string(cls) + ": weight-zero part of theta must vanish");
        if (!theta.is_zero()) {
            CalcContext<GaussPoly> cx(alg);
            c.check(delbar(cx, cr.potential) == theta,
                    std::string(cls) + ": weighted part must be certified exact");
            c.note(std::string(cls) + ": theta is nonzero as a form (" +
                   std::to_string(theta.term_count()) +
                   " weighted monomials, all delbar-exact with certified potential); the"
                   " literal 'theta = 0' expected here holds only cohomologically; the same"
                   " weighted monomials occur for the unconstrained family, where they are"
                   " likewise delbar-exact");
        }
    }

    // the two character-weighted exactness certificates
    WForm t1 = unit_form(alg, P).wedge(basis_monomial(alg, {1, 2}, {1, 2, 3}));
    WForm b1 = unit_form(alg, P).wedge(basis_monomial(alg, {1, 2}, {2, 3}));
    c.check(certify_exact(alg, t1, b1), "certificate [P] e1^e2^~e123 = delbar([P] e1^e2^~e23)");
    WForm t2 = unit_form(alg, Pinv).wedge(basis_monomial(alg, {1, 3}, {1, 2, 3}));
    WForm b2 = -unit_form(alg, Pinv).wedge(basis_monomial(alg, {1, 3}, {2, 3}));
    c.check(certify_exact(alg, t2, b2), "certificate [P^-1] e1^e3^~e123 = delbar(-[P^-1] e1^e3^~e23)");
}

// ---------------------------------------------------------------- 4
void criterion4() {
    Criterion& c = begin(4, "Maurer-Cartan residuals of the registered families");
    ModelFile iw = registry("iwasawa");
    CalcContext<GaussPoly> cx(iw.algebra);
    c.check(mc_residual(cx, iw.curve("kuranishi").phi_t).is_zero(),
            "Iwasawa family residual must vanish identically in t");

    // mutation: drop the t^2 correction
    VForm mutated = iw.curve("kuranishi").phi_t;
    int t = iw.vars->index_of("t");
    for (auto& comp : mutated.comp) {
        WForm kept(3, iw.algebra);
        for (const auto& [k, cc] : comp.terms())
            kept.add_term(k, cc.coeff_of_power(t, 1) * GaussPoly::variable(iw.vars, "t"));
        comp = kept;
    }
    VForm res = mc_residual(cx, mutated);
    c.check(!res.is_zero(), "mutated family must have a nonzero residual");
    bool quadratic = false;
    for (const auto& comp : res.comp)
        for (const auto& [k, cc] : comp.terms())
            if (!cc.coeff_of_power(t, 2).is_zero()) quadratic = true;
    c.check(quadratic, "mutated residual must be quadratic in t");

    ModelFile nk2 = registry("nakamura-ii");
    CalcContext<GaussPoly> cn(nk2.algebra);
    c.check(mc_residual(cn, nk2.curve("kuranishi").phi_t).is_zero(),
            "Nakamura case (ii) family residual must vanish");
}

// ---------------------------------------------------------------- 5
void criterion5() {
    Criterion& c = begin(5, "finite-difference theorem validation (Iwasawa, identity metric)");
    Clock::time_point t0 = Clock::now();
    ModelFile iw = registry("iwasawa");
    Assignment a = fd_assignment(iw, "iwasawa", /*generic_metric=*/false);
    MetricCurve mc = MetricCurve::constant(iw.metric(), OmegaConvention::HermitianStandard);
    std::vector<double> steps{1e-2, 5e-3, 2.5e-3};
    FDReport rep = fd_theorem_check(iw.algebra, mc, iw.curve("kuranishi"), steps, a);
    for (size_t i = 0; i < steps.size(); ++i) {
        std::ostringstream os;
        os << "h=" << fmt_double(steps[i]) << " max error " << fmt_double(rep.max_errors[i])
           << " (budget " << fmt_double(1e-3 * steps[i]) << ")";
        c.note(os.str());
        c.check(rep.max_errors[i] <= 1e-3 * steps[i], "error budget exceeded at h=" + fmt_double(steps[i]));
    }
    c.check(rep.order_estimable, "convergence order must be estimable");
    c.check(rep.order_mean >= 1.7 && rep.order_mean <= 2.3,
            "estimated order " + fmt_double(rep.order_mean) + " outside [1.7, 2.3]");
    c.note("estimated order " + fmt_double(rep.order_mean));
    double elapsed = ms_since(t0);
    c.check(elapsed < 5000.0, "runtime over 5 s");
    c.note("runtime " + fmt_double(elapsed) + " ms");
}

// ---------------------------------------------------------------- 6
void criterion6() {
    Criterion& c = begin(6, "invariant cohomology dimensions");
    AlgebraPtr nk1 = registry("nakamura-i").algebra;
    int d1 = invariant_h01_dimension(nk1, default_sectors(nk1));
    c.check(d1 == 3, "nakamura-i invariant dim H^{0,1} = " + std::to_string(d1) + ", want 3");
    AlgebraPtr nk2 = registry("nakamura-ii").algebra;
    int d2 = invariant_h01_dimension(nk2, default_sectors(nk2));
    c.check(d2 == 1, "nakamura-ii invariant dim H^{0,1} = " + std::to_string(d2) + ", want 1");
}

// ---------------------------------------------------------------- 7
void criterion7() {
    Criterion& c = begin(7, "property suites");
    std::mt19937 rng(20260808);
    std::uniform_real_distribution<double> u(-1.0, 1.0);

    // d^2 = 0, del^2 = delbar^2 = 0, anticommutation on all registry algebras
    for (const auto& name : registry_names()) {
        AlgebraPtr alg = registry(name).algebra;
        CalcContext<GaussPoly> cx(alg);
        bool ok = true;
        for (const Weight& w : default_sectors(alg))
            for (int p = 0; p <= 3; ++p)
                for (int q = 0; q <= 3; ++q)
                    for (uint32_t h : comb_masks(3, p))
                        for (uint32_t aa : comb_masks(3, q)) {
                            WForm m = monomial_form<GaussPoly>(3, FKey{w, h, aa},
                                                               GaussPoly(alg->vars(), GaussRat(1)), alg);
                            if (!d(cx, d(cx, m)).is_zero()) ok = false;
                            if (!del(cx, del(cx, m)).is_zero()) ok = false;
                            if (!delbar(cx, delbar(cx, m)).is_zero()) ok = false;
                            if (!(del(cx, delbar(cx, m)) + delbar(cx, del(cx, m))).is_zero()) ok = false;
                        }
        c.check(ok, "differential identities on " + name);
    }

    // Leibniz on 200 random pairs (numeric coefficients, exact signs)
    {
        AlgebraPtr alg = registry("nakamura-i").algebra;
        CalcContext<Cplx> cx(alg);
        std::vector<Weight> ws = default_sectors(alg);
        bool ok = true;
        for (int rep = 0; rep < 200; ++rep) {
            int pa = rep % 2, qa = (rep / 2) % 2, pb = (rep / 4) % 2, qb = (rep / 8) % 2;
            NumForm a(3, alg), b(3, alg);
            for (uint32_t h : comb_masks(3, pa))
                for (uint32_t aa : comb_masks(3, qa))
                    a.add_term(FKey{ws[rep % ws.size()], h, aa}, Cplx(u(rng), u(rng)));
            for (uint32_t h : comb_masks(3, pb))
                for (uint32_t aa : comb_masks(3, qb))
                    b.add_term(FKey{ws[(rep + 1) % ws.size()], h, aa}, Cplx(u(rng), u(rng)));
            NumForm lhs = d(cx, a.wedge(b));
            NumForm rhs = d(cx, a).wedge(b) +
                          ((pa + qa) % 2 ? -a.wedge(d(cx, b)) : a.wedge(d(cx, b)));
            if (norm_inf(lhs - rhs) > 1e-12) ok = false;
        }
        c.check(ok, "Leibniz rule on 200 random pairs");
    }

    // extension map identity on 100 random (phi, alpha)
    {
        AlgebraPtr alg = registry("iwasawa").algebra;
        bool ok = true;
        for (int rep = 0; rep < 100; ++rep) {
            NumVForm phi(alg);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    phi.comp[i].add_term(FKey{{}, 0, 1u << j}, Cplx(u(rng), u(rng)) * 0.7);
            NumForm f(3, alg);
            int p = rep % 3, q = (rep + 1) % 3;
            for (uint32_t h : comb_masks(3, p))
                for (uint32_t aa : comb_masks(3, q)) f.add_term(FKey{{}, h, aa}, Cplx(u(rng), u(rng)));
            NumForm lhs = extension_map(phi, f);
            NumForm rhs = simcontract(op_identity_plus_phi(phi), f);
            if (norm_inf(lhs - rhs) > 1e-12) ok = false;
        }
        c.check(ok, "extension map equals (I + phi + conj phi) simcontract on 100 samples");
    }

    // adjointness at 5 sampled metrics, 1e-9
    {
        AlgebraPtr alg = registry("iwasawa").algebra;
        CalcContext<Cplx> cx(alg);
        bool ok = true;
        for (int rep = 0; rep < 5; ++rep) {
            Eigen::MatrixXcd B(3, 3);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) B(i, j) = Cplx(u(rng), u(rng)) * 0.4;
            Eigen::MatrixXcd G = B.adjoint() * B + Eigen::MatrixXcd::Identity(3, 3);
            for (auto [p, q] : {std::pair{1, 1}, {2, 1}, {2, 2}}) {
                NumForm b(3, alg), g(3, alg);
                for (uint32_t h : comb_masks(3, p))
                    for (uint32_t aa : comb_masks(3, q)) b.add_term(FKey{{}, h, aa}, Cplx(u(rng), u(rng)));
                for (uint32_t h : comb_masks(3, p))
                    for (uint32_t aa : comb_masks(3, q + 1)) g.add_term(FKey{{}, h, aa}, Cplx(u(rng), u(rng)));
                Cplx lhs = inner_product(alg, delbar(cx, b), g, G);
                Cplx rhs = inner_product(alg, b, delbar_adjoint(alg, g, G), G);
                if (std::abs(lhs - rhs) > 1e-9) ok = false;
            }
        }
        c.check(ok, "adjointness <delbar b, g> = <b, delbar* g> at 5 sampled metrics");
    }

    // harmonicity of eta^{12}~eta^{123} and eta^{13}~eta^{123}
    {
        bool ok = true;
        for (const char* name : {"iwasawa", "nakamura-ii"}) {
            AlgebraPtr alg = registry(name).algebra;
            for (int rep = 0; rep < 3; ++rep) {
                Eigen::MatrixXcd B(3, 3);
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j) B(i, j) = Cplx(u(rng), u(rng)) * 0.4;
                Eigen::MatrixXcd G = B.adjoint() * B + Eigen::MatrixXcd::Identity(3, 3);
                NumForm f12(3, alg), f13(3, alg);
                f12.add_term(FKey{{}, 0b011, 0b111}, Cplx(1, 0));
                f13.add_term(FKey{{}, 0b101, 0b111}, Cplx(1, 0));
                if (!harmonic_check(alg, f12, G)) ok = false;
                if (!harmonic_check(alg, f13, G)) ok = false;
            }
        }
        c.check(ok, "harmonicity of the (2,3) representatives at sampled metrics");
    }
}

// ---------------------------------------------------------------- 8
void criterion8() {
    Criterion& c = begin(8, "balanced checks");
    for (const auto& name : registry_names()) {
        ModelFile m = registry(name);
        HermMetric g = HermMetric::generic(m.algebra);
        for (OmegaConvention conv :
             {OmegaConvention::HermitianStandard, OmegaConvention::PaperLiteral}) {
            BalancedResult res = balanced_check(m.algebra, omega_from_metric(g, conv));
            c.check(res.balanced, name + " generic metric must be balanced under " +
                                      convention_name(conv));
        }
    }
    // synthetic non-balanced fixture: d e3 = e1 ^ ~e1
    auto vt = std::make_shared<VarTable>();
    vt->add_real("t");
    std::vector<WForm> rules(3, WForm(3));
    WForm r(3);
    r.add_term(FKey{{}, 1u, 1u}, GaussPoly(nullptr, GaussRat(1)));
    rules[2] = r;
    AlgebraPtr bad = CoframeAlgebra::create("mixed", 3, vt, rules, {});
    BalancedResult res = balanced_check(bad, omega_from_metric(HermMetric::identity(bad),
                                                               OmegaConvention::HermitianStandard));
    c.check(!res.balanced && !res.residual.is_zero(),
            "synthetic fixture must produce a nonzero residual");
}

// ---------------------------------------------------------------- 9
void criterion9() {
    Criterion& c = begin(9, "end-to-end determinism and exit codes");
    int code = 0;
    if (!std::getenv("BALOBS_BIN")) {
        c.check(false, "BALOBS_BIN not set; cannot drive the CLI");
        return;
    }
    for (const char* args :
         {"obstruction --registry iwasawa --convention paper-literal --format json",
          "conditions --registry nakamura-ii --format json",
          "verify-theorem --registry iwasawa --format json",
          "cohomology --registry nakamura-i --format json"}) {
        int c1 = 0, c2 = 0;
        std::string a = run_cli(args, c1);
        std::string b = run_cli(args, c2);
        c.check(c1 == c2 && a == b && !a.empty(),
                std::string("byte-identical repeated runs for: ") + args);
    }
    run_cli("verdict --registry nakamura-ii --assign a1=0,a2=1,a3=0 --metric-sample identity", code);
    c.check(code == 2, "obstructed verdict must exit 2");
    run_cli("verdict --registry nakamura-ii --assign a1=0,a2=0,a3=0 --metric-sample identity", code);
    c.check(code == 0, "unobstructed verdict must exit 0");
    run_cli("verdict --registry iwasawa --metric-sample identity "
            "--assign a12=1,a11=0,a21=0,a22=0,a31=0,a32=0",
            code);
    c.check(code == 2, "Alessandrini-Bassanelli direction must exit 2");
    run_cli("mc-residual --registry iwasawa", code);
    c.check(code == 0, "mc-residual on the Iwasawa family must exit 0");
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();

    int passed = 0;
    for (const auto& c : results) {
        std::cout << "CRITERION " << c.id << " [" << (c.pass ? "PASS" : "FAIL") << "] " << c.title
                  << "\n";
        for (const auto& d : c.details) std::cout << "    " << d << "\n";
        if (c.pass) ++passed;
    }
    std::cout << "SUMMARY: " << passed << "/" << results.size() << " criteria passed\n";
    return passed == (int)results.size() ? 0 : 1;
}
