#include <doctest.h>

#include <random>

#include "balobs/scalars.hpp"

using namespace balobs;

namespace {

VarTablePtr metric_table() {
    auto vt = std::make_shared<VarTable>();
    vt->add_real("t");
    vt->add_real("al22");
    vt->add_real("al33");
    vt->add_complex("al12");
    vt->add_complex("al23");
    vt->add_complex("a1");
    vt->validate();
    return vt;
}

GaussPoly var(const VarTablePtr& vt, const std::string& n) { return GaussPoly::variable(vt, n); }

GaussPoly random_poly(const VarTablePtr& vt, std::mt19937& rng, int terms = 4) {
    std::uniform_int_distribution<int> coef(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    std::uniform_int_distribution<unsigned> degree(0, 2);
    GaussPoly p(vt);
    for (int i = 0; i < terms; ++i) {
        Mono m;
        m.exp.assign(vt->size(), 0);
        for (int v = 0; v < vt->size(); ++v) m.exp[v] = degree(rng) == 2 ? 1 : 0;
        while (!m.exp.empty() && m.exp.back() == 0) m.exp.pop_back();
        p.add_term(m, GaussRat(make_rat(coef(rng), den(rng)), make_rat(coef(rng), den(rng))));
    }
    return p;
}

} // namespace

TEST_CASE("gaussian rational basics") {
    GaussRat a(make_rat(1), make_rat(1));  // 1 + i
    GaussRat b(make_rat(1), make_rat(-1)); // 1 - i
    CHECK((a * b) == GaussRat(2));
    CHECK(a.conj() == b);
    CHECK((a * a.conj()).is_real());
    GaussRat q = a / b;
    CHECK((q * b) == a);
    CHECK(GaussRat(make_rat(1, 2)).str() == "1/2");
    CHECK(GaussRat(make_rat(0), make_rat(-1)).str() == "-i");
    CHECK(GaussRat(make_rat(1, 2), make_rat(3, 4)).str() == "(1/2+3/4*i)");
}

TEST_CASE("variable table involution") {
    auto vt = metric_table();
    vt->validate();
    int al12 = vt->index_of("al12");
    CHECK(vt->name(vt->conj_index(al12)) == "~al12");
    CHECK(vt->conj_index(vt->conj_index(al12)) == al12);
    CHECK(vt->is_real_var(vt->index_of("t")));
    CHECK_THROWS_AS(vt->index_of("nope"), StructuralError);
}

TEST_CASE("poly arithmetic identities") {
    auto vt = metric_table();
    GaussPoly a22 = var(vt, "al22"), a33 = var(vt, "al33");

    // additive inverse collapses to the canonical zero
    GaussPoly z = a22 * a33 - a22 * a33;
    CHECK(z.is_zero());

    // conj(a23) * a23 is the |alpha_23|^2 monomial
    GaussPoly a23 = var(vt, "al23");
    GaussPoly norm = a23.conj() * a23;
    CHECK(norm == var(vt, "~al23") * a23);
    CHECK(norm.term_count() == 1);

    // (1+i)(1-i) = 2 as constants
    GaussPoly c1(vt, GaussRat(make_rat(1), make_rat(1)));
    GaussPoly c2(vt, GaussRat(make_rat(1), make_rat(-1)));
    CHECK((c1 * c2).constant_value() == GaussRat(2));
}

TEST_CASE("conjugation involution on polynomials") {
    auto vt = metric_table();
    std::mt19937 rng(12345);

    GaussPoly t = var(vt, "t");
    CHECK(t.conj() == t); // t declared real

    // conj(i*al33*al12) = -i*al33*~al12 with real al33
    GaussPoly p = GaussPoly(vt, GaussRat::imaginary_unit()) * var(vt, "al33") * var(vt, "al12");
    GaussPoly expect =
        GaussPoly(vt, -GaussRat::imaginary_unit()) * var(vt, "al33") * var(vt, "~al12");
    CHECK(p.conj() == expect);

    for (int i = 0; i < 50; ++i) {
        GaussPoly r = random_poly(vt, rng);
        CHECK(r.conj().conj() == r);
    }
}

TEST_CASE("ring axioms on random samples") {
    auto vt = metric_table();
    std::mt19937 rng(999);
    for (int i = 0; i < 40; ++i) {
        GaussPoly p = random_poly(vt, rng), q = random_poly(vt, rng), r = random_poly(vt, rng);
        CHECK((p + q) * r == p * r + q * r);
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
        CHECK((p * q).conj() == p.conj() * q.conj());
    }
}

TEST_CASE("evaluation") {
    auto vt = metric_table();
    // p = al22*al33 - |al23|^2 at al22=2, al33=3, al23=1+i -> 4
    GaussPoly p = var(vt, "al22") * var(vt, "al33") - var(vt, "al23") * var(vt, "~al23");
    Assignment a(vt);
    a.set("al22", 2.0);
    a.set("al33", 3.0);
    a.set("al23", Cplx(1.0, 1.0));
    CHECK(std::abs(p.eval(a) - Cplx(4.0, 0.0)) < 1e-12);

    Assignment b(vt);
    b.set("t", 0.25);
    CHECK(std::abs(var(vt, "t").eval(b) - Cplx(0.25, 0.0)) < 1e-15);
    CHECK(GaussPoly(vt).eval(b) == Cplx(0.0, 0.0));

    SUBCASE("missing assignment is an error") {
        Assignment c(vt);
        CHECK_THROWS_AS(p.eval(c), StructuralError);
    }
    SUBCASE("inconsistent conjugate pair is an error") {
        Assignment c(vt);
        c.set("al23", Cplx(1.0, 1.0));
        CHECK_THROWS_AS(c.set("~al23", Cplx(2.0, 5.0)), StructuralError);
    }
    SUBCASE("real variable rejects complex value") {
        Assignment c(vt);
        CHECK_THROWS_AS(c.set("t", Cplx(0.0, 1.0)), StructuralError);
    }
}

TEST_CASE("conj(p)*p is real at consistent assignments") {
    auto vt = metric_table();
    std::mt19937 rng(321);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 20; ++i) {
        GaussPoly p = random_poly(vt, rng);
        Assignment a(vt);
        a.set("t", u(rng));
        a.set("al22", u(rng));
        a.set("al33", u(rng));
        a.set("al12", Cplx(u(rng), u(rng)));
        a.set("al23", Cplx(u(rng), u(rng)));
        a.set("a1", Cplx(u(rng), u(rng)));
        Cplx v = (p.conj() * p).eval(a);
        CHECK(std::abs(v.imag()) < 1e-12);
        GaussPoly q = random_poly(vt, rng);
        Cplx lhs = (p * q).eval(a);
        Cplx rhs = p.eval(a) * q.eval(a);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
    }
}

TEST_CASE("t-power extraction and rendering") {
    auto vt = metric_table();
    GaussPoly t = var(vt, "t");
    GaussPoly a1 = var(vt, "a1");
    GaussPoly p = t * a1 + t * t * (a1 * a1) - GaussPoly(vt, GaussRat(3));
    int ti = vt->index_of("t");
    CHECK(p.coeff_of_power(ti, 1) == a1);
    CHECK(p.coeff_of_power(ti, 2) == a1 * a1);
    CHECK(p.coeff_of_power(ti, 0).constant_value() == GaussRat(-3));
    CHECK(p.degree_in(ti) == 2);

    GaussPoly lead = var(vt, "al22") * var(vt, "al33") * GaussRat(make_rat(-1, 2));
    CHECK(lead.monic().leading_coeff() == GaussRat(1));
    CHECK(GaussPoly(vt).str() == "0");
}
