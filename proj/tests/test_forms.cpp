#include <doctest.h>

#include <random>

#include "balobs/algebra.hpp"
#include "balobs/model.hpp"

using namespace balobs;

namespace {

// Independent sign oracle: a monomial as an explicit factor sequence,
// sorted by insertion sort counting transpositions. Generators are
// encoded 0..n-1 (holo) and n..2n-1 (anti).
struct SeqForm {
    std::map<std::vector<int>, Cplx> terms;

    static std::pair<std::vector<int>, int> sort_count(std::vector<int> seq) {
        int sign = 1;
        for (size_t i = 1; i < seq.size(); ++i) {
            for (size_t j = i; j > 0 && seq[j - 1] > seq[j]; --j) {
                std::swap(seq[j - 1], seq[j]);
                sign = -sign;
            }
        }
        for (size_t i = 1; i < seq.size(); ++i)
            if (seq[i] == seq[i - 1]) return {{}, 0};
        return {seq, sign};
    }

    void add(std::vector<int> seq, Cplx c) {
        auto [sorted, sign] = sort_count(std::move(seq));
        if (sign == 0) return;
        terms[sorted] += double(sign) * c;
    }

    SeqForm wedge(const SeqForm& o) const {
        SeqForm r;
        for (const auto& [sa, ca] : terms)
            for (const auto& [sb, cb] : o.terms) {
                std::vector<int> seq = sa;
                seq.insert(seq.end(), sb.begin(), sb.end());
                r.add(std::move(seq), ca * cb);
            }
        return r;
    }
};

SeqForm to_seq(const NumForm& f, int n) {
    SeqForm s;
    for (const auto& [k, c] : f.terms()) {
        std::vector<int> seq;
        for (uint32_t x = k.holo; x; x &= x - 1) seq.push_back(std::countr_zero(x));
        for (uint32_t x = k.anti; x; x &= x - 1) seq.push_back(n + std::countr_zero(x));
        s.add(seq, c);
    }
    return s;
}

bool seq_close(const SeqForm& a, const SeqForm& b) {
    std::map<std::vector<int>, Cplx> diff = a.terms;
    for (const auto& [k, c] : b.terms) diff[k] -= c;
    for (const auto& [k, c] : diff)
        if (std::abs(c) > 1e-12) return false;
    return true;
}

AlgebraPtr abelian(int n) {
    auto vt = std::make_shared<VarTable>();
    vt->add_real("t");
    std::vector<WForm> d_eta(n, WForm(n));
    return CoframeAlgebra::create("abelian", n, vt, d_eta, {});
}

NumForm random_numform(const AlgebraPtr& alg, std::mt19937& rng, int p, int q) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    NumForm f(alg->n(), alg);
    for (uint32_t h : comb_masks(alg->n(), p))
        for (uint32_t a : comb_masks(alg->n(), q))
            f.add_term(FKey{{}, h, a}, Cplx(u(rng), u(rng)));
    return f;
}

} // namespace

TEST_CASE("wedge basics and repeated factors") {
    auto alg = abelian(3);
    WForm e1 = eta(alg, 1), e2 = eta(alg, 2);
    CHECK(e1.wedge(e1).is_zero());

    // ~e1 ^ (e1 ^ e2) == (e1 ^ e2) ^ ~e1 (parity +1 across two factors)
    WForm lhs = etabar(alg, 1).wedge(e1.wedge(e2));
    WForm rhs = e1.wedge(e2).wedge(etabar(alg, 1));
    CHECK(lhs == rhs);
    CHECK(!lhs.is_zero());
}

TEST_CASE("wedge against the brute-force sequence oracle") {
    auto alg = abelian(4);
    std::mt19937 rng(2024);
    for (int rep = 0; rep < 30; ++rep) {
        NumForm a = random_numform(alg, rng, rep % 3, (rep + 1) % 3);
        NumForm b = random_numform(alg, rng, (rep + 2) % 3, rep % 2);
        NumForm w = a.wedge(b);
        SeqForm sw = to_seq(a, 4).wedge(to_seq(b, 4));
        CHECK(seq_close(to_seq(w, 4), sw));
    }
}

TEST_CASE("wedge anticommutativity and associativity on random forms") {
    auto alg = abelian(3);
    std::mt19937 rng(7);
    for (int rep = 0; rep < 25; ++rep) {
        int pa = rep % 2, qa = (rep / 2) % 2;
        int pb = (rep / 4) % 2, qb = (rep / 8) % 2;
        NumForm a = random_numform(alg, rng, pa, qa);
        NumForm b = random_numform(alg, rng, pb, qb);
        NumForm c = random_numform(alg, rng, 1, 0);
        int da = pa + qa, db = pb + qb;
        NumForm ab = a.wedge(b);
        NumForm ba = b.wedge(a);
        NumForm signed_ba = (da * db) % 2 ? -ba : ba;
        CHECK(norm_inf(ab - signed_ba) < 1e-12);
        CHECK(norm_inf(a.wedge(b.wedge(c)) - ab.wedge(c)) < 1e-12);
    }
}

TEST_CASE("conjugation involution and parity") {
    auto alg = abelian(3);
    // conj(e^j ^ ~e^k) = -e^k ^ ~e^j
    WForm f = eta(alg, 1).wedge(etabar(alg, 2));
    WForm expect = -eta(alg, 2).wedge(etabar(alg, 1));
    CHECK(f.conj() == expect);

    std::mt19937 rng(99);
    for (int rep = 0; rep < 20; ++rep) {
        NumForm a = random_numform(alg, rng, rep % 3, (rep + 1) % 3);
        CHECK(norm_inf(a.conj().conj() - a) < 1e-12);
    }
}

TEST_CASE("bidegree reporting") {
    auto alg = abelian(3);
    WForm omega11 = eta(alg, 1).wedge(etabar(alg, 1));
    CHECK(omega11.bidegree().is(1, 1));
    WForm f23 = basis_monomial(alg, {1, 2}, {1, 2, 3});
    CHECK(f23.bidegree().is(2, 3));
    CHECK(WForm(3).bidegree().kind == Bidegree::ZeroForm);
    WForm mixed = omega11 + eta(alg, 1);
    CHECK(mixed.bidegree().kind == Bidegree::Mixed);
}

TEST_CASE("basis dimension of (p,q) monomials at fixed weight") {
    auto binom = [](int n, int k) {
        long r = 1;
        for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
        return r;
    };
    for (int n = 2; n <= 4; ++n)
        for (int p = 0; p <= n; ++p)
            for (int q = 0; q <= n; ++q)
                CHECK((long)(comb_masks(n, p).size() * comb_masks(n, q).size()) ==
                      binom(n, p) * binom(n, q));
    CHECK(comb_masks(4, 2) == std::vector<uint32_t>({0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100}));
}

TEST_CASE("weights add under wedge and cancel for the tilde coframe") {
    ModelFile m = registry("nakamura-i");
    const AlgebraPtr& alg = m.algebra;
    Weight P = alg->character_weight(0, 1);
    Weight Pinv = alg->character_weight(0, -1);

    WForm t1 = etabar(alg, 1);
    WForm t2 = etabar(alg, 2).wedge(unit_form(alg, P));
    WForm t3 = etabar(alg, 3).wedge(unit_form(alg, Pinv));
    WForm triple = t1.wedge(t2).wedge(t3);

    WForm plain = etabar(alg, 1).wedge(etabar(alg, 2)).wedge(etabar(alg, 3));
    CHECK(triple == plain); // weights of P and P^-1 cancel
    for (const auto& [k, c] : triple.terms()) CHECK(k.w.is_zero());

    // additivity on a weighted pair
    WForm w = t2.wedge(t2);
    CHECK(w.is_zero()); // repeated factor
    WForm w2 = t2.wedge(etabar(alg, 3));
    for (const auto& [k, c] : w2.terms()) CHECK(k.w == P);
}

TEST_CASE("canonical rendering") {
    ModelFile m = registry("nakamura-i");
    const AlgebraPtr& alg = m.algebra;
    WForm f = basis_monomial(alg, {1, 2}, {3}).scaled(GaussPoly::variable(alg->vars(), "al12"));
    CHECK(alg->form_str(f) == "(al12) e1^e2^~e3");
    WForm wtd = unit_form(alg, alg->character_weight(0, -1)).wedge(etabar(alg, 2));
    CHECK(alg->form_str(wtd) == " [P^-1] ~e2");
    CHECK(alg->form_str(WForm(3)) == "0");
}
