#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <sstream>

#include "balobs/scalars.hpp"

namespace balobs {

class CoframeAlgebra;
using AlgebraPtr = std::shared_ptr<const CoframeAlgebra>;

/// Character-power vector: one integer exponent per declared character.
struct Weight {
    std::vector<int> exp;

    bool is_zero() const {
        for (int e : exp) if (e != 0) return false;
        return true;
    }
    Weight operator+(const Weight& o) const {
        Weight r;
        r.exp.assign(std::max(exp.size(), o.exp.size()), 0);
        for (size_t i = 0; i < exp.size(); ++i) r.exp[i] += exp[i];
        for (size_t i = 0; i < o.exp.size(); ++i) r.exp[i] += o.exp[i];
        return r;
    }
    Weight operator-() const {
        Weight r = *this;
        for (int& e : r.exp) e = -e;
        return r;
    }
    int get(size_t i) const { return i < exp.size() ? exp[i] : 0; }
    bool operator==(const Weight& o) const {
        size_t n = std::max(exp.size(), o.exp.size());
        for (size_t i = 0; i < n; ++i) if (get(i) != o.get(i)) return false;
        return true;
    }
    bool operator<(const Weight& o) const {
        size_t n = std::max(exp.size(), o.exp.size());
        for (size_t i = 0; i < n; ++i) {
            if (get(i) != o.get(i)) return get(i) < o.get(i);
        }
        return false;
    }
};

/// One invariant monomial: weight sector plus index bitmasks for the
/// holomorphic and antiholomorphic coframe factors (bit k = eta^{k+1}).
struct FKey {
    Weight w;
    uint32_t holo = 0;
    uint32_t anti = 0;

    int p() const { return std::popcount(holo); }
    int q() const { return std::popcount(anti); }
    bool operator==(const FKey& o) const { return w == o.w && holo == o.holo && anti == o.anti; }
};

/// Lex order on ascending index tuples encoded as bitmasks.
inline bool mask_lex_less(uint32_t x, uint32_t y) {
    while (x && y) {
        uint32_t bx = x & -x, by = y & -y;
        if (bx != by) return bx < by;
        x &= x - 1;
        y &= y - 1;
    }
    return x == 0 && y != 0;
}

struct FKeyLess {
    bool operator()(const FKey& a, const FKey& b) const {
        if (!(a.w == b.w)) return a.w < b.w;
        if (a.p() != b.p()) return a.p() < b.p();
        if (a.q() != b.q()) return a.q() < b.q();
        if (a.holo != b.holo) return mask_lex_less(a.holo, b.holo);
        if (a.anti != b.anti) return mask_lex_less(a.anti, b.anti);
        return false;
    }
};

/// Parity sign of merging two disjoint ascending factor blocks A,B
/// (written A then B) into one ascending block.
inline int merge_sign(uint32_t a, uint32_t b) {
    int inv = 0;
    for (uint32_t x = b; x; x &= x - 1) {
        int bit = std::countr_zero(x);
        inv += std::popcount(a >> (bit + 1));
    }
    return (inv % 2) ? -1 : 1;
}

/// Ascending-tuple combinations of {0..n-1} of size k, in lex order.
std::vector<uint32_t> comb_masks(int n, int k);

struct Bidegree {
    enum Kind { ZeroForm, Pure, Mixed } kind = ZeroForm;
    int p = 0, q = 0;

    bool is(int pp, int qq) const { return kind == Pure && p == pp && q == qq; }
    std::string str() const {
        if (kind == ZeroForm) return "(any)";
        if (kind == Mixed) return "(mixed)";
        return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
    }
};

template <class C>
struct CoeffOps;

template <>
struct CoeffOps<GaussPoly> {
    static GaussPoly zero() { return GaussPoly(); }
    static bool is_zero(const GaussPoly& c) { return c.is_zero(); }
    static GaussPoly from_gaussrat(const GaussRat& c) { return GaussPoly(nullptr, c); }
    static GaussPoly conj(const GaussPoly& c) { return c.conj(); }
    static GaussPoly mul(const GaussPoly& a, const GaussPoly& b) { return a * b; }
    static GaussPoly scale(const GaussPoly& a, const GaussRat& c) { return a * c; }
};

template <>
struct CoeffOps<Cplx> {
    static Cplx zero() { return Cplx(0.0, 0.0); }
    static bool is_zero(const Cplx& c) { return c == Cplx(0.0, 0.0); }
    static Cplx from_gaussrat(const GaussRat& c) { return c.to_complex(); }
    static Cplx conj(const Cplx& c) { return std::conj(c); }
    static Cplx mul(const Cplx& a, const Cplx& b) { return a * b; }
    static Cplx scale(const Cplx& a, const GaussRat& c) { return a * c.to_complex(); }
};

/// Character-weighted invariant complex differential form over a coframe
/// of n holomorphic generators. Immutable in spirit: operations return
/// new values.
template <class C>
class Form {
public:
    using Ops = CoeffOps<C>;
    using TermMap = std::map<FKey, C, FKeyLess>;

    Form() = default;
    explicit Form(int n, AlgebraPtr alg = nullptr) : n_(n), alg_(std::move(alg)) {}

    int n() const { return n_; }
    const AlgebraPtr& algebra() const { return alg_; }
    void set_algebra(AlgebraPtr a) { alg_ = std::move(a); }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    void add_term(const FKey& k, const C& c) {
        if (Ops::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second = it->second + c;
            if (Ops::is_zero(it->second)) terms_.erase(it);
        }
    }

    const C* coeff(const FKey& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? nullptr : &it->second;
    }

    Form operator+(const Form& o) const {
        check_compatible(o);
        Form r = *this;
        r.adopt(o);
        for (const auto& [k, c] : o.terms_) r.add_term(k, c);
        return r;
    }
    Form operator-(const Form& o) const {
        check_compatible(o);
        Form r = *this;
        r.adopt(o);
        for (const auto& [k, c] : o.terms_) r.add_term(k, C(Ops::scale(c, GaussRat(-1))));
        return r;
    }
    Form operator-() const {
        Form r(n_, alg_);
        for (const auto& [k, c] : terms_) r.terms_[k] = Ops::scale(c, GaussRat(-1));
        return r;
    }
    Form& operator+=(const Form& o) { *this = *this + o; return *this; }
    Form& operator-=(const Form& o) { *this = *this - o; return *this; }
    bool operator==(const Form& o) const { return terms_ == o.terms_; }
    bool operator!=(const Form& o) const { return !(*this == o); }

    Form scaled(const C& c) const {
        Form r(n_, alg_);
        for (const auto& [k, v] : terms_) r.add_term(k, Ops::mul(v, c));
        return r;
    }
    Form scaled(const GaussRat& c) const {
        Form r(n_, alg_);
        for (const auto& [k, v] : terms_) r.add_term(k, Ops::scale(v, c));
        return r;
    }

    /// Exterior product with transposition-parity signs; weights add.
    Form wedge(const Form& o) const {
        check_compatible(o);
        Form r(n_, alg_ ? alg_ : o.alg_);
        for (const auto& [ka, ca] : terms_) {
            for (const auto& [kb, cb] : o.terms_) {
                if ((ka.holo & kb.holo) || (ka.anti & kb.anti)) continue;
                int sign = merge_sign(ka.holo, kb.holo) * merge_sign(ka.anti, kb.anti);
                if ((kb.p() * ka.q()) % 2) sign = -sign;
                FKey k{ka.w + kb.w, ka.holo | kb.holo, ka.anti | kb.anti};
                C c = Ops::mul(ca, cb);
                if (sign < 0) c = Ops::scale(c, GaussRat(-1));
                r.add_term(k, c);
            }
        }
        return r;
    }

    /// Conjugation: swaps factor types with reordering parity, negates
    /// the weight, conjugates coefficients.
    Form conj() const {
        Form r(n_, alg_);
        for (const auto& [k, c] : terms_) {
            int sign = ((k.p() * k.q()) % 2) ? -1 : 1;
            FKey ck{-k.w, k.anti, k.holo};
            C cc = Ops::conj(c);
            if (sign < 0) cc = Ops::scale(cc, GaussRat(-1));
            r.add_term(ck, cc);
        }
        return r;
    }

    Bidegree bidegree() const {
        Bidegree b;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            if (first) {
                b = Bidegree{Bidegree::Pure, k.p(), k.q()};
                first = false;
            } else if (k.p() != b.p || k.q() != b.q) {
                return Bidegree{Bidegree::Mixed, 0, 0};
            }
        }
        return b;
    }

    /// Terms of one bidegree.
    Form project(int p, int q) const {
        Form r(n_, alg_);
        for (const auto& [k, c] : terms_)
            if (k.p() == p && k.q() == q) r.terms_[k] = c;
        return r;
    }

    /// Terms of one weight sector.
    Form project_weight(const Weight& w) const {
        Form r(n_, alg_);
        for (const auto& [k, c] : terms_)
            if (k.w == w) r.terms_[k] = c;
        return r;
    }

    std::vector<Weight> weights() const {
        std::vector<Weight> ws;
        for (const auto& [k, c] : terms_) {
            bool seen = false;
            for (const auto& w : ws) if (w == k.w) { seen = true; break; }
            if (!seen) ws.push_back(k.w);
        }
        return ws;
    }

    std::string str(const std::function<std::string(const Weight&)>& weight_name,
                    const std::function<std::string(const C&)>& coeff_str) const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            if (!first) out << " + ";
            first = false;
            std::string cs = coeff_str(c);
            out << cs;
            std::string mono;
            if (!k.w.is_zero()) mono += weight_name(k.w) + " ";
            bool started = false;
            for (uint32_t x = k.holo; x; x &= x - 1) {
                if (started) mono += "^";
                mono += "e" + std::to_string(std::countr_zero(x) + 1);
                started = true;
            }
            for (uint32_t x = k.anti; x; x &= x - 1) {
                if (started) mono += "^";
                mono += "~e" + std::to_string(std::countr_zero(x) + 1);
                started = true;
            }
            if (!mono.empty()) out << " " << mono;
        }
        return out.str();
    }

private:
    void adopt(const Form& o) {
        if (!alg_) alg_ = o.alg_;
        if (!n_) n_ = o.n_;
    }
    void check_compatible(const Form& o) const {
        if (n_ && o.n_ && n_ != o.n_)
            throw StructuralError("forms over different coframe dimensions");
        if (alg_ && o.alg_ && alg_ != o.alg_)
            throw StructuralError("forms over different algebras");
    }

    int n_ = 0;
    AlgebraPtr alg_;
    TermMap terms_;
};

using WForm = Form<GaussPoly>;
using NumForm = Form<Cplx>;

/// Interior product with the frame vector Z_{i+1} (holo = true) or its
/// conjugate (holo = false); antiderivation signs by factor position.
template <class C>
Form<C> frame_contract(const Form<C>& f, int i, bool holo) {
    Form<C> r(f.n(), f.algebra());
    uint32_t bit = 1u << i;
    for (const auto& [k, c] : f.terms()) {
        if (holo) {
            if (!(k.holo & bit)) continue;
            int rank = std::popcount(k.holo & (bit - 1));
            FKey k2{k.w, k.holo & ~bit, k.anti};
            C cc = (rank % 2) ? CoeffOps<C>::scale(c, GaussRat(-1)) : c;
            r.add_term(k2, cc);
        } else {
            if (!(k.anti & bit)) continue;
            int pos = k.p() + std::popcount(k.anti & (bit - 1));
            FKey k2{k.w, k.holo, k.anti & ~bit};
            C cc = (pos % 2) ? CoeffOps<C>::scale(c, GaussRat(-1)) : c;
            r.add_term(k2, cc);
        }
    }
    return r;
}

template <class C>
Form<C> monomial_form(int n, const FKey& k, const C& c, AlgebraPtr alg = nullptr) {
    Form<C> f(n, std::move(alg));
    f.add_term(k, c);
    return f;
}

double norm_inf(const NumForm& f);

} // namespace balobs
