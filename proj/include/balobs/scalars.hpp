#pragma once

#include <complex>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace balobs {

using Rat = mpq_class;
using Cplx = std::complex<double>;

Rat make_rat(long num, long den = 1);
Rat rat_from_string(const std::string& s);
std::string rat_to_string(const Rat& q);

struct StructuralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Gaussian rational re + i*im. GMP keeps numerators/denominators in
/// lowest terms with positive denominator after every operation.
struct GaussRat {
    Rat re{0};
    Rat im{0};

    GaussRat() = default;
    GaussRat(long n) : re(make_rat(n)) {}
    GaussRat(Rat r) : re(std::move(r)) {}
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static GaussRat imaginary_unit() { return GaussRat(make_rat(0), make_rat(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    GaussRat conj() const { return GaussRat(re, -im); }

    GaussRat operator-() const { return GaussRat(-re, -im); }
    GaussRat operator+(const GaussRat& o) const { return GaussRat(re + o.re, im + o.im); }
    GaussRat operator-(const GaussRat& o) const { return GaussRat(re - o.re, im - o.im); }
    GaussRat operator*(const GaussRat& o) const {
        return GaussRat(re * o.re - im * o.im, re * o.im + im * o.re);
    }
    GaussRat operator/(const GaussRat& o) const;
    GaussRat& operator+=(const GaussRat& o) { re += o.re; im += o.im; return *this; }
    GaussRat& operator-=(const GaussRat& o) { re -= o.re; im -= o.im; return *this; }
    GaussRat& operator*=(const GaussRat& o) { *this = *this * o; return *this; }

    bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussRat& o) const { return !(*this == o); }

    Cplx to_complex() const { return Cplx(re.get_d(), im.get_d()); }
    std::string str() const;
};

/// Ordered variable table with a conjugation involution. A variable is
/// either declared real (self-conjugate) or comes paired with its formal
/// conjugate, rendered as `~name`.
class VarTable {
public:
    /// Declares a real (self-conjugate) variable, returns its index.
    int add_real(const std::string& name);
    /// Declares a complex variable plus its conjugate `~name`;
    /// returns the index of the base variable.
    int add_complex(const std::string& name);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_.at(i); }
    int conj_index(int i) const { return conj_of_.at(i); }
    bool is_real_var(int i) const { return conj_of_.at(i) == i; }
    std::optional<int> find(const std::string& name) const;
    int index_of(const std::string& name) const;

    /// Involution and pairing sanity; throws StructuralError if violated.
    void validate() const;

private:
    std::vector<std::string> names_;
    std::vector<int> conj_of_;
    std::map<std::string, int> lookup_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

/// Dense exponent vector over a VarTable.
struct Mono {
    std::vector<unsigned> exp;

    unsigned total_degree() const;
    bool is_constant() const;
    unsigned deg(int var) const { return var < (int)exp.size() ? exp[var] : 0u; }
    bool operator==(const Mono& o) const {
        size_t n = std::max(exp.size(), o.exp.size());
        for (size_t i = 0; i < n; ++i)
            if ((i < exp.size() ? exp[i] : 0u) != (i < o.exp.size() ? o.exp[i] : 0u)) return false;
        return true;
    }
};

/// Graded-lex order, leading (largest) term first in the term map:
/// higher total degree wins, ties broken lexicographically on the
/// exponent vector in table order.
struct GradedLexGreater {
    bool operator()(const Mono& a, const Mono& b) const;
};

/// Variable assignment for numeric evaluation. Conjugate variables are
/// filled in automatically; inconsistent pairs and non-real values on
/// real variables are rejected.
class Assignment {
public:
    explicit Assignment(VarTablePtr table) : table_(std::move(table)) {}

    void set(const std::string& name, Cplx value);
    void set(int var, Cplx value);
    bool has(int var) const;
    Cplx get(int var) const;
    const VarTablePtr& table() const { return table_; }

private:
    VarTablePtr table_;
    std::map<int, Cplx> values_;
    std::set<int> explicit_;
};

/// Sparse multivariate polynomial over the Gaussian rationals, with a
/// conjugation involution induced by the variable table pairing.
class GaussPoly {
public:
    GaussPoly() = default;
    explicit GaussPoly(VarTablePtr table) : table_(std::move(table)) {}
    GaussPoly(VarTablePtr table, const GaussRat& c);

    static GaussPoly constant(VarTablePtr table, const GaussRat& c) { return GaussPoly(std::move(table), c); }
    static GaussPoly variable(VarTablePtr table, int var);
    static GaussPoly variable(VarTablePtr table, const std::string& name);

    const VarTablePtr& table() const { return table_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    GaussRat constant_value() const;
    size_t term_count() const { return terms_.size(); }
    const std::map<Mono, GaussRat, GradedLexGreater>& terms() const { return terms_; }

    void add_term(const Mono& m, const GaussRat& c);

    GaussPoly operator-() const;
    GaussPoly operator+(const GaussPoly& o) const;
    GaussPoly operator-(const GaussPoly& o) const;
    GaussPoly operator*(const GaussPoly& o) const;
    GaussPoly operator*(const GaussRat& c) const;
    GaussPoly& operator+=(const GaussPoly& o);
    GaussPoly& operator-=(const GaussPoly& o);
    /// Equal when the terms agree; a null table (constants built without
    /// a context) is compatible with any table.
    bool operator==(const GaussPoly& o) const {
        if (table_ && o.table_ && table_ != o.table_) return false;
        return terms_ == o.terms_;
    }
    bool operator!=(const GaussPoly& o) const { return !(*this == o); }

    GaussPoly conj() const;
    Cplx eval(const Assignment& a) const;

    /// Coefficient of var^k, with that power of var removed.
    GaussPoly coeff_of_power(int var, unsigned k) const;
    unsigned degree_in(int var) const;
    unsigned total_degree() const;

    /// Leading coefficient in the graded-lex order.
    GaussRat leading_coeff() const;
    /// Scaled so the leading coefficient is 1; zero stays zero.
    GaussPoly monic() const;

    std::string str() const;

private:
    void check_same_table(const GaussPoly& o) const;

    VarTablePtr table_;
    std::map<Mono, GaussRat, GradedLexGreater> terms_;
};

GaussPoly operator*(const GaussRat& c, const GaussPoly& p);

} // namespace balobs
