#include "balobs/scalars.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace balobs {

Rat make_rat(long num, long den) {
    if (den == 0) throw StructuralError("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw StructuralError("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rat& q) { return q.get_str(); }

GaussRat GaussRat::operator/(const GaussRat& o) const {
    if (o.is_zero()) throw StructuralError("division by zero GaussRat");
    Rat n2 = o.re * o.re + o.im * o.im;
    return GaussRat((re * o.re + im * o.im) / n2, (im * o.re - re * o.im) / n2);
}

std::string GaussRat::str() const {
    auto imag_part = [](const Rat& v) -> std::string {
        if (v == 1) return "i";
        if (v == -1) return "-i";
        return rat_to_string(v) + "*i";
    };
    if (im == 0) return rat_to_string(re);
    if (re == 0) return imag_part(im);
    std::string s = "(" + rat_to_string(re);
    if (im > 0) s += "+" + imag_part(im);
    else s += "-" + imag_part(-im);
    return s + ")";
}

int VarTable::add_real(const std::string& name) {
    if (lookup_.count(name)) throw StructuralError("duplicate variable: " + name);
    int idx = size();
    names_.push_back(name);
    conj_of_.push_back(idx);
    lookup_[name] = idx;
    return idx;
}

int VarTable::add_complex(const std::string& name) {
    if (lookup_.count(name) || lookup_.count("~" + name))
        throw StructuralError("duplicate variable: " + name);
    int idx = size();
    names_.push_back(name);
    names_.push_back("~" + name);
    conj_of_.push_back(idx + 1);
    conj_of_.push_back(idx);
    lookup_[name] = idx;
    lookup_["~" + name] = idx + 1;
    return idx;
}

std::optional<int> VarTable::find(const std::string& name) const {
    auto it = lookup_.find(name);
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
}

int VarTable::index_of(const std::string& name) const {
    auto idx = find(name);
    if (!idx) throw StructuralError("unknown variable: " + name);
    return *idx;
}

void VarTable::validate() const {
    for (int i = 0; i < size(); ++i) {
        int j = conj_of_[i];
        if (j < 0 || j >= size() || conj_of_[j] != i)
            throw StructuralError("conjugation pairing is not an involution");
    }
}

unsigned Mono::total_degree() const {
    unsigned d = 0;
    for (unsigned e : exp) d += e;
    return d;
}

bool Mono::is_constant() const { return total_degree() == 0; }

bool GradedLexGreater::operator()(const Mono& a, const Mono& b) const {
    unsigned da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db;
    size_t n = std::max(a.exp.size(), b.exp.size());
    for (size_t i = 0; i < n; ++i) {
        unsigned ea = i < a.exp.size() ? a.exp[i] : 0;
        unsigned eb = i < b.exp.size() ? b.exp[i] : 0;
        if (ea != eb) return ea > eb;
    }
    return false;
}

void Assignment::set(const std::string& name, Cplx value) { set(table_->index_of(name), value); }

// Re-setting a variable overwrites it (and its conjugate); only an
// explicit assignment that contradicts an explicit assignment of its
// conjugate partner is an error.
void Assignment::set(int var, Cplx value) {
    int cj = table_->conj_index(var);
    if (cj == var && std::abs(value.imag()) > 1e-12)
        throw StructuralError("real variable " + table_->name(var) + " assigned a non-real value");
    if (cj != var && explicit_.count(cj)) {
        Cplx implied = std::conj(values_.at(cj));
        if (std::abs(implied - value) > 1e-12)
            throw StructuralError("conjugate pair for " + table_->name(var) + " is inconsistent");
    }
    values_[var] = value;
    explicit_.insert(var);
    if (cj != var) values_[cj] = std::conj(value);
}

bool Assignment::has(int var) const { return values_.count(var) != 0; }

Cplx Assignment::get(int var) const {
    auto it = values_.find(var);
    if (it == values_.end())
        throw StructuralError("missing assignment for variable " + table_->name(var));
    return it->second;
}

GaussPoly::GaussPoly(VarTablePtr table, const GaussRat& c) : table_(std::move(table)) {
    if (!c.is_zero()) terms_[Mono{}] = c;
}

GaussPoly GaussPoly::variable(VarTablePtr table, int var) {
    GaussPoly p(table);
    Mono m;
    m.exp.assign(var + 1, 0);
    m.exp[var] = 1;
    p.terms_[m] = GaussRat(1);
    return p;
}

GaussPoly GaussPoly::variable(VarTablePtr table, const std::string& name) {
    int idx = table->index_of(name);
    return variable(std::move(table), idx);
}

bool GaussPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

GaussRat GaussPoly::constant_value() const {
    if (terms_.empty()) return GaussRat(0);
    if (!is_constant()) throw StructuralError("polynomial is not constant");
    return terms_.begin()->second;
}

void GaussPoly::add_term(const Mono& m, const GaussRat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void GaussPoly::check_same_table(const GaussPoly& o) const {
    if (table_ && o.table_ && table_ != o.table_)
        throw StructuralError("polynomials over different variable tables");
}

GaussPoly GaussPoly::operator-() const {
    GaussPoly r(table_);
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

GaussPoly GaussPoly::operator+(const GaussPoly& o) const {
    GaussPoly r(*this);
    r += o;
    return r;
}

GaussPoly GaussPoly::operator-(const GaussPoly& o) const {
    GaussPoly r(*this);
    r -= o;
    return r;
}

GaussPoly& GaussPoly::operator+=(const GaussPoly& o) {
    check_same_table(o);
    if (!table_) table_ = o.table_;
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

GaussPoly& GaussPoly::operator-=(const GaussPoly& o) {
    check_same_table(o);
    if (!table_) table_ = o.table_;
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

GaussPoly GaussPoly::operator*(const GaussPoly& o) const {
    check_same_table(o);
    GaussPoly r(table_ ? table_ : o.table_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Mono m;
            m.exp.assign(std::max(ma.exp.size(), mb.exp.size()), 0);
            for (size_t i = 0; i < ma.exp.size(); ++i) m.exp[i] += ma.exp[i];
            for (size_t i = 0; i < mb.exp.size(); ++i) m.exp[i] += mb.exp[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

GaussPoly GaussPoly::operator*(const GaussRat& c) const {
    GaussPoly r(table_);
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.terms_[m] = v * c;
    return r;
}

GaussPoly operator*(const GaussRat& c, const GaussPoly& p) { return p * c; }

GaussPoly GaussPoly::conj() const {
    GaussPoly r(table_);
    for (const auto& [m, c] : terms_) {
        Mono cm;
        cm.exp.assign(table_ ? table_->size() : m.exp.size(), 0);
        for (size_t i = 0; i < m.exp.size(); ++i) {
            if (m.exp[i] == 0) continue;
            int j = table_ ? table_->conj_index(static_cast<int>(i)) : static_cast<int>(i);
            if (j >= (int)cm.exp.size()) cm.exp.resize(j + 1, 0);
            cm.exp[j] += m.exp[i];
        }
        while (!cm.exp.empty() && cm.exp.back() == 0) cm.exp.pop_back();
        r.add_term(cm, c.conj());
    }
    return r;
}

Cplx GaussPoly::eval(const Assignment& a) const {
    Cplx total(0.0, 0.0);
    for (const auto& [m, c] : terms_) {
        Cplx v = c.to_complex();
        for (size_t i = 0; i < m.exp.size(); ++i)
            for (unsigned k = 0; k < m.exp[i]; ++k) v *= a.get(static_cast<int>(i));
        total += v;
    }
    return total;
}

GaussPoly GaussPoly::coeff_of_power(int var, unsigned k) const {
    GaussPoly r(table_);
    for (const auto& [m, c] : terms_) {
        if (m.deg(var) != k) continue;
        Mono m2 = m;
        if (var < (int)m2.exp.size()) m2.exp[var] = 0;
        while (!m2.exp.empty() && m2.exp.back() == 0) m2.exp.pop_back();
        r.add_term(m2, c);
    }
    return r;
}

unsigned GaussPoly::degree_in(int var) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.deg(var));
    return d;
}

unsigned GaussPoly::total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

GaussRat GaussPoly::leading_coeff() const {
    if (terms_.empty()) return GaussRat(0);
    return terms_.begin()->second;
}

GaussPoly GaussPoly::monic() const {
    if (terms_.empty()) return *this;
    GaussRat lead = leading_coeff();
    GaussPoly r(table_);
    for (const auto& [m, c] : terms_) r.terms_[m] = c / lead;
    return r;
}

std::string GaussPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        GaussRat coeff = c;
        // A coefficient whose rendering would lead with '-' has its sign
        // absorbed into the term separator.
        bool lead_minus = (coeff.is_real() && coeff.re < 0) || (coeff.re == 0 && coeff.im < 0);
        if (first) {
            if (lead_minus) {
                out << "-";
                coeff = -coeff;
            }
        } else {
            if (lead_minus) {
                out << " - ";
                coeff = -coeff;
            } else {
                out << " + ";
            }
        }
        first = false;

        std::string vars;
        for (size_t i = 0; i < m.exp.size(); ++i) {
            if (m.exp[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += table_->name(static_cast<int>(i));
            if (m.exp[i] > 1) vars += "^" + std::to_string(m.exp[i]);
        }
        bool coeff_is_one = (coeff == GaussRat(1));
        if (vars.empty()) {
            out << coeff.str();
        } else if (coeff_is_one) {
            out << vars;
        } else {
            out << coeff.str() << "*" << vars;
        }
    }
    return out.str();
}

} // namespace balobs
