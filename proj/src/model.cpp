#include "balobs/model.hpp"

#include <cctype>
#include <sstream>

namespace balobs {

namespace {

enum class Tok { Ident, Int, Str, Punct, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    int line = 1, col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }

    const Token& peek() const { return tok_; }
    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        skip_ws();
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= s_.size()) {
            tok_ = Token{Tok::End, "", line_, col_};
            return;
        }
        char c = s_[pos_];
        if (std::isalpha((unsigned char)c) || c == '_') {
            std::string id;
            while (pos_ < s_.size() && (std::isalnum((unsigned char)s_[pos_]) || s_[pos_] == '_'))
                id += take();
            tok_ = Token{Tok::Ident, id, tok_.line, tok_.col};
            return;
        }
        if (std::isdigit((unsigned char)c)) {
            std::string num;
            while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) num += take();
            tok_ = Token{Tok::Int, num, tok_.line, tok_.col};
            return;
        }
        if (c == '"') {
            take();
            std::string str;
            while (pos_ < s_.size() && s_[pos_] != '"') str += take();
            if (pos_ >= s_.size()) throw ParseError(tok_.line, tok_.col, "unterminated string");
            take();
            tok_ = Token{Tok::Str, str, tok_.line, tok_.col};
            return;
        }
        static const std::string punct = "{}=;@+-*^()[]/~:,";
        if (punct.find(c) != std::string::npos) {
            tok_ = Token{Tok::Punct, std::string(1, take()), tok_.line, tok_.col};
            return;
        }
        throw ParseError(line_, col_, std::string("unexpected character '") + c + "'");
    }

    void skip_ws() {
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (c == '#' || (c == '/' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '/')) {
                while (pos_ < s_.size() && s_[pos_] != '\n') take();
            } else if (std::isspace((unsigned char)c)) {
                take();
            } else {
                break;
            }
        }
    }

    char take() {
        char c = s_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    const std::string& s_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

struct Value {
    enum Kind { Poly, FormV } kind = Poly;
    GaussPoly p;
    WForm f;
};

// Generator atoms e<k>, Z<k>, the unit i and the parameter t are
// reserved.
bool is_gen_name(const std::string& id, char prefix, int& k) {
    if (id.size() < 2 || id[0] != prefix) return false;
    for (size_t i = 1; i < id.size(); ++i)
        if (!std::isdigit((unsigned char)id[i])) return false;
    k = std::stoi(id.substr(1));
    return true;
}

class Parser {
public:
    Parser(const std::string& text, std::string source) : lx_(text), source_(std::move(source)) {
        table_ = std::make_shared<VarTable>();
        mutable_table()->add_real("t");
    }

    ModelFile parse() {
        while (lx_.peek().kind != Tok::End) statement();
        finalize_algebra();
        ModelFile m = std::move(model_);
        m.vars = table_;
        return m;
    }

    // Expression entry points for parse_poly_expr / parse_form_expr.
    GaussPoly parse_single_poly(VarTablePtr table) {
        table_ = std::move(table);
        Value v = expr();
        expect_end();
        if (v.kind != Value::Poly) err(lx_.peek(), "expected a scalar expression");
        return v.p;
    }

    WForm parse_single_form(AlgebraPtr alg) {
        table_ = alg->vars();
        model_.algebra = alg;
        n_ = alg->n();
        algebra_done_ = true;
        for (size_t c = 0; c < alg->characters().size(); ++c)
            char_index_[alg->characters()[c].name] = static_cast<int>(c);
        Value v = expr();
        expect_end();
        if (v.kind == Value::Poly) {
            WForm f(n_, alg);
            f.add_term(FKey{{}, 0, 0}, v.p);
            return f;
        }
        WForm f = v.f;
        f.set_algebra(alg);
        return f;
    }

private:
    VarTable* mutable_table() { return const_cast<VarTable*>(table_.get()); }

    [[noreturn]] void err(const Token& t, const std::string& msg) const {
        throw ParseError(t.line, t.col, msg);
    }

    Token expect_punct(const std::string& p) {
        Token t = lx_.next();
        if (t.kind != Tok::Punct || t.text != p) err(t, "expected '" + p + "'");
        return t;
    }

    Token expect_ident(const std::string& what) {
        Token t = lx_.next();
        if (t.kind != Tok::Ident) err(t, "expected " + what);
        return t;
    }

    Token expect_keyword(const std::string& kw) {
        Token t = lx_.next();
        if (t.kind != Tok::Ident || t.text != kw) err(t, "expected '" + kw + "'");
        return t;
    }

    int expect_int() {
        Token t = lx_.next();
        if (t.kind != Tok::Int) err(t, "expected an integer");
        return std::stoi(t.text);
    }

    void expect_end() {
        if (lx_.peek().kind != Tok::End) err(lx_.peek(), "trailing input after expression");
    }

    bool peek_punct(const std::string& p) {
        return lx_.peek().kind == Tok::Punct && lx_.peek().text == p;
    }

    void statement() {
        Token t = lx_.peek();
        if (t.kind != Tok::Ident) err(t, "expected a declaration");
        if (t.text == "var") var_decl();
        else if (t.text == "algebra") algebra_decl();
        else if (t.text == "char") char_decl();
        else if (t.text == "metric") metric_decl();
        else if (t.text == "curve") curve_decl();
        else if (t.text == "metriccurve") metric_curve_decl();
        else if (t.text == "assume") assume_decl();
        else err(t, "unknown declaration '" + t.text + "'");
    }

    void check_var_name(const Token& t) {
        int k;
        if (t.text == "t" || t.text == "i" || is_gen_name(t.text, 'e', k) || is_gen_name(t.text, 'Z', k))
            err(t, "'" + t.text + "' is reserved");
    }

    void var_decl() {
        lx_.next();
        Token kindTok = expect_ident("'real' or 'complex'");
        bool real = kindTok.text == "real";
        if (!real && kindTok.text != "complex") err(kindTok, "expected 'real' or 'complex'");
        while (!peek_punct(";")) {
            Token nameTok = expect_ident("a variable name");
            check_var_name(nameTok);
            try {
                if (real) {
                    mutable_table()->add_real(nameTok.text);
                    model_.real_vars.push_back(nameTok.text);
                } else {
                    mutable_table()->add_complex(nameTok.text);
                    model_.complex_vars.push_back(nameTok.text);
                }
            } catch (const StructuralError& e) {
                err(nameTok, e.what());
            }
        }
        expect_punct(";");
    }

    void algebra_decl() {
        Token at = lx_.next();
        if (algebra_seen_) err(at, "only one algebra block per model");
        algebra_seen_ = true;
        Token nameTok = expect_ident("an algebra name");
        model_.name = nameTok.text;
        expect_punct("{");
        expect_keyword("dim");
        expect_punct("=");
        n_ = expect_int();
        if (n_ < 1 || n_ > 8) err(nameTok, "dimension out of range (1..8)");
        expect_punct(";");
        d_eta_.assign(n_, WForm(n_));
        while (!peek_punct("}")) {
            Token dTok = expect_keyword("d");
            Token genTok = expect_ident("a generator e<k>");
            int k;
            if (!is_gen_name(genTok.text, 'e', k) || k < 1 || k > n_)
                err(genTok, "expected a generator e1..e" + std::to_string(n_));
            expect_punct("=");
            Value v = expr();
            expect_punct(";");
            if (v.kind != Value::FormV) err(dTok, "structure rule must be a 2-form");
            d_eta_[k - 1] = v.f;
        }
        expect_punct("}");
    }

    void char_decl() {
        Token ct = lx_.next();
        if (algebra_done_) err(ct, "characters must be declared before metrics and curves");
        if (!algebra_seen_) err(ct, "characters must follow the algebra block");
        Token nameTok = expect_ident("a character name");
        if (char_index_.count(nameTok.text)) err(nameTok, "duplicate character " + nameTok.text);
        expect_punct("{");
        expect_keyword("dlog10");
        expect_punct("=");
        Value v10 = expr();
        expect_punct(";");
        expect_keyword("dlog01");
        expect_punct("=");
        Value v01 = expr();
        expect_punct(";");
        expect_punct("}");
        if (v10.kind != Value::FormV || v01.kind != Value::FormV)
            err(nameTok, "character dlog parts must be 1-forms");
        char_index_[nameTok.text] = static_cast<int>(characters_.size());
        characters_.push_back(Character{nameTok.text, v10.f, v01.f});
    }

    void finalize_algebra() {
        if (algebra_done_) return;
        if (!algebra_seen_) return;
        try {
            model_.algebra = CoframeAlgebra::create(model_.name, n_, table_, d_eta_, characters_,
                                                    model_.assumptions);
        } catch (const StructuralError& e) {
            throw ParseError(1, 1, std::string("algebra rejected: ") + e.what());
        }
        algebra_done_ = true;
    }

    void require_algebra(const Token& t) {
        finalize_algebra();
        if (!model_.algebra) err(t, "an algebra block is required first");
    }

    void metric_decl() {
        Token mt = lx_.next();
        require_algebra(mt);
        Token nameTok = expect_ident("a metric name");
        expect_punct("{");
        OmegaConvention conv = OmegaConvention::HermitianStandard;
        std::vector<std::vector<GaussPoly>> upper(n_, std::vector<GaussPoly>(n_, GaussPoly(table_)));
        while (!peek_punct("}")) {
            Token key = expect_ident("'convention' or 'entry'");
            if (key.text == "convention") {
                expect_punct("=");
                Token val = lx_.next();
                if (val.kind != Tok::Str) err(val, "convention takes a quoted string");
                try {
                    conv = convention_from_name(val.text);
                } catch (const StructuralError& e) {
                    err(val, e.what());
                }
                expect_punct(";");
            } else if (key.text == "entry") {
                int j = expect_int();
                int k = expect_int();
                if (j < 1 || k < 1 || j > n_ || k > n_ || j > k)
                    err(key, "entry indices must satisfy 1 <= j <= k <= dim");
                expect_punct("=");
                Value v = expr();
                expect_punct(";");
                if (v.kind != Value::Poly) err(key, "metric entries are scalar polynomials");
                upper[j - 1][k - 1] = v.p;
            } else {
                err(key, "unknown metric field '" + key.text + "'");
            }
        }
        expect_punct("}");
        try {
            HermMetric g(model_.algebra, upper);
            model_.metrics.emplace(nameTok.text, std::move(g));
            model_.metric_conventions[nameTok.text] = conv;
        } catch (const StructuralError& e) {
            err(nameTok, std::string("non-Hermitian metric block: ") + e.what());
        }
        if (model_.default_metric.empty()) model_.default_metric = nameTok.text;
    }

    void curve_decl() {
        Token ct = lx_.next();
        require_algebra(ct);
        Token nameTok = expect_ident("a curve name");
        expect_punct("=");
        VForm phi(model_.algebra);
        bool negate = false;
        while (true) {
            Value v = expr();
            Token at = expect_punct("@");
            Token zTok = expect_ident("a frame vector Z<k>");
            int zk;
            if (!is_gen_name(zTok.text, 'Z', zk) || zk < 1 || zk > n_)
                err(zTok, "expected Z1..Z" + std::to_string(n_));
            if (v.kind == Value::Poly && v.p.is_zero()) {
                // explicit zero term, nothing to add
            } else {
                if (v.kind != Value::FormV) err(at, "curve term must be a (0,1)-form");
                Bidegree b = v.f.bidegree();
                if (b.kind == Bidegree::Mixed || (b.kind == Bidegree::Pure && !b.is(0, 1)))
                    err(at, "curve component is not of type (0,1)");
                WForm term = v.f;
                term.set_algebra(model_.algebra);
                phi.comp[zk - 1] += negate ? -term : term;
            }
            if (peek_punct("+")) {
                lx_.next();
                negate = false;
            } else if (peek_punct("-")) {
                lx_.next();
                negate = true;
            } else {
                break;
            }
        }
        expect_punct(";");
        DeformationCurve dc{nameTok.text, phi};
        try {
            dc.validate(model_.algebra);
        } catch (const StructuralError& e) {
            err(nameTok, e.what());
        }
        model_.curves.emplace(nameTok.text, std::move(dc));
        if (model_.default_curve.empty()) model_.default_curve = nameTok.text;
    }

    void metric_curve_decl() {
        Token mt = lx_.next();
        require_algebra(mt);
        Token nameTok = expect_ident("a metric curve name");
        expect_punct("{");
        std::string base;
        WForm dot(n_, model_.algebra);
        WForm dot2(n_, model_.algebra);
        while (!peek_punct("}")) {
            Token key = expect_ident("'base', 'dot' or 'dot2'");
            expect_punct("=");
            if (key.text == "base") {
                Token b = expect_ident("a metric name");
                if (!model_.metrics.count(b.text)) err(b, "undeclared metric '" + b.text + "'");
                base = b.text;
            } else if (key.text == "dot" || key.text == "dot2") {
                Value v = expr();
                if (v.kind != Value::FormV) err(key, "metric curve term must be a (1,1)-form");
                Bidegree bd = v.f.bidegree();
                if (bd.kind == Bidegree::Mixed || (bd.kind == Bidegree::Pure && !bd.is(1, 1)))
                    err(key, "metric curve term is not of type (1,1)");
                WForm f = v.f;
                f.set_algebra(model_.algebra);
                (key.text == "dot" ? dot : dot2) = f;
            } else {
                err(key, "unknown metric curve field '" + key.text + "'");
            }
            expect_punct(";");
        }
        expect_punct("}");
        if (base.empty()) err(nameTok, "metric curve needs a base metric");
        MetricCurve mc = MetricCurve::constant(model_.metrics.at(base),
                                               model_.metric_conventions.at(base));
        GaussPoly tvar = GaussPoly::variable(table_, "t");
        if (!dot.is_zero()) mc.omega_t += dot.scaled(tvar);
        if (!dot2.is_zero()) mc.omega_t += dot2.scaled(tvar * tvar);
        model_.metric_curves.emplace(nameTok.text, std::move(mc));
    }

    void assume_decl() {
        lx_.next();
        Token s = lx_.next();
        if (s.kind != Tok::Str) err(s, "assume takes a quoted string");
        expect_punct(";");
        model_.assumptions.push_back(s.text);
    }

    // ----- expressions -----

    Value expr() {
        bool neg = false;
        if (peek_punct("-")) {
            lx_.next();
            neg = true;
        } else if (peek_punct("+")) {
            lx_.next();
        }
        Value acc = term();
        if (neg) acc = negate(acc);
        while (peek_punct("+") || peek_punct("-")) {
            bool minus = lx_.next().text == "-";
            Value rhs = term();
            if (minus) rhs = negate(rhs);
            acc = add(acc, rhs);
        }
        return acc;
    }

    Value term() {
        Value acc = power();
        while (peek_punct("*")) {
            Token op = lx_.next();
            Value rhs = power();
            acc = mul(acc, rhs, op);
        }
        return acc;
    }

    Value power() {
        Value base = atom();
        while (peek_punct("^")) {
            Token op = lx_.next();
            if (base.kind == Value::Poly) {
                // scalar power: exponent must be a nonnegative integer literal
                Token e = lx_.next();
                if (e.kind != Tok::Int) err(e, "scalar exponent must be an integer literal");
                unsigned k = std::stoul(e.text);
                GaussPoly r(table_, GaussRat(1));
                for (unsigned j = 0; j < k; ++j) r = r * base.p;
                base.p = r;
            } else {
                Value rhs = atom();
                if (rhs.kind != Value::FormV) err(op, "wedge needs form operands");
                base.f = base.f.wedge(rhs.f);
            }
        }
        return base;
    }

    Value atom() {
        Token t = lx_.next();
        if (t.kind == Tok::Int) {
            Rat num(t.text);
            if (peek_punct("/")) {
                lx_.next();
                Token d = lx_.next();
                if (d.kind != Tok::Int) err(d, "expected a denominator");
                Rat den(d.text);
                if (den == 0) err(d, "zero denominator");
                num /= den;
            }
            Value v;
            v.p = GaussPoly(table_, GaussRat(num));
            return v;
        }
        if (t.kind == Tok::Punct && t.text == "(") {
            Value v = expr();
            expect_punct(")");
            return v;
        }
        if (t.kind == Tok::Punct && t.text == "-") {
            return negate(atom());
        }
        if (t.kind == Tok::Punct && t.text == "[") {
            Weight w = weight_body();
            Value v;
            v.kind = Value::FormV;
            v.f = WForm(n_);
            v.f.add_term(FKey{w, 0, 0}, GaussPoly(table_, GaussRat(1)));
            return v;
        }
        if (t.kind == Tok::Punct && t.text == "~") {
            Token id = expect_ident("a name after '~'");
            int k;
            if (is_gen_name(id.text, 'e', k)) {
                if (k < 1 || k > n_) err(id, "generator index out of range");
                Value v;
                v.kind = Value::FormV;
                v.f = WForm(n_);
                v.f.add_term(FKey{{}, 0, 1u << (k - 1)}, GaussPoly(table_, GaussRat(1)));
                return v;
            }
            auto idx = table_->find("~" + id.text);
            if (!idx) err(id, "undeclared identifier '~" + id.text + "'");
            Value v;
            v.p = GaussPoly::variable(table_, *idx);
            return v;
        }
        if (t.kind == Tok::Ident) {
            if (t.text == "i") {
                Value v;
                v.p = GaussPoly(table_, GaussRat::imaginary_unit());
                return v;
            }
            if (t.text == "conj") {
                expect_punct("(");
                Value inner = expr();
                expect_punct(")");
                if (inner.kind == Value::Poly) {
                    inner.p = inner.p.conj();
                } else {
                    inner.f = inner.f.conj();
                }
                return inner;
            }
            int k;
            if (is_gen_name(t.text, 'e', k)) {
                if (k < 1 || k > n_) err(t, "generator index out of range");
                Value v;
                v.kind = Value::FormV;
                v.f = WForm(n_);
                v.f.add_term(FKey{{}, 1u << (k - 1), 0}, GaussPoly(table_, GaussRat(1)));
                return v;
            }
            auto idx = table_->find(t.text);
            if (!idx) err(t, "undeclared identifier '" + t.text + "'");
            Value v;
            v.p = GaussPoly::variable(table_, *idx);
            return v;
        }
        err(t, "unexpected token '" + t.text + "'");
    }

    Weight weight_body() {
        Weight w;
        while (true) {
            Token id = expect_ident("a character name");
            auto it = char_index_.find(id.text);
            if (it == char_index_.end()) err(id, "undeclared character '" + id.text + "'");
            int power = 1;
            if (peek_punct("^")) {
                lx_.next();
                int sign = 1;
                if (peek_punct("-")) {
                    lx_.next();
                    sign = -1;
                }
                power = sign * expect_int();
            }
            if ((int)w.exp.size() <= it->second) w.exp.resize(it->second + 1, 0);
            w.exp[it->second] += power;
            if (peek_punct("*")) {
                lx_.next();
                continue;
            }
            break;
        }
        expect_punct("]");
        return w;
    }

    Value negate(Value v) {
        if (v.kind == Value::Poly) v.p = -v.p;
        else v.f = -v.f;
        return v;
    }

    Value add(Value a, Value b) {
        if (a.kind != b.kind) {
            // Allow adding an exact-zero scalar to a form (e.g., "0 + e1").
            if (a.kind == Value::Poly && a.p.is_zero()) return b;
            if (b.kind == Value::Poly && b.p.is_zero()) return a;
            throw ParseError(lx_.peek().line, lx_.peek().col, "cannot add a scalar and a form");
        }
        if (a.kind == Value::Poly) a.p += b.p;
        else a.f += b.f;
        return a;
    }

    Value mul(Value a, Value b, const Token&) {
        Value r;
        if (a.kind == Value::Poly && b.kind == Value::Poly) {
            r.p = a.p * b.p;
            return r;
        }
        r.kind = Value::FormV;
        if (a.kind == Value::Poly) {
            r.f = b.f.scaled(a.p);
        } else if (b.kind == Value::Poly) {
            r.f = a.f.scaled(b.p);
        } else {
            r.f = a.f.wedge(b.f);
        }
        return r;
    }

    Lexer lx_;
    std::string source_;
    VarTablePtr table_;
    ModelFile model_;
    bool algebra_seen_ = false;
    bool algebra_done_ = false;
    int n_ = 0;
    std::vector<WForm> d_eta_;
    std::vector<Character> characters_;
    std::map<std::string, int> char_index_;
};

} // namespace

const HermMetric& ModelFile::metric(const std::string& nm) const {
    const std::string& key = nm.empty() ? default_metric : nm;
    auto it = metrics.find(key);
    if (it == metrics.end()) throw StructuralError("unknown metric '" + key + "'");
    return it->second;
}

const DeformationCurve& ModelFile::curve(const std::string& nm) const {
    const std::string& key = nm.empty() ? default_curve : nm;
    auto it = curves.find(key);
    if (it == curves.end()) throw StructuralError("unknown curve '" + key + "'");
    return it->second;
}

ModelFile parse_model(const std::string& text, const std::string& source_name) {
    Parser p(text, source_name);
    return p.parse();
}

GaussPoly parse_poly_expr(const VarTablePtr& table, const std::string& text) {
    Parser p(text, "<poly>");
    return p.parse_single_poly(table);
}

WForm parse_form_expr(const AlgebraPtr& alg, const std::string& text) {
    Parser p(text, "<form>");
    return p.parse_single_form(alg);
}

std::string form_expr_str(const AlgebraPtr& alg, const WForm& f) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : f.terms()) {
        if (!first) out << " + ";
        first = false;
        std::vector<std::string> factors;
        factors.push_back("(" + c.str() + ")");
        if (!k.w.is_zero()) {
            std::string w = "[";
            bool fw = true;
            for (size_t ci = 0; ci < alg->characters().size(); ++ci) {
                int e = k.w.get(ci);
                if (e == 0) continue;
                if (!fw) w += "*";
                fw = false;
                w += alg->characters()[ci].name;
                if (e != 1) w += "^" + std::to_string(e);
            }
            factors.push_back(w + "]");
        }
        std::string mono;
        for (uint32_t x = k.holo; x; x &= x - 1) {
            if (!mono.empty()) mono += "^";
            mono += "e" + std::to_string(std::countr_zero(x) + 1);
        }
        for (uint32_t x = k.anti; x; x &= x - 1) {
            if (!mono.empty()) mono += "^";
            mono += "~e" + std::to_string(std::countr_zero(x) + 1);
        }
        if (!mono.empty()) factors.push_back(mono);
        for (size_t i = 0; i < factors.size(); ++i) {
            if (i) out << "*";
            out << factors[i];
        }
    }
    return out.str();
}

std::string print_model(const ModelFile& m) {
    std::ostringstream out;
    if (!m.real_vars.empty()) {
        out << "var real";
        for (const auto& v : m.real_vars) out << " " << v;
        out << ";\n";
    }
    if (!m.complex_vars.empty()) {
        out << "var complex";
        for (const auto& v : m.complex_vars) out << " " << v;
        out << ";\n";
    }
    const AlgebraPtr& alg = m.algebra;
    out << "algebra " << m.name << " {\n  dim = " << alg->n() << ";\n";
    for (int k = 1; k <= alg->n(); ++k) {
        if (alg->d_eta(k - 1).is_zero()) continue;
        out << "  d e" << k << " = " << form_expr_str(alg, alg->d_eta(k - 1)) << ";\n";
    }
    out << "}\n";
    for (const auto& ch : alg->characters()) {
        out << "char " << ch.name << " {\n";
        out << "  dlog10 = " << form_expr_str(alg, ch.dlog10) << ";\n";
        out << "  dlog01 = " << form_expr_str(alg, ch.dlog01) << ";\n";
        out << "}\n";
    }
    for (const auto& [name, g] : m.metrics) {
        out << "metric " << name << " {\n";
        out << "  convention = \"" << convention_name(m.metric_conventions.at(name)) << "\";\n";
        for (int j = 1; j <= alg->n(); ++j)
            for (int k = j; k <= alg->n(); ++k) {
                const GaussPoly& e = g.entry(j - 1, k - 1);
                if (e.is_zero()) continue;
                out << "  entry " << j << " " << k << " = " << e.str() << ";\n";
            }
        out << "}\n";
    }
    for (const auto& [name, dc] : m.curves) {
        out << "curve " << name << " =";
        bool first = true;
        for (int i = 0; i < (int)dc.phi_t.comp.size(); ++i) {
            if (dc.phi_t.comp[i].is_zero()) continue;
            out << (first ? " " : " + ") << "(" << form_expr_str(alg, dc.phi_t.comp[i]) << ") @ Z"
                << (i + 1);
            first = false;
        }
        if (first) out << " 0 @ Z1"; // zero curve placeholder
        out << ";\n";
    }
    for (const auto& a : m.assumptions) out << "assume \"" << a << "\";\n";
    return out.str();
}

} // namespace balobs
