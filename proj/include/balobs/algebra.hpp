#pragma once

#include "balobs/forms.hpp"

namespace balobs {

/// Abstract multiplicative character e^{w}, declared through the (1,0)
/// and (0,1) parts of its logarithmic differential. The conjugate
/// character is the inverse (weight exponent -1), which forces
/// conj(dlog10) == -dlog01.
struct Character {
    std::string name;
    WForm dlog10;
    WForm dlog01;
};

struct DSquaredReport {
    bool ok = true;
    std::vector<std::string> violations;
};

/// Invariant coframe data: complex dimension n, structure 2-forms
/// d(eta^k) with Gaussian-rational constants, declared characters and
/// the variable table shared by every coefficient polynomial.
class CoframeAlgebra : public std::enable_shared_from_this<CoframeAlgebra> {
public:
    /// validate_d2 = false skips the d^2 = 0 gate so that a defective
    /// algebra can still be constructed and inspected by d_squared_check.
    static AlgebraPtr create(std::string name, int n, VarTablePtr vars,
                             std::vector<WForm> d_eta,
                             std::vector<Character> characters,
                             std::vector<std::string> assumptions = {},
                             bool validate_d2 = true);

    const std::string& name() const { return name_; }
    int n() const { return n_; }
    const VarTablePtr& vars() const { return vars_; }
    const WForm& d_eta(int k) const { return d_eta_.at(k); }
    const std::vector<Character>& characters() const { return characters_; }
    const std::vector<std::string>& assumptions() const { return assumptions_; }

    Weight character_weight(int c, int power = 1) const;
    std::string weight_str(const Weight& w) const;
    std::string form_str(const WForm& f) const;
    std::string form_str(const NumForm& f) const;

    /// Structure constant eta^k([Z_i, Z_j]) read off the 2-forms.
    GaussRat lie_bracket_coeff(int i, int j, int k) const;

private:
    CoframeAlgebra() = default;

    std::string name_;
    int n_ = 0;
    VarTablePtr vars_;
    std::vector<WForm> d_eta_;
    std::vector<Character> characters_;
    std::vector<std::string> assumptions_;
};

/// Basis (1,0)-form eta^k, 1-based index.
WForm eta(const AlgebraPtr& alg, int k);
/// Basis (0,1)-form conj(eta^k), 1-based index.
WForm etabar(const AlgebraPtr& alg, int k);
/// The constant function 1 as a 0-form, optionally in a weight sector.
WForm unit_form(const AlgebraPtr& alg, const Weight& w = {});
/// Monomial builder from 1-based index lists, weight zero.
WForm basis_monomial(const AlgebraPtr& alg, const std::vector<int>& holo,
                     const std::vector<int>& anti);

/// d(d(eta^k)) = 0 for every k plus closedness of every character
/// dlog; violations are listed by generator.
DSquaredReport d_squared_check(const AlgebraPtr& alg);

} // namespace balobs
