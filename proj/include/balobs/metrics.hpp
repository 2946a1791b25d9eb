#pragma once

#include "balobs/calculus.hpp"

namespace balobs {

/// How the fundamental 2-form is written out in terms of the metric
/// parameters alpha_{jk}:
///  - PaperLiteral writes
///      (i/2) sum_j alpha_jj e^{j~j} + (1/2) sum_{j<k} (alpha_jk - ~alpha_jk) e^{j~k},
///    a shorthand that is not conjugation-invariant; kept for
///    side-by-side comparison, with the realness defect observable.
///  - HermitianStandard takes omega = (i/2) sum_{j,k} G_jk e^j^~e^k with
///    G the Hermitian matrix representing g (diagonal alpha_jj, upper
///    entries -i*alpha_jk, lower entries i*~alpha_jk); this form is real
///    and reproduces the worked obstruction polynomials exactly.
enum class OmegaConvention { PaperLiteral, HermitianStandard };

std::string convention_name(OmegaConvention c);
OmegaConvention convention_from_name(const std::string& s);

/// Invariant Hermitian metric: the parameter matrix A with
/// A[k][j] = conj(A[j][k]) and real diagonal entries.
class HermMetric {
public:
    HermMetric() = default;
    HermMetric(AlgebraPtr alg, std::vector<std::vector<GaussPoly>> upper_entries);

    /// A[j][k] = variable "<prefix><j><k>" for j <= k (declared in the
    /// algebra's table; diagonal real, off-diagonal complex).
    static HermMetric generic(const AlgebraPtr& alg, const std::string& prefix = "al");
    static HermMetric identity(const AlgebraPtr& alg);

    const AlgebraPtr& algebra() const { return alg_; }
    const GaussPoly& entry(int j, int k) const { return A_.at(j).at(k); }
    int n() const { return alg_ ? alg_->n() : 0; }

    /// The Hermitian matrix representing g: diagonal parameters as-is,
    /// off-diagonal parameters with the -i / +i factors.
    std::vector<std::vector<GaussPoly>> g_matrix() const;

private:
    AlgebraPtr alg_;
    std::vector<std::vector<GaussPoly>> A_;
};

/// Fundamental form of the metric under the chosen convention.
WForm omega_from_metric(const HermMetric& g, OmegaConvention conv);

/// Exact k-fold wedge power, no factorial normalization.
WForm wedge_power(const WForm& omega, int k);

/// conj(omega) - omega; zero iff the form is real.
WForm realness_defect(const WForm& omega);

struct BalancedResult {
    bool balanced = false;
    WForm residual; // delbar(omega^{n-1})
};

BalancedResult balanced_check(const AlgebraPtr& alg, const WForm& omega);

} // namespace balobs
