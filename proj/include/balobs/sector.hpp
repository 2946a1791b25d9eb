#pragma once

#include "balobs/linalg.hpp"
#include "balobs/metrics.hpp"

namespace balobs {

/// Finite-dimensional slice of the invariant Dolbeault complex at one
/// weight sector and bidegree, with the delbar matrices in and out.
struct SectorComplex {
    AlgebraPtr alg;
    Weight w;
    int p = 0, q = 0;
    std::vector<FKey> basis;      // (p,q)
    std::vector<FKey> basis_up;   // (p,q+1)
    std::vector<FKey> basis_down; // (p,q-1)
    ExactMat dbar_out;            // basis -> basis_up
    ExactMat dbar_in;             // basis_down -> basis

    size_t dim() const { return basis.size(); }
};

SectorComplex build_sector(const AlgebraPtr& alg, const Weight& w, int p, int q);

/// Total invariant H^{0,1} dimension summed over the given weight
/// sectors.
int invariant_h01_dimension(const AlgebraPtr& alg, const std::vector<Weight>& sectors);

/// Default sector set: weight zero plus +-1 of each declared character.
std::vector<Weight> default_sectors(const AlgebraPtr& alg);

/// Decomposition of a delbar-closed form into a certified exact part
/// and a residual in the orthogonal complement of the image, with the
/// residual coefficients emitted as vanishing conditions.
struct ClassResidual {
    WForm input;
    WForm exact_part;
    WForm potential; // delbar(potential) = exact_part, certified
    WForm residual;  // input - exact_part
    std::vector<GaussPoly> conditions;      // monic, zero entries dropped
    std::vector<GaussPoly> conditions_raw;  // unscaled residual coefficients
    std::vector<std::string> condition_monomials; // complement basis labels

    bool no_obstruction() const { return conditions.empty(); }
};

ClassResidual reduce_class(const AlgebraPtr& alg, const WForm& theta);

/// Exact check that delbar(beta) equals the given term.
bool certify_exact(const AlgebraPtr& alg, const WForm& theta_term, const WForm& beta);

} // namespace balobs
