#pragma once

#include "balobs/scalars.hpp"

namespace balobs {

/// Dense matrix over the Gaussian rationals; exact throughout.
class ExactMat {
public:
    ExactMat() = default;
    ExactMat(size_t rows, size_t cols) : rows_(rows), cols_(cols), m_(rows, std::vector<GaussRat>(cols)) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    GaussRat& at(size_t r, size_t c) { return m_[r][c]; }
    const GaussRat& at(size_t r, size_t c) const { return m_[r][c]; }

    static ExactMat identity(size_t n);
    ExactMat adjoint() const;                 // conjugate transpose
    ExactMat operator*(const ExactMat& o) const;
    ExactMat operator-(const ExactMat& o) const;
    bool is_zero() const;

    std::vector<GaussRat> apply(const std::vector<GaussRat>& v) const;

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<std::vector<GaussRat>> m_;
};

/// Row echelon reduction (fraction-free style pivoting with exact
/// division); returns rank and records pivot columns.
struct Echelon {
    ExactMat reduced;
    std::vector<size_t> pivot_cols;
    size_t rank = 0;
};

Echelon echelon_form(ExactMat m);

size_t rank(const ExactMat& m);

/// Basis of the right kernel.
std::vector<std::vector<GaussRat>> kernel_basis(const ExactMat& m);

/// Solves M x = b exactly; empty optional if inconsistent.
std::optional<std::vector<GaussRat>> solve(const ExactMat& m, const std::vector<GaussRat>& b);

/// Hermitian least-squares data for the column space of B under the
/// standard pairing <u,v> = sum u_l conj(v_l):
///   projector:  P = C (C* C)^-1 C*          (orthogonal projector onto im B)
///   preimage:   Y with  B Y = P             (so x = Y v is a potential for P v)
/// where C collects a maximal independent subset of B's columns.
struct ImageProjector {
    ExactMat projector;
    ExactMat preimage;
    size_t image_dim = 0;
};

ImageProjector image_projector(const ExactMat& B);

} // namespace balobs
