#include "balobs/linalg.hpp"

namespace balobs {

ExactMat ExactMat::identity(size_t n) {
    ExactMat r(n, n);
    for (size_t i = 0; i < n; ++i) r.at(i, i) = GaussRat(1);
    return r;
}

ExactMat ExactMat::adjoint() const {
    ExactMat r(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(j, i) = m_[i][j].conj();
    return r;
}

ExactMat ExactMat::operator*(const ExactMat& o) const {
    if (cols_ != o.rows_) throw StructuralError("matrix product shape mismatch");
    ExactMat r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            if (m_[i][k].is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) += m_[i][k] * o.at(k, j);
        }
    return r;
}

ExactMat ExactMat::operator-(const ExactMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw StructuralError("matrix difference shape mismatch");
    ExactMat r(rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(i, j) = m_[i][j] - o.at(i, j);
    return r;
}

bool ExactMat::is_zero() const {
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (!m_[i][j].is_zero()) return false;
    return true;
}

std::vector<GaussRat> ExactMat::apply(const std::vector<GaussRat>& v) const {
    if (v.size() != cols_) throw StructuralError("matrix-vector shape mismatch");
    std::vector<GaussRat> r(rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (!m_[i][j].is_zero()) r[i] += m_[i][j] * v[j];
    return r;
}

Echelon echelon_form(ExactMat m) {
    Echelon e;
    size_t rows = m.rows(), cols = m.cols();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pivot = rows;
        for (size_t i = r; i < rows; ++i) {
            if (!m.at(i, c).is_zero()) { pivot = i; break; }
        }
        if (pivot == rows) continue;
        if (pivot != r)
            for (size_t j = 0; j < cols; ++j) std::swap(m.at(r, j), m.at(pivot, j));
        GaussRat inv = GaussRat(1) / m.at(r, c);
        for (size_t j = c; j < cols; ++j) m.at(r, j) *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            GaussRat f = m.at(i, c);
            for (size_t j = c; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        e.pivot_cols.push_back(c);
        ++r;
    }
    e.rank = r;
    e.reduced = std::move(m);
    return e;
}

size_t rank(const ExactMat& m) { return echelon_form(m).rank; }

std::vector<std::vector<GaussRat>> kernel_basis(const ExactMat& m) {
    Echelon e = echelon_form(m);
    size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : e.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<GaussRat>> basis;
    for (size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        std::vector<GaussRat> v(cols);
        v[free_c] = GaussRat(1);
        for (size_t r = 0; r < e.rank; ++r) {
            size_t pc = e.pivot_cols[r];
            v[pc] = -e.reduced.at(r, free_c);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<GaussRat>> solve(const ExactMat& m, const std::vector<GaussRat>& b) {
    if (b.size() != m.rows()) throw StructuralError("solve: shape mismatch");
    ExactMat aug(m.rows(), m.cols() + 1);
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    Echelon e = echelon_form(std::move(aug));
    std::vector<GaussRat> x(m.cols());
    for (size_t r = 0; r < e.rank; ++r) {
        size_t pc = e.pivot_cols[r];
        if (pc == m.cols()) return std::nullopt; // pivot in the RHS column: inconsistent
        x[pc] = e.reduced.at(r, m.cols());
    }
    return x;
}

ImageProjector image_projector(const ExactMat& B) {
    ImageProjector out;
    size_t rows = B.rows(), cols = B.cols();
    Echelon e = echelon_form(B);
    out.image_dim = e.rank;
    if (e.rank == 0) {
        out.projector = ExactMat(rows, rows);
        out.preimage = ExactMat(cols, rows);
        return out;
    }
    ExactMat C(rows, e.rank);
    for (size_t k = 0; k < e.rank; ++k)
        for (size_t i = 0; i < rows; ++i) C.at(i, k) = B.at(i, e.pivot_cols[k]);
    ExactMat Cs = C.adjoint();
    ExactMat G = Cs * C; // Hermitian positive definite on the column space
    // Invert G by solving against the identity.
    ExactMat Ginv(e.rank, e.rank);
    for (size_t j = 0; j < e.rank; ++j) {
        std::vector<GaussRat> ej(e.rank);
        ej[j] = GaussRat(1);
        auto col = solve(G, ej);
        if (!col) throw StructuralError("gram matrix not invertible (impossible for independent columns)");
        for (size_t i = 0; i < e.rank; ++i) Ginv.at(i, j) = (*col)[i];
    }
    ExactMat coords = Ginv * Cs;      // v -> coordinates of the projection in C-columns
    out.projector = C * coords;
    // Potential supported on the pivot columns of B.
    ExactMat Y(cols, rows);
    for (size_t k = 0; k < e.rank; ++k)
        for (size_t j = 0; j < rows; ++j) Y.at(e.pivot_cols[k], j) = coords.at(k, j);
    out.preimage = Y;
    return out;
}

} // namespace balobs
