#include "ccode/linalg.hpp"

namespace ccode {

FqMatrix fq_zeros(const Field& f, std::size_t rows, std::size_t cols) {
    return FqMatrix(rows, cols, f.zero());
}

FqMatrix fq_identity(const Field& f, std::size_t n) {
    FqMatrix m(n, n, f.zero());
    for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
    return m;
}

FqVector fq_zero_vec(const Field& f, std::size_t n) { return FqVector(n, f.zero()); }

FqVector fq_unit_vec(const Field& f, std::size_t n, std::size_t i) {
    FqVector v(n, f.zero());
    v[i] = f.one();
    return v;
}

std::vector<std::size_t> rref_inplace(FqMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t pr = 0;
    for (std::size_t col = 0; col < m.cols() && pr < m.rows(); ++col) {
        std::size_t sel = pr;
        while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != pr)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(pr, j));
        Fq inv = m(pr, col).inv();
        for (std::size_t j = col; j < m.cols(); ++j) m(pr, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == pr || m(i, col).is_zero()) continue;
            Fq c = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= c * m(pr, j);
        }
        pivots.push_back(col);
        ++pr;
    }
    return pivots;
}

std::size_t rank(FqMatrix m) { return rref_inplace(m).size(); }

FqMatrix row_space_basis(const FqMatrix& m) {
    FqMatrix r = m;
    std::size_t rk = rref_inplace(r).size();
    return r.block(0, 0, rk, m.cols());
}

FqMatrix left_kernel_basis(const FqMatrix& m, const Field& f) {
    // Row-reduce [m | I]; rows whose m-part vanished carry kernel combinations.
    FqMatrix aug = hstack(m, fq_identity(f, m.rows()));
    rref_inplace(aug);
    std::vector<std::size_t> zero_rows;
    for (std::size_t i = 0; i < aug.rows(); ++i) {
        bool all_zero = true;
        for (std::size_t j = 0; j < m.cols() && all_zero; ++j) all_zero = aug(i, j).is_zero();
        if (all_zero) zero_rows.push_back(i);
    }
    FqMatrix k(zero_rows.size(), m.rows(), f.zero());
    for (std::size_t i = 0; i < zero_rows.size(); ++i)
        for (std::size_t j = 0; j < m.rows(); ++j) k(i, j) = aug(zero_rows[i], m.cols() + j);
    return row_space_basis(k);
}

std::optional<FqVector> solve_left(const FqMatrix& m, const FqVector& b, const Field& f) {
    if (b.size() != m.cols()) throw UsageError("solve_left: right-hand side length mismatch");
    // u*m = b  <=>  m^T u^T = b^T; eliminate on [m^T | b^T].
    FqMatrix aug(m.cols(), m.rows() + 1, f.zero());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) aug(j, i) = m(i, j);
    for (std::size_t j = 0; j < m.cols(); ++j) aug(j, m.rows()) = b[j];
    auto pivots = rref_inplace(aug);
    FqVector u = fq_zero_vec(f, m.rows());
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == m.rows()) return std::nullopt; // pivot in the rhs column
        u[pivots[r]] = aug(r, m.rows());
    }
    return u;
}

std::optional<FqMatrix> inverse(const FqMatrix& m, const Field& f) {
    if (m.rows() != m.cols()) throw UsageError("inverse of non-square matrix");
    FqMatrix aug = hstack(m, fq_identity(f, m.rows()));
    auto pivots = rref_inplace(aug);
    if (pivots.size() != m.rows()) return std::nullopt;
    for (std::size_t r = 0; r < pivots.size(); ++r)
        if (pivots[r] != r) return std::nullopt;
    return aug.block(0, m.cols(), m.rows(), m.rows());
}

bool is_invertible(const FqMatrix& m, const Field& f) {
    (void)f;
    return m.rows() == m.cols() && rank(m) == m.rows();
}

Fq determinant(FqMatrix m, const Field& f) {
    if (m.rows() != m.cols()) throw UsageError("determinant of non-square matrix");
    Fq det = f.one();
    for (std::size_t col = 0; col < m.cols(); ++col) {
        std::size_t sel = col;
        while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
        if (sel == m.rows()) return f.zero();
        if (sel != col) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        Fq inv = m(col, col).inv();
        for (std::size_t i = col + 1; i < m.rows(); ++i) {
            if (m(i, col).is_zero()) continue;
            Fq c = m(i, col) * inv;
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= c * m(col, j);
        }
    }
    return det;
}

FqMatrix mat_pow(const FqMatrix& m, const Field& f, std::size_t e) {
    if (m.rows() != m.cols()) throw UsageError("power of non-square matrix");
    FqMatrix result = fq_identity(f, m.rows());
    for (std::size_t i = 0; i < e; ++i) result = result * m;
    return result;
}

Subspace Subspace::span(const Field& f, const FqMatrix& m) {
    Subspace s(f, m.cols());
    s.basis_ = row_space_basis(m);
    return s;
}

bool Subspace::contains(const FqVector& v) const {
    if (v.size() != ambient()) throw UsageError("vector from a different ambient space");
    FqMatrix stacked = vstack(basis_, FqMatrix::from_rows({v}));
    return rank(stacked) == dim();
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient() != ambient()) throw UsageError("subspaces of different ambient spaces");
    return rank(vstack(basis_, other.basis_)) == dim();
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw UsageError("subspaces of different ambient spaces");
    return Subspace::span(*a.f_, vstack(a.basis_, b.basis_));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw UsageError("subspaces of different ambient spaces");
    // (lambda, mu) with lambda*A = mu*B: left kernel of [A; -B], then project.
    if (a.dim() == 0 || b.dim() == 0) return Subspace(*a.f_, a.ambient());
    FqMatrix stacked = vstack(a.basis_, -b.basis_);
    FqMatrix ker = left_kernel_basis(stacked, *a.f_);
    FqMatrix lam = ker.block(0, 0, ker.rows(), a.dim());
    return Subspace::span(*a.f_, lam * a.basis_);
}

Subspace Subspace::orthogonal_complement() const {
    if (dim() == 0) return Subspace::span(*f_, fq_identity(*f_, ambient()));
    Subspace s(*f_, ambient());
    s.basis_ = left_kernel_basis(basis_.transposed(), *f_);
    return s;
}

std::vector<FqVector> Subspace::enumerate(long long cap) const {
    long long count = 1;
    for (std::size_t i = 0; i < dim(); ++i) {
        count *= f_->q();
        if (count > cap) throw ResourceError("subspace too large to enumerate");
    }
    std::vector<FqVector> out;
    out.reserve(static_cast<std::size_t>(count));
    for (long long t = 0; t < count; ++t) {
        FqVector coeff(dim());
        long long v = t;
        for (std::size_t i = 0; i < dim(); ++i) {
            coeff[dim() - 1 - i] = f_->element(v % f_->q());
            v /= f_->q();
        }
        out.push_back(dim() ? vec_mat(coeff, basis_) : fq_zero_vec(*f_, ambient()));
    }
    return out;
}

bool is_direct_sum(const Subspace& a, const Subspace& b, const Subspace& whole) {
    if (intersect(a, b).dim() != 0) return false;
    Subspace s = sum(a, b);
    return s.dim() == a.dim() + b.dim() && s == whole;
}

} // namespace ccode
