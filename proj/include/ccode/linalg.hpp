#pragma once

/// @file linalg.hpp
/// Exact linear algebra over a finite field, row-vector convention, plus a
/// small subspace toolkit (spans, kernels, sums, intersections, orthogonal
/// complements under the standard bilinear form).

#include <optional>
#include <vector>

#include "ccode/field.hpp"
#include "ccode/matrix.hpp"

namespace ccode {

using FqMatrix = Matrix<Fq>;
using FqVector = std::vector<Fq>;

FqMatrix fq_zeros(const Field& f, std::size_t rows, std::size_t cols);
FqMatrix fq_identity(const Field& f, std::size_t n);
FqVector fq_zero_vec(const Field& f, std::size_t n);
FqVector fq_unit_vec(const Field& f, std::size_t n, std::size_t i);

/// Reduced row echelon form in place; returns the pivot column of each pivot
/// row (so the rank is the returned vector's size).
std::vector<std::size_t> rref_inplace(FqMatrix& m);

std::size_t rank(FqMatrix m);
/// Canonical basis (rref, no zero rows) of the row space.
FqMatrix row_space_basis(const FqMatrix& m);
/// Canonical basis of { u : u*m = 0 }.
FqMatrix left_kernel_basis(const FqMatrix& m, const Field& f);
/// One solution u of u*m = b, if any.
std::optional<FqVector> solve_left(const FqMatrix& m, const FqVector& b, const Field& f);
std::optional<FqMatrix> inverse(const FqMatrix& m, const Field& f);
bool is_invertible(const FqMatrix& m, const Field& f);
Fq determinant(FqMatrix m, const Field& f);
FqMatrix mat_pow(const FqMatrix& m, const Field& f, std::size_t e);

/// A linear subspace of F^m given by a canonical rref basis without zero rows.
class Subspace {
public:
    Subspace(const Field& f, std::size_t ambient) : f_(&f), basis_(0, ambient) {}
    /// Span of the rows of m.
    static Subspace span(const Field& f, const FqMatrix& m);

    const Field& field() const { return *f_; }
    std::size_t ambient() const { return basis_.cols(); }
    std::size_t dim() const { return basis_.rows(); }
    const FqMatrix& basis() const { return basis_; }

    bool contains(const FqVector& v) const;
    bool contains(const Subspace& other) const;
    friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

    friend Subspace sum(const Subspace& a, const Subspace& b);
    friend Subspace intersect(const Subspace& a, const Subspace& b);
    /// { w : w . v = 0 for all v in this } under the standard dot product.
    Subspace orthogonal_complement() const;

    /// All q^dim vectors of the subspace (throws ResourceError beyond the cap).
    std::vector<FqVector> enumerate(long long cap = 1 << 22) const;

private:
    const Field* f_;
    FqMatrix basis_;
};

/// True iff a + b is direct and equals whole.
bool is_direct_sum(const Subspace& a, const Subspace& b, const Subspace& whole);

} // namespace ccode
