#pragma once

/// @file poly_matrix.hpp
/// Polynomial generator matrices and the encoder-level algorithms: internal
/// and external degree, basicness, minimality, row reduction to a minimal
/// encoder, Hermite normal form (canonical for row-module equality), Smith
/// decomposition, dual encoder construction, and reciprocal matrices.

#include <vector>

#include "ccode/linalg.hpp"
#include "ccode/matrix.hpp"
#include "ccode/poly.hpp"

namespace ccode {

using PolyMatrix = Matrix<Poly>;

PolyMatrix poly_zeros(std::size_t rows, std::size_t cols);
PolyMatrix poly_identity(const Field& f, std::size_t n);
/// Lift a scalar matrix to constant polynomials.
PolyMatrix lift(const FqMatrix& m);

Matrix<Fq> eval_at(const PolyMatrix& g, const Fq& x);
/// Matrix of D^i coefficients.
Matrix<Fq> coefficient_slice(const PolyMatrix& g, int i, const Field& f);
int max_entry_degree(const PolyMatrix& g);

/// Row degrees (zero rows give -1).
std::vector<int> row_degrees(const PolyMatrix& g);
/// Sum of row degrees, negatives clamped to 0.
int external_degree(const PolyMatrix& g);
/// Row i holds the D^{deg row i} coefficients of row i (zero rows stay zero).
Matrix<Fq> highest_coefficient_matrix(const PolyMatrix& g, const Field& f);

Poly poly_determinant(const PolyMatrix& m);
/// All k x k minors of a k x n matrix (k <= n), column subsets in
/// lexicographic order.
std::vector<Poly> full_size_minors(const PolyMatrix& g);

/// Internal degree: the maximal degree of a full-size minor.
/// Throws StructuralError when every minor vanishes (rank deficiency).
int code_degree(const PolyMatrix& g);

/// Monic gcd of the full-size minors (zero if all vanish).
Poly minors_gcd(const PolyMatrix& g);

/// True iff the gcd of the full-size minors is a nonzero constant,
/// i.e. the matrix has a polynomial right inverse.
bool is_basic(const PolyMatrix& g);

/// True iff the external degree attains the internal degree.
bool is_minimal(const PolyMatrix& g);

/// Row-reduce a basic encoder to a minimal one generating the same module
/// (left multiplication by a unimodular matrix).
PolyMatrix minimal_reduction(const PolyMatrix& g);

/// Row Hermite normal form: the canonical representative of the left
/// unimodular orbit. Two full-row-rank matrices generate the same row module
/// iff their forms coincide.
PolyMatrix hermite_form(const PolyMatrix& g);

bool same_row_module(const PolyMatrix& a, const PolyMatrix& b);

struct SmithDecomposition {
    PolyMatrix u;      // k x k unimodular
    PolyMatrix v;      // n x n unimodular
    PolyMatrix v_inv;  // v^{-1}
    std::vector<Poly> invariants; // monic diagonal d_1 | d_2 | ...
};

/// g = u * [diag(invariants) | 0] * v, verified internally.
SmithDecomposition smith_decompose(const PolyMatrix& g);

/// Minimal basic encoder of the dual code: rows spanning
/// { w : g * w^T = 0 } over the polynomial ring. Requires k < n and g basic.
PolyMatrix dual_encoder(const PolyMatrix& g);

/// Row i scaled by D^{deg row i} with D replaced by 1/D (requires minimal input).
PolyMatrix reciprocal_matrix(const PolyMatrix& g);

struct CodeProfile {
    long n = 0, k = 0;
    long q = 0;
    int degree = 0;                // internal degree
    std::vector<int> row_degrees;  // in encoder row order
    std::vector<int> forney;       // sorted ascending
    long r = 0;                    // count of positive row degrees
    bool basic = false;
    bool minimal = false;
};

CodeProfile profile(const PolyMatrix& g, const Field& f);

/// Field of a polynomial matrix's coefficients; throws when untraceable.
const Field& matrix_field(const PolyMatrix& g);

} // namespace ccode
