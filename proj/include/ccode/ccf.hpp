#pragma once

/// @file ccf.hpp
/// Controller canonical state realization (A, B, C, E) of a minimal basic
/// encoder.  Rows with positive degree are moved in front of constant rows by
/// a stable permutation (recorded) before the blocks are laid out, so block i
/// of A is the d_i x d_i upper shift, row i of B marks the start of block i,
/// block i of C stacks the D^1..D^{d_i} coefficient rows of encoder row i,
/// and E is the encoder evaluated at D = 0.
///
/// State convention: row vectors, x_{t+1} = x_t A + u_t B,  v_t = x_t C + u_t E.

#include <vector>

#include "ccode/linalg.hpp"
#include "ccode/poly_matrix.hpp"

namespace ccode {

struct Ccf {
    const Field* field = nullptr;
    long n = 0, k = 0;
    int delta = 0;            // total state dimension
    long r = 0;               // rows with positive degree
    std::vector<int> indices; // row degrees in realized row order (positive first)
    std::vector<std::size_t> row_perm; // realized row i <- original row row_perm[i]
    FqMatrix A, B, C, E;      // delta x delta, k x delta, delta x n, k x n
    PolyMatrix G;             // the realized (permuted) encoder
};

/// Build the realization. Requires a basic, minimal encoder.
Ccf build_ccf(const PolyMatrix& g);

/// One state transition: returns (next state, output).
std::pair<FqVector, FqVector> ccf_step(const Ccf& c, const FqVector& state, const FqVector& input);

/// Drive the realization with a polynomial input (coefficients of u per time
/// step) for t = 0..horizon and return the output coefficient vectors.
/// The horizon must cover deg u plus the largest row degree.
std::vector<FqVector> encode_series(const Ccf& c, const std::vector<Poly>& u, int horizon);

/// Output coefficients of u * G expanded to the same horizon.
std::vector<FqVector> encode_polynomial(const Ccf& c, const std::vector<Poly>& u, int horizon);

/// Structural identities of the realization; throws InvariantViolation with
/// the offending identity's name.
void validate_ccf(const Ccf& c);

} // namespace ccode
