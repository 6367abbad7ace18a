#pragma once

/// @file duality.hpp
/// The dual-pair machinery connecting the two weight adjacency matrices: the
/// S-matrix family, the coupling matrices N and the block matrices M0/M1/M2,
/// the state isomorphism P, subspace decomposition checks, the zero-output
/// propagation map sigma, and the top-level verifiers for both module-level
/// and sequence-level duality.

#include "ccode/transform.hpp"

namespace ccode {

/// S[0] = B^T E and S[i] = B^T B A^{i-1} C for i = 1..2*delta (indices above
/// delta vanish by nilpotency; they are kept so convolution sums can run to
/// their formal range).
std::vector<FqMatrix> s_matrices(const Ccf& c);

struct NPair {
    FqMatrix n;     // couples dual row space with primal column space
    FqMatrix n_hat; // same with the roles exchanged
};

/// Triple sums over (A^T)-powers, S-products and A-powers, truncated where
/// nilpotency kills every summand; the truncation boundary term is asserted
/// to vanish, and a re-indexed route to n_hat^T is asserted to agree with the
/// transposed direct computation.
NPair n_matrices(const Ccf& primal, const Ccf& dual);

struct PBundle {
    FqMatrix n, n_hat;
    FqMatrix m0, m1, m2, m; // 2*delta x 2*delta blocks
    FqMatrix p;             // delta x delta, invertible
};

/// P = dual.C E^T B - N A together with its block-matrix witnesses; throws
/// InvariantViolation unless M0+M1+M2 == [0 P; -P 0] and P is invertible.
PBundle p_bundle(const Ccf& primal, const Ccf& dual);
FqMatrix p_matrix(const Ccf& primal, const Ccf& dual);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail; // populated on failure
};

/// Every linear-algebra identity the duality argument rests on, evaluated on
/// a dual pair of realizations and returned as named pass/fail entries.
std::vector<CheckResult> duality_invariant_report(const Ccf& primal, const Ccf& dual);

struct SigmaReport {
    long rank = 0;          // rank of C dual.E^T dual.B
    long dim_domain = 0;    // dim of its left kernel
    bool rank_matches = false;      // rank == dual.r and dim == delta - dual.r
    bool well_defined = false;      // X component determines the pair in Omega
    bool domain_matches = false;    // kernel equals the Omega X-projection
    bool injective = false;
    bool orbits_escape = false;     // every orbit reaches 0 or leaves the domain
    long max_orbit_steps = 0;
    bool pass = false;
};

/// The zero-output propagation map X -> Y on pairs (X, Y) in Omega, studied
/// on the left kernel of C dual.E^T dual.B.
SigmaReport sigma_report(const Ccf& primal, const Ccf& dual);

struct MwCertificate {
    bool pass = false;
    long q = 0, n = 0, k = 0;
    int delta = 0;
    long long entries_checked = 0, mismatches = 0;
    std::optional<EntryMismatch> first_mismatch;
    FqMatrix n_mat, n_hat, p;
    std::string failure; // set when an internal invariant broke mid-run
};

/// Full duality check: the dual WAM must equal the transform of the
/// conjugated primal WAM after relabeling states by P.  The dual encoder is
/// constructed when not supplied; a supplied one must have shape
/// (n-k) x n, satisfy g * dual^T = 0, and be basic and minimal.
MwCertificate verify_macwilliams(const PolyMatrix& g, const PolyMatrix* dual = nullptr);

struct ReversalCcf {
    Ccf ccf;     // realization of the reciprocal encoder; shares A and B
    FqMatrix r;  // blockwise anti-diagonal involution
    FqMatrix l;  // orthogonal (delta+k)-map sending [C; E] to [C'; E']
};

/// Realization of the reciprocal encoder both by the closed form
/// [C'; E'] = [R A^T, R B^T; B R, I - B B^T][C; E] and by rebuilding from the
/// reciprocal matrix; the two must agree, L L^T = I, and R A^T R = A.
ReversalCcf reversal_ccf(const Ccf& c);

/// rev(X, Y) entry equals the primal (Y R, X R) entry, everywhere.
bool reversal_wam_check(const WamZ& lam, const WamZ& lam_rev, const FqMatrix& r);

struct SequenceCertificate {
    bool pass = false;
    long q = 0, n = 0, k = 0;
    int delta = 0;
    bool reversal_transpose_ok = false;
    long long entries_checked = 0, mismatches = 0;
    std::optional<EntryMismatch> first_mismatch;
    FqMatrix r, p_tilde, q_mat;
    std::string failure;
};

/// Duality under the coefficientwise sequence pairing: the dual is the
/// reversal of the module dual, its WAM satisfies the same identity with the
/// untransposed sandwich and Q = R * P~^{-1}.
SequenceCertificate verify_sequence_macwilliams(const PolyMatrix& g);

} // namespace ccode
