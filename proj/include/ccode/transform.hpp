#pragma once

/// @file transform.hpp
/// The character kernel K with K(X, Y) = zeta^{tau(X Y^T)} on state pairs,
/// conjugation of a weight adjacency matrix by K, and the entrywise
/// MacWilliams transform of the result.  Hot paths accumulate 64-bit integer
/// buckets per zeta exponent and only leave integers at the final division.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ccode/wam.hpp"

namespace ccode {

/// Dense table of exponents tau(X Y^T) mod p over all state pairs, states in
/// index order.  K is symmetric, and K conj(K)^T = q^delta I; that identity is
/// verified bucketwise on construction for sizes up to 256.
struct CharacterMatrix {
    const Field* field = nullptr;
    int delta = 0;
    long long size = 0;
    std::vector<uint16_t> expo; // row-major, size x size

    uint16_t exp_at(long long i, long long j) const { return expo[i * size + j]; }
    CycloRat entry(long long i, long long j) const;
};

CharacterMatrix character_matrix(const Field& f, int delta);

/// q^{-delta} K Lambda^T conj(K)^T with exact cyclotomic entries.
WamC conjugate_wam(const WamZ& lambda);
/// Same sandwich with Lambda untransposed on the inside.
WamC conjugate_wam_untransposed(const WamZ& lambda);

/// Entrywise MacWilliams transform over block length n, scaled by q^{-k}.
WamC transformed_dual_candidate(const WamC& gamma, long n, long k);

struct EntryMismatch {
    long long row = 0, col = 0;
    std::string lhs, rhs;
};

struct WamMatchReport {
    bool pass = false;
    long long checked = 0;
    long long mismatches = 0;
    std::optional<EntryMismatch> first;
};

/// Entrywise test of dual(X, Y) == phi(X P, Y P); every inspected phi entry
/// must be rational-valued with integer coefficients.
WamMatchReport match_via_state_map(const WamZ& dual, const WamC& phi, const FqMatrix& p);

/// Direct check of the sandwich: gamma * K == q^{-delta} K * inner * conj(K)^T * K,
/// i.e. gamma * K == K * inner where inner is lambda^T or lambda.  Quadratic
/// in the grid size times another grid factor; intended for small grids.
bool sandwich_consistent(const WamC& gamma, const WamZ& lambda, bool transposed_inner);

/// Block-code degeneration: q^k we(dual code) == transform of we(row space of
/// g).  With brute = true the dual is found by scanning all q^n words.
bool block_macwilliams_check(const Field& f, const FqMatrix& g, bool brute);

} // namespace ccode
