#pragma once

/// @file random_codes.hpp
/// Deterministic random generators for property tests: seeded encoders with
/// prescribed length, rank, and state dimension.

#include <random>

#include "ccode/poly_matrix.hpp"

namespace ccode {

using Rng = std::mt19937_64;

Fq random_element(const Field& f, Rng& rng);

/// Random full-rank k x n constant matrix.
FqMatrix random_full_rank_matrix(const Field& f, long k, long n, Rng& rng, int attempts = 4000);

/// Random basic minimal k x n encoder whose row degrees sum to delta
/// (the degrees themselves are drawn at random). Rejection-sampled;
/// throws ResourceError when the attempt budget runs out.
PolyMatrix random_minimal_basic_encoder(const Field& f, long n, long k, int delta, Rng& rng,
                                        int attempts = 4000);

} // namespace ccode
