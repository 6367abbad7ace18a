#pragma once

/// @file wam.hpp
/// Weight adjacency matrices: the q^delta x q^delta grid whose (X, Y) entry is
/// the weight enumerator of the outputs emitted on transitions from state X to
/// state Y, states enumerated lexicographically with the leftmost coordinate
/// most significant and field elements in canonical index order.

#include <optional>
#include <vector>

#include "ccode/ccf.hpp"
#include "ccode/weight_poly.hpp"

namespace ccode {

/// Cap on q^delta grids, overridable via the CCDUAL_MAX_STATES environment
/// variable.
long long max_states();

/// Bijection between F^len and [0, q^len) with the leftmost coordinate most
/// significant; single elements map to their canonical index.
class StateIndexer {
public:
    StateIndexer(const Field& f, int len, bool enforce_cap = false);

    const Field& field() const { return *f_; }
    int len() const { return len_; }
    long long size() const { return size_; }

    long long index(const FqVector& x) const;
    FqVector vector_at(long long idx) const;

private:
    const Field* f_;
    int len_;
    long long size_;
};

template <class R>
struct Wam {
    const Field* field = nullptr;
    int delta = 0;
    long n = 0;                  // output length behind the enumerators
    Matrix<WeightPoly<R>> entries; // dense q^delta x q^delta

    long long size() const { return static_cast<long long>(entries.rows()); }
    long q() const { return field->q(); }
};

using WamZ = Wam<long long>;
using WamC = Wam<CycloRat>;

/// Accumulate the WAM of a realization by streaming over all (state, input)
/// pairs; entries are set-based enumerators (full-rank E makes outputs within
/// one transition distinct automatically).
WamZ compute_wam(const Ccf& c);

/// Weight enumerator of an explicit set of vectors (duplicates collapse).
WPolyZ weight_enumerator(std::vector<FqVector> words);
/// Weight enumerator of the row space of a basis.
WPolyZ weight_enumerator_of_span(const Subspace& s);

/// Basis of the constant-codeword subcode (ker B)E of a realization.
Subspace constant_subcode(const Ccf& c);
/// Basis of the coefficient space: the span of all rows of C and E.
Subspace coefficient_space(const Ccf& c);

/// Transition-structure subspaces of F^{2 delta} (row pairs (X, Y)).
struct SubspacePair {
    Subspace delta_space;   // im [I A; 0 B], dimension delta + r
    Subspace omega;         // pairs of delta_space whose outputs can vanish
    Subspace delta_perp;    // orthogonal complement, spanned by (X A^T, -X A^T A)
    Subspace delta_minus;   // {0} x im A
};

SubspacePair transition_spaces(const Ccf& c);

/// Entry relabeling (X, Y) -> (X P, Y P) for invertible P.
template <class R>
Wam<R> conjugate_by_state_iso(const Wam<R>& w, const FqMatrix& p);

/// Search GL_delta for a relabeling with a == conjugate_by_state_iso(b, P).
/// Returns the first match in enumeration order, or nullopt.
std::optional<FqMatrix> wams_equivalent(const WamZ& a, const WamZ& b);

/// Row-structure sanity of a computed WAM: support q^r per row, each nonzero
/// entry counting q^{k-r} words, row sums q^k, and the (0,0) entry dominating
/// the constant subcode coefficientwise.
void validate_wam(const WamZ& w, const Ccf& c);

} // namespace ccode
