#include "ccode/transform.hpp"

#include <algorithm>

namespace ccode {

namespace {

long long checked_add_ll(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw ResourceError("64-bit overflow in character-sum accumulation");
    return r;
}

long long pow_ll(long long b, long e) {
    long long r = 1;
    for (long i = 0; i < e; ++i) r *= b;
    return r;
}

WPolyC scale_poly(const Rat& s, const WPolyC& f) {
    std::vector<CycloRat> c(f.deg() + 1);
    for (int i = 0; i <= f.deg(); ++i) c[i] = s * f.coeff(i);
    return WPolyC(std::move(c));
}

} // namespace

CycloRat CharacterMatrix::entry(long long i, long long j) const {
    return CycloRat::zeta_power(field->p(), exp_at(i, j));
}

CharacterMatrix character_matrix(const Field& f, int delta) {
    CharacterMatrix k;
    k.field = &f;
    k.delta = delta;
    StateIndexer states(f, delta, true);
    k.size = states.size();
    k.expo.assign(static_cast<std::size_t>(k.size) * k.size, 0);
    std::vector<FqVector> vecs(k.size);
    for (long long i = 0; i < k.size; ++i) vecs[i] = states.vector_at(i);
    for (long long i = 0; i < k.size; ++i)
        for (long long j = i; j < k.size; ++j) {
            Fq dot;
            for (int t = 0; t < delta; ++t) dot += vecs[i][t] * vecs[j][t];
            uint16_t e = static_cast<uint16_t>(f.trace(dot));
            k.expo[i * k.size + j] = e;
            k.expo[j * k.size + i] = e;
        }
    if (k.size <= 256) {
        // K conj(K)^T at (X, Z) sums zeta^{E[X][Y] - E[Z][Y]} over Y: on the
        // diagonal every exponent is 0; off it each residue must occur q^delta/p
        // times so the full sum of p-th roots vanishes.
        long p = f.p();
        std::vector<long long> bucket(p);
        for (long long x = 0; x < k.size; ++x)
            for (long long z = 0; z < k.size; ++z) {
                std::fill(bucket.begin(), bucket.end(), 0);
                for (long long y = 0; y < k.size; ++y)
                    ++bucket[(k.exp_at(x, y) - k.exp_at(z, y) + p) % p];
                bool ok;
                if (x == z) {
                    ok = bucket[0] == k.size;
                } else {
                    ok = true;
                    for (long c = 0; c < p; ++c) ok = ok && bucket[c] * p == k.size;
                }
                if (!ok) throw InvariantViolation("character kernel fails K conj(K)^T = q^delta I");
            }
    }
    return k;
}

namespace {

/// Shared core of the two sandwich orders.  Stage one folds the right factor
/// conj(K)^T into per-exponent buckets T[Y][Z][c]; stage two folds the left K
/// by rotating buckets.  The boolean picks Lambda^T (true) or Lambda (false)
/// as the inner matrix.
WamC sandwich(const WamZ& lam, bool transposed_inner) {
    const Field& f = *lam.field;
    const long long size = lam.size();
    const long p = f.p();
    const int nw = static_cast<int>(lam.n) + 1;
    CharacterMatrix k = character_matrix(f, lam.delta);

    auto slot = [&](long long a, long long b, long c) {
        return ((a * size + b) * p + c) * nw;
    };
    std::vector<long long> t(static_cast<std::size_t>(size) * size * p * nw, 0);
    for (long long v = 0; v < size; ++v)
        for (long long y = 0; y < size; ++y) {
            const WPolyZ& e = transposed_inner ? lam.entries(v, y) : lam.entries(y, v);
            if (e.is_zero()) continue;
            for (long long z = 0; z < size; ++z) {
                long c = (p - k.exp_at(z, v)) % p;
                long long base = slot(y, z, c);
                for (int w = 0; w <= e.deg(); ++w) t[base + w] = checked_add_ll(t[base + w], e.coeff(w));
            }
        }

    std::vector<long long> g(static_cast<std::size_t>(size) * size * p * nw, 0);
    for (long long x = 0; x < size; ++x)
        for (long long y = 0; y < size; ++y) {
            long shift = k.exp_at(x, y);
            for (long long z = 0; z < size; ++z)
                for (long c = 0; c < p; ++c) {
                    long long src = slot(y, z, c);
                    long long dst = slot(x, z, (shift + c) % p);
                    for (int w = 0; w < nw; ++w)
                        if (t[src + w] != 0) g[dst + w] = checked_add_ll(g[dst + w], t[src + w]);
                }
        }

    Rat scale = Rat(1) / rat_from_ll(pow_ll(f.q(), lam.delta));
    WamC out;
    out.field = &f;
    out.delta = lam.delta;
    out.n = lam.n;
    out.entries = Matrix<WPolyC>(size, size);
    std::vector<Rat> bucket(p);
    for (long long x = 0; x < size; ++x)
        for (long long z = 0; z < size; ++z) {
            std::vector<CycloRat> coeffs(nw);
            for (int w = 0; w < nw; ++w) {
                long long base = slot(x, z, 0);
                for (long c = 0; c < p; ++c) bucket[c] = rat_from_ll(g[base + c * nw + w]);
                coeffs[w] = scale * CycloRat::from_buckets(p, bucket);
            }
            out.entries(x, z) = WPolyC(std::move(coeffs));
        }
    return out;
}

} // namespace

WamC conjugate_wam(const WamZ& lambda) { return sandwich(lambda, true); }

WamC conjugate_wam_untransposed(const WamZ& lambda) { return sandwich(lambda, false); }

WamC transformed_dual_candidate(const WamC& gamma, long n, long k) {
    Rat scale = Rat(1) / rat_from_ll(pow_ll(gamma.q(), k));
    WamC out;
    out.field = gamma.field;
    out.delta = gamma.delta;
    out.n = n;
    out.entries = Matrix<WPolyC>(gamma.size(), gamma.size());
    for (long long i = 0; i < gamma.size(); ++i)
        for (long long j = 0; j < gamma.size(); ++j)
            out.entries(i, j) = scale_poly(scale, mw_transform(gamma.entries(i, j), n, gamma.q()));
    return out;
}

WamMatchReport match_via_state_map(const WamZ& dual, const WamC& phi, const FqMatrix& p) {
    if (dual.field != phi.field || dual.delta != phi.delta)
        throw UsageError("grids are not comparable");
    const Field& f = *dual.field;
    StateIndexer states(f, dual.delta, true);
    std::vector<long long> image(states.size());
    for (long long i = 0; i < states.size(); ++i) image[i] = states.index(vec_mat(states.vector_at(i), p));

    WamMatchReport rep;
    for (long long x = 0; x < states.size(); ++x)
        for (long long y = 0; y < states.size(); ++y) {
            ++rep.checked;
            const WPolyZ& lhs = dual.entries(x, y);
            const WPolyC& rhs = phi.entries(image[x], image[y]);
            bool ok = rhs.deg() <= static_cast<int>(dual.n);
            int top = std::max(lhs.deg(), rhs.deg());
            for (int w = 0; ok && w <= top; ++w) {
                CycloRat c = rhs.coeff(w);
                ok = (c.is_zero() || c.is_rational()) &&
                     (c.is_zero() ? Rat(0) : c.rational_value()) == rat_from_ll(lhs.coeff(w));
            }
            if (!ok) {
                ++rep.mismatches;
                if (!rep.first)
                    rep.first = EntryMismatch{x, y, lhs.str(), rhs.str()};
            }
        }
    rep.pass = rep.mismatches == 0;
    return rep;
}

bool sandwich_consistent(const WamC& gamma, const WamZ& lambda, bool transposed_inner) {
    if (gamma.field != lambda.field || gamma.delta != lambda.delta)
        throw UsageError("grids are not comparable");
    const Field& f = *gamma.field;
    long long size = gamma.size();
    if (size > 64) throw ResourceError("direct sandwich check limited to 64 states");
    CharacterMatrix k = character_matrix(f, gamma.delta);
    long p = f.p();
    for (long long x = 0; x < size; ++x)
        for (long long v = 0; v < size; ++v) {
            WPolyC left, right;
            for (long long z = 0; z < size; ++z)
                left += CycloRat::zeta_power(p, k.exp_at(z, v)) * gamma.entries(x, z);
            for (long long y = 0; y < size; ++y) {
                const WPolyZ& e = transposed_inner ? lambda.entries(v, y) : lambda.entries(y, v);
                if (e.is_zero()) continue;
                std::vector<CycloRat> coeffs(e.deg() + 1);
                for (int w = 0; w <= e.deg(); ++w)
                    coeffs[w] = CycloRat::from_rational(p, rat_from_ll(e.coeff(w)));
                right += CycloRat::zeta_power(p, k.exp_at(x, y)) * WPolyC(std::move(coeffs));
            }
            if (left != right) return false;
        }
    return true;
}

bool block_macwilliams_check(const Field& f, const FqMatrix& g, bool brute) {
    long n = static_cast<long>(g.cols());
    Subspace code = Subspace::span(f, g);
    long k = static_cast<long>(code.dim());
    WPolyZ primal = weight_enumerator_of_span(code);

    WPolyZ dual_we;
    if (brute) {
        StateIndexer words(f, static_cast<int>(n));
        FqMatrix gt = g.transposed();
        for (long long i = 0; i < words.size(); ++i) {
            FqVector v = words.vector_at(i);
            FqVector syn = vec_mat(v, gt);
            bool orth = true;
            for (const auto& s : syn) orth = orth && s.is_zero();
            if (orth) dual_we.add_monomial(1, static_cast<int>(hamming_weight(v)));
        }
    } else {
        dual_we = weight_enumerator_of_span(code.orthogonal_complement());
    }

    WPolyZ lhs = pow_ll(f.q(), k) * dual_we;
    return lhs == mw_transform(primal, n, f.q());
}

} // namespace ccode
