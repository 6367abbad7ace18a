#include "ccode/wam.hpp"

#include <algorithm>
#include <cstdlib>

namespace ccode {

long long max_states() {
    if (const char* env = std::getenv("CCDUAL_MAX_STATES")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v >= 1) return v;
        throw UsageError("CCDUAL_MAX_STATES must be a positive integer");
    }
    return 1024;
}

StateIndexer::StateIndexer(const Field& f, int len, bool enforce_cap) : f_(&f), len_(len) {
    if (len < 0) throw UsageError("negative tuple length");
    long long cap = enforce_cap ? max_states() : (1LL << 62);
    size_ = 1;
    for (int i = 0; i < len; ++i) {
        if (size_ > cap / f.q())
            throw ResourceError("state space size " + std::to_string(f.q()) + "^" + std::to_string(len) +
                                " exceeds the cap of " + std::to_string(cap));
        size_ *= f.q();
    }
}

long long StateIndexer::index(const FqVector& x) const {
    if (x.size() != static_cast<std::size_t>(len_)) throw UsageError("tuple length mismatch");
    long long idx = 0;
    for (int i = 0; i < len_; ++i) {
        const Fq& e = x[i];
        if (e.field() && e.field() != f_) throw UsageError("tuple element from another field");
        idx = idx * f_->q() + e.idx();
    }
    return idx;
}

FqVector StateIndexer::vector_at(long long idx) const {
    if (idx < 0 || idx >= size_) throw UsageError("tuple index out of range");
    FqVector x(len_, f_->zero());
    for (int i = len_ - 1; i >= 0; --i) {
        x[i] = f_->element(idx % f_->q());
        idx /= f_->q();
    }
    return x;
}

WamZ compute_wam(const Ccf& c) {
    const Field& f = *c.field;
    StateIndexer states(f, c.delta, true);
    StateIndexer inputs(f, static_cast<int>(c.k));
    WamZ w;
    w.field = &f;
    w.delta = c.delta;
    w.n = c.n;
    w.entries = Matrix<WPolyZ>(states.size(), states.size());
    for (long long xi = 0; xi < states.size(); ++xi) {
        FqVector x = states.vector_at(xi);
        FqVector xa = vec_mat(x, c.A);
        FqVector xc = vec_mat(x, c.C);
        for (long long ui = 0; ui < inputs.size(); ++ui) {
            FqVector u = inputs.vector_at(ui);
            FqVector y = vec_add(xa, vec_mat(u, c.B));
            FqVector v = vec_add(xc, vec_mat(u, c.E));
            w.entries(xi, states.index(y)).add_monomial(1, static_cast<int>(hamming_weight(v)));
        }
    }
    return w;
}

WPolyZ weight_enumerator(std::vector<FqVector> words) {
    auto key = [](const FqVector& v) {
        std::vector<long> k(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) k[i] = v[i].idx();
        return k;
    };
    std::sort(words.begin(), words.end(), [&](const FqVector& a, const FqVector& b) { return key(a) < key(b); });
    words.erase(std::unique(words.begin(), words.end(),
                            [&](const FqVector& a, const FqVector& b) { return key(a) == key(b); }),
                words.end());
    WPolyZ acc;
    for (const auto& v : words) acc.add_monomial(1, static_cast<int>(hamming_weight(v)));
    return acc;
}

WPolyZ weight_enumerator_of_span(const Subspace& s) {
    WPolyZ acc;
    for (const auto& v : s.enumerate()) acc.add_monomial(1, static_cast<int>(hamming_weight(v)));
    return acc;
}

Subspace constant_subcode(const Ccf& c) {
    const Field& f = *c.field;
    return Subspace::span(f, left_kernel_basis(c.B, f) * c.E);
}

Subspace coefficient_space(const Ccf& c) {
    return Subspace::span(*c.field, vstack(c.C, c.E));
}

SubspacePair transition_spaces(const Ccf& c) {
    const Field& f = *c.field;
    std::size_t d = static_cast<std::size_t>(c.delta);
    FqMatrix top = hstack(fq_identity(f, d), c.A);
    FqMatrix bottom = hstack(fq_zeros(f, c.k, d), c.B);
    Subspace delta_space = Subspace::span(f, vstack(top, bottom));

    FqMatrix At = c.A.transposed();
    Subspace delta_perp = Subspace::span(f, hstack(At, -(At * c.A)));
    Subspace delta_minus = Subspace::span(f, hstack(fq_zeros(f, d, d), c.A));

    // Members (X, Y) of delta_space with X C + Y B^T E in the constant subcode.
    Subspace cconst = constant_subcode(c);
    FqMatrix bte = c.B.transposed() * c.E;
    const FqMatrix& basis = delta_space.basis();
    FqMatrix outs(basis.rows(), c.n, f.zero());
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        FqVector pair = basis.row(i);
        FqVector x(pair.begin(), pair.begin() + d);
        FqVector y(pair.begin() + d, pair.end());
        FqVector o = vec_add(vec_mat(x, c.C), vec_mat(y, bte));
        outs.set_row(i, o);
    }
    Subspace omega(f, 2 * d);
    if (basis.rows() > 0) {
        FqMatrix stacked = cconst.dim() > 0 ? vstack(outs, cconst.basis()) : outs;
        FqMatrix ker = left_kernel_basis(stacked, f);
        FqMatrix lam = ker.block(0, 0, ker.rows(), basis.rows());
        omega = Subspace::span(f, lam * basis);
    }
    return SubspacePair{delta_space, omega, delta_perp, delta_minus};
}

template <class R>
Wam<R> conjugate_by_state_iso(const Wam<R>& w, const FqMatrix& p) {
    const Field& f = *w.field;
    if (p.rows() != static_cast<std::size_t>(w.delta) || p.cols() != p.rows())
        throw UsageError("state isomorphism has wrong shape");
    if (!is_invertible(p, f)) throw PreconditionError("state relabeling matrix is singular");
    StateIndexer states(f, w.delta, true);
    std::vector<long long> image(states.size());
    for (long long i = 0; i < states.size(); ++i) image[i] = states.index(vec_mat(states.vector_at(i), p));
    Wam<R> out;
    out.field = w.field;
    out.delta = w.delta;
    out.n = w.n;
    out.entries = Matrix<WeightPoly<R>>(states.size(), states.size());
    for (long long i = 0; i < states.size(); ++i)
        for (long long j = 0; j < states.size(); ++j) out.entries(i, j) = w.entries(image[i], image[j]);
    return out;
}

template Wam<long long> conjugate_by_state_iso(const Wam<long long>&, const FqMatrix&);
template Wam<Rat> conjugate_by_state_iso(const Wam<Rat>&, const FqMatrix&);
template Wam<CycloRat> conjugate_by_state_iso(const Wam<CycloRat>&, const FqMatrix&);

std::optional<FqMatrix> wams_equivalent(const WamZ& a, const WamZ& b) {
    if (a.field != b.field || a.delta != b.delta) throw UsageError("weight adjacency matrices are not comparable");
    const Field& f = *a.field;
    int d = a.delta;
    StateIndexer states(f, d, true);
    StateIndexer cells(f, d * d);
    if (cells.size() > 400000) throw ResourceError("state isomorphism search space too large");
    std::vector<long long> image(states.size());
    for (long long m = 0; m < cells.size(); ++m) {
        FqVector flat = cells.vector_at(m);
        FqMatrix p(d, d, f.zero());
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) p(i, j) = flat[i * d + j];
        if (!is_invertible(p, f)) continue;
        for (long long i = 0; i < states.size(); ++i) image[i] = states.index(vec_mat(states.vector_at(i), p));
        bool ok = true;
        for (long long i = 0; i < states.size() && ok; ++i)
            for (long long j = 0; j < states.size() && ok; ++j)
                ok = (a.entries(i, j) == b.entries(image[i], image[j]));
        if (ok) return p;
    }
    return std::nullopt;
}

void validate_wam(const WamZ& w, const Ccf& c) {
    const Field& f = *c.field;
    long long qr = 1, qkr = 1, qk = 1;
    for (long i = 0; i < c.r; ++i) qr *= f.q();
    for (long i = 0; i < c.k - c.r; ++i) qkr *= f.q();
    for (long i = 0; i < c.k; ++i) qk *= f.q();
    for (long long i = 0; i < w.size(); ++i) {
        long long nonzero = 0, total = 0;
        for (long long j = 0; j < w.size(); ++j) {
            const WPolyZ& e = w.entries(i, j);
            if (e.is_zero()) continue;
            ++nonzero;
            long long at1 = e.eval_one();
            if (at1 != qkr) throw InvariantViolation("transition enumerator does not count q^{k-r} words");
            total += at1;
        }
        if (nonzero != qr) throw InvariantViolation("row support is not q^r");
        if (total != qk) throw InvariantViolation("row sum at W=1 is not q^k");
    }
    WPolyZ cconst_we = weight_enumerator_of_span(constant_subcode(c));
    const WPolyZ& corner = w.entries(0, 0);
    for (int t = 0; t <= cconst_we.deg(); ++t)
        if (corner.coeff(t) < cconst_we.coeff(t))
            throw InvariantViolation("corner entry does not dominate the constant subcode");
    Subspace delta_space = transition_spaces(c).delta_space;
    StateIndexer states(f, c.delta, true);
    for (long long i = 0; i < w.size(); ++i) {
        FqVector x = states.vector_at(i);
        for (long long j = 0; j < w.size(); ++j) {
            FqVector pair = x;
            FqVector y = states.vector_at(j);
            pair.insert(pair.end(), y.begin(), y.end());
            if (delta_space.contains(pair) == w.entries(i, j).is_zero())
                throw InvariantViolation("support does not match the transition span");
        }
    }
}

} // namespace ccode
