#include "ccode/ccf.hpp"

#include <algorithm>
#include <numeric>

namespace ccode {

Ccf build_ccf(const PolyMatrix& g) {
    const Field& f = matrix_field(g);
    std::size_t k = g.rows(), n = g.cols();
    if (k == 0 || n == 0) throw UsageError("empty generator matrix");
    if (!is_basic(g)) throw PreconditionError("state realization requires a basic encoder");
    if (!is_minimal(g)) throw PreconditionError("state realization requires a minimal encoder");

    Ccf c;
    c.field = &f;
    c.n = static_cast<long>(n);
    c.k = static_cast<long>(k);

    auto degs = row_degrees(g);
    c.row_perm.resize(k);
    std::iota(c.row_perm.begin(), c.row_perm.end(), std::size_t{0});
    std::stable_partition(c.row_perm.begin(), c.row_perm.end(),
                          [&](std::size_t i) { return degs[i] > 0; });

    c.G = PolyMatrix(k, n);
    c.indices.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < n; ++j) c.G(i, j) = g(c.row_perm[i], j);
        c.indices[i] = std::max(degs[c.row_perm[i]], 0);
        if (c.indices[i] > 0) ++c.r;
    }
    c.delta = std::accumulate(c.indices.begin(), c.indices.end(), 0);

    std::size_t d = static_cast<std::size_t>(c.delta);
    c.A = fq_zeros(f, d, d);
    c.B = fq_zeros(f, k, d);
    c.C = fq_zeros(f, d, n);
    c.E = eval_at(c.G, f.zero());

    std::size_t off = 0;
    for (long i = 0; i < c.r; ++i) {
        std::size_t di = static_cast<std::size_t>(c.indices[i]);
        for (std::size_t t = 0; t + 1 < di; ++t) c.A(off + t, off + t + 1) = f.one();
        c.B(i, off) = f.one();
        for (std::size_t t = 0; t < di; ++t)
            for (std::size_t j = 0; j < n; ++j) {
                Fq coef = c.G(i, j).coeff(static_cast<int>(t) + 1);
                if (!coef.is_zero()) c.C(off + t, j) = coef;
            }
        off += di;
    }

    // The realization must reproduce the encoder as a power series.
    PolyMatrix series = lift(c.E);
    FqMatrix apow = fq_identity(f, d);
    int dmax = *std::max_element(c.indices.begin(), c.indices.end());
    for (int i = 1; i <= dmax; ++i) {
        FqMatrix term = c.B * apow * c.C;
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (!term(a, b).is_zero()) series(a, b) += Poly::monomial(term(a, b), i);
        apow = apow * c.A;
    }
    if (series != c.G) throw InvariantViolation("state realization does not expand to the encoder");
    return c;
}

std::pair<FqVector, FqVector> ccf_step(const Ccf& c, const FqVector& state, const FqVector& input) {
    if (state.size() != static_cast<std::size_t>(c.delta)) throw UsageError("state dimension mismatch");
    if (input.size() != static_cast<std::size_t>(c.k)) throw UsageError("input dimension mismatch");
    FqVector next = vec_add(vec_mat(state, c.A), vec_mat(input, c.B));
    FqVector out = vec_add(vec_mat(state, c.C), vec_mat(input, c.E));
    return {next, out};
}

std::vector<FqVector> encode_series(const Ccf& c, const std::vector<Poly>& u, int horizon) {
    if (u.size() != static_cast<std::size_t>(c.k)) throw UsageError("input vector length mismatch");
    int du = -1;
    for (const Poly& p : u) du = std::max(du, p.deg());
    int dmax = c.indices.empty() ? 0 : *std::max_element(c.indices.begin(), c.indices.end());
    if (horizon < du + dmax) throw PreconditionError("horizon too short to flush the encoder state");
    const Field& f = *c.field;
    FqVector x = fq_zero_vec(f, c.delta);
    std::vector<FqVector> out;
    out.reserve(horizon + 1);
    for (int t = 0; t <= horizon; ++t) {
        FqVector ut(c.k, f.zero());
        for (long i = 0; i < c.k; ++i) {
            Fq coef = u[i].coeff(t);
            if (!coef.is_zero()) ut[i] = coef;
        }
        auto [next, vt] = ccf_step(c, x, ut);
        out.push_back(vt);
        x = next;
    }
    return out;
}

std::vector<FqVector> encode_polynomial(const Ccf& c, const std::vector<Poly>& u, int horizon) {
    const Field& f = *c.field;
    PolyMatrix urow(1, c.k);
    for (long i = 0; i < c.k; ++i) urow(0, i) = u[i];
    PolyMatrix v = urow * c.G;
    std::vector<FqVector> out;
    for (int t = 0; t <= horizon; ++t) {
        FqVector vt(c.n, f.zero());
        for (long j = 0; j < c.n; ++j) {
            Fq coef = v(0, j).coeff(t);
            if (!coef.is_zero()) vt[j] = coef;
        }
        out.push_back(vt);
    }
    return out;
}

namespace {

void require(bool cond, const char* what) {
    if (!cond) throw InvariantViolation(std::string("realization identity failed: ") + what);
}

} // namespace

void validate_ccf(const Ccf& c) {
    const Field& f = *c.field;
    std::size_t d = static_cast<std::size_t>(c.delta);
    FqMatrix At = c.A.transposed(), Bt = c.B.transposed();
    require(c.A * Bt == fq_zeros(f, d, c.k), "A*Bt == 0");
    require(c.B * Bt * c.B == c.B, "B*Bt*B == B");
    require(c.A * At * c.A == c.A, "A*At*A == A");
    require(At * c.A + Bt * c.B == fq_identity(f, d), "At*A + Bt*B == I");
    require(rank(c.E) == static_cast<std::size_t>(c.k), "rank(E) == k");
    require(c.E == eval_at(c.G, f.zero()), "E == G(0)");

    // im Bt is spanned by the first r unit vectors, ker B by the last k-r.
    FqMatrix first_r = fq_zeros(f, c.r, c.k);
    for (long i = 0; i < c.r; ++i) first_r(i, i) = f.one();
    require(row_space_basis(Bt) == row_space_basis(first_r), "im(Bt) == <e_1..e_r>");
    FqMatrix last = fq_zeros(f, c.k - c.r, c.k);
    for (long i = 0; i < c.k - c.r; ++i) last(i, c.r + i) = f.one();
    require(left_kernel_basis(c.B, f) == row_space_basis(last), "ker(B) == <e_{r+1}..e_k>");

    Subspace imA = Subspace::span(f, c.A);
    Subspace imB = Subspace::span(f, c.B);
    require(intersect(imA, imB).dim() == 0, "im(A) meets im(B) trivially");

    // Constant-codeword space: (ker B)E, equal to the span of constant rows.
    FqMatrix kerB = left_kernel_basis(c.B, f);
    Subspace cconst = Subspace::span(f, kerB * c.E);
    FqMatrix const_rows = fq_zeros(f, c.k - c.r, c.n);
    for (long i = c.r; i < c.k; ++i)
        for (long j = 0; j < c.n; ++j) const_rows(i - c.r, j) = c.G(i, j).coeff(0);
    require(cconst == Subspace::span(f, const_rows), "(ker B)E == span of constant rows");
    Subspace imBtE = Subspace::span(f, Bt * c.E);
    require(is_direct_sum(imBtE, cconst, Subspace::span(f, c.E)), "im(E) == im(BtE) (+) const part");

    Subspace kerA = Subspace::span(f, left_kernel_basis(c.A, f));
    Subspace kerC = Subspace::span(f, left_kernel_basis(c.C, f));
    require(intersect(kerA, kerC).dim() == 0, "ker(A) meets ker(C) trivially");
    Subspace kerAC = Subspace::span(f, left_kernel_basis(c.A, f) * c.C);
    require(intersect(kerAC, cconst).dim() == 0, "(ker A)C meets const part trivially");
}

} // namespace ccode
