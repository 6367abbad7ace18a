#include "ccode/duality.hpp"

#include <algorithm>

namespace ccode {

namespace {

FqMatrix four_block(const FqMatrix& tl, const FqMatrix& tr, const FqMatrix& bl, const FqMatrix& br) {
    return vstack(hstack(tl, tr), hstack(bl, br));
}

std::vector<FqMatrix> matrix_powers(const FqMatrix& a, const Field& f, int top) {
    std::vector<FqMatrix> p{fq_identity(f, a.rows())};
    for (int i = 1; i <= top; ++i) p.push_back(p.back() * a);
    return p;
}

bool is_zero_matrix(const FqMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) return false;
    return true;
}

/// Sum of left_powers[i-1] * left_s[j] * right_s[m-j]^T * right_powers[m-i-1]
/// over m in [m_lo, m_hi], i in [1, m-1], and j in [0, i-1] (or [i+1, m] when
/// upper is set).  Missing S-indices vanish.
FqMatrix triple_sum(const Field& f, int delta,
                    const std::vector<FqMatrix>& left_s, const std::vector<FqMatrix>& right_s,
                    const std::vector<FqMatrix>& left_powers, const std::vector<FqMatrix>& right_powers,
                    int m_lo, int m_hi, bool upper) {
    FqMatrix acc = fq_zeros(f, delta, delta);
    for (int m = m_lo; m <= m_hi; ++m)
        for (int i = 1; i <= m - 1; ++i) {
            int j_lo = upper ? i + 1 : 0;
            int j_hi = upper ? m : i - 1;
            for (int j = j_lo; j <= j_hi; ++j) {
                if (j >= static_cast<int>(left_s.size()) || m - j >= static_cast<int>(right_s.size())) continue;
                acc = acc + left_powers[i - 1] * left_s[j] * right_s[m - j].transposed() * right_powers[m - i - 1];
            }
        }
    return acc;
}

/// Pairs (X, X A + u B) over all solutions of X C + u E = 0.
Subspace omega_via_inputs(const Ccf& c) {
    const Field& f = *c.field;
    std::size_t d = static_cast<std::size_t>(c.delta);
    FqMatrix ker = left_kernel_basis(vstack(c.C, c.E), f);
    FqMatrix pairs(ker.rows(), 2 * d, f.zero());
    for (std::size_t i = 0; i < ker.rows(); ++i) {
        FqVector row = ker.row(i);
        FqVector x(row.begin(), row.begin() + d);
        FqVector u(row.begin() + d, row.end());
        FqVector y = vec_add(vec_mat(x, c.A), vec_mat(u, c.B));
        for (std::size_t j = 0; j < d; ++j) {
            pairs(i, j) = x[j];
            pairs(i, d + j) = y[j];
        }
    }
    return Subspace::span(f, pairs);
}

} // namespace

std::vector<FqMatrix> s_matrices(const Ccf& c) {
    std::vector<FqMatrix> s;
    s.push_back(c.B.transposed() * c.E);
    FqMatrix btb = c.B.transposed() * c.B;
    FqMatrix apow = fq_identity(*c.field, static_cast<std::size_t>(c.delta));
    for (int i = 1; i <= 2 * c.delta; ++i) {
        s.push_back(btb * apow * c.C);
        apow = apow * c.A;
    }
    return s;
}

NPair n_matrices(const Ccf& c, const Ccf& h) {
    const Field& f = *c.field;
    int d = c.delta;
    if (h.delta != d) throw UsageError("realizations have different state dimensions");
    auto s = s_matrices(c);
    auto sh = s_matrices(h);
    auto ap = matrix_powers(c.A, f, 2 * d);
    auto atp = matrix_powers(c.A.transposed(), f, 2 * d);
    auto ahp = matrix_powers(h.A, f, 2 * d);
    auto ahtp = matrix_powers(h.A.transposed(), f, 2 * d);

    NPair np{triple_sum(f, d, sh, s, ahtp, ap, 2, 2 * d - 1, false),
             triple_sum(f, d, s, sh, atp, ahp, 2, 2 * d - 1, false)};
    if (2 * d >= 2) {
        bool boundary_zero = is_zero_matrix(triple_sum(f, d, sh, s, ahtp, ap, 2 * d, 2 * d, false)) &&
                             is_zero_matrix(triple_sum(f, d, s, sh, atp, ahp, 2 * d, 2 * d, false)) &&
                             is_zero_matrix(triple_sum(f, d, sh, s, ahtp, ap, 2 * d, 2 * d, true));
        if (!boundary_zero) throw InvariantViolation("truncated coupling sum has a nonzero boundary term");
    }
    FqMatrix nht_alt = triple_sum(f, d, sh, s, ahtp, ap, 2, 2 * d - 1, true);
    if (!(nht_alt == np.n_hat.transposed()))
        throw InvariantViolation("re-indexed coupling route disagrees with the transposed definition");
    return np;
}

PBundle p_bundle(const Ccf& c, const Ccf& h) {
    const Field& f = *c.field;
    std::size_t d = static_cast<std::size_t>(c.delta);
    NPair np = n_matrices(c, h);
    FqMatrix z = fq_zeros(f, d, d);
    FqMatrix nht = np.n_hat.transposed();
    FqMatrix sh0 = h.B.transposed() * h.E;
    PBundle b;
    b.n = np.n;
    b.n_hat = np.n_hat;
    b.m0 = four_block(h.C * c.C.transposed(), h.C * c.E.transposed() * c.B, sh0 * c.C.transposed(), z);
    b.m1 = four_block(np.n, -(np.n * c.A), z, z);
    b.m2 = four_block(nht, z, -(h.A.transposed() * nht), z);
    b.m = b.m0 + b.m1 + b.m2;
    b.p = h.C * c.E.transposed() * c.B - np.n * c.A;
    if (!(b.m == four_block(z, b.p, -b.p, z)))
        throw InvariantViolation("block sum is not the skew pair of the state transformation");
    if (!is_invertible(b.p, f)) throw InvariantViolation("state transformation is singular");
    return b;
}

FqMatrix p_matrix(const Ccf& c, const Ccf& h) { return p_bundle(c, h).p; }

std::vector<CheckResult> duality_invariant_report(const Ccf& c, const Ccf& h) {
    const Field& f = *c.field;
    std::vector<CheckResult> out;
    auto add = [&](const std::string& name, bool pass, const std::string& detail = "identity failed") {
        out.push_back({name, pass, pass ? std::string() : detail});
    };

    add("encoders-orthogonal",
        c.G * h.G.transposed() == poly_zeros(static_cast<std::size_t>(c.k), static_cast<std::size_t>(h.k)),
        "primal times transposed dual encoder is nonzero");
    add("state-dimensions-match", c.delta == h.delta, "internal degrees differ");
    try {
        validate_ccf(c);
        add("primal-realization-structure", true);
    } catch (const Error& e) {
        add("primal-realization-structure", false, e.what());
    }
    try {
        validate_ccf(h);
        add("dual-realization-structure", true);
    } catch (const Error& e) {
        add("dual-realization-structure", false, e.what());
    }
    if (c.delta != h.delta) return out;

    int d = c.delta;
    std::size_t du = static_cast<std::size_t>(d);
    auto s = s_matrices(c);
    auto sh = s_matrices(h);
    auto ap = matrix_powers(c.A, f, 2 * d);
    auto atp = matrix_powers(c.A.transposed(), f, 2 * d);
    auto ahtp = matrix_powers(h.A.transposed(), f, 2 * d);

    bool conv = true;
    for (int m = 0; m <= 4 * d && conv; ++m) {
        FqMatrix acc = fq_zeros(f, du, du);
        for (int i = std::max(0, m - 2 * d); i <= std::min(m, 2 * d); ++i)
            acc = acc + sh[i] * s[m - i].transposed();
        conv = is_zero_matrix(acc);
    }
    add("s-convolution-vanishes", conv, "a convolution slice of the S-families is nonzero");

    FqMatrix crec = fq_zeros(f, du, static_cast<std::size_t>(c.n));
    FqMatrix chrec = fq_zeros(f, du, static_cast<std::size_t>(h.n));
    for (int i = 1; i <= 2 * d; ++i) {
        crec = crec + atp[i - 1] * s[i];
        chrec = chrec + ahtp[i - 1] * sh[i];
    }
    add("primal-coefficient-rows-reconstruct", crec == c.C, "S-family does not rebuild C");
    add("dual-coefficient-rows-reconstruct", chrec == h.C, "S-family does not rebuild the dual C");

    FqMatrix gram = fq_zeros(f, du, du);
    FqMatrix gramh = fq_zeros(f, du, du);
    auto ahp = matrix_powers(h.A, f, 2 * d);
    for (int i = 1; i <= 2 * d; ++i) {
        FqMatrix ba = c.B * ap[i - 1];
        FqMatrix bah = h.B * ahp[i - 1];
        gram = gram + ba.transposed() * ba;
        gramh = gramh + bah.transposed() * bah;
    }
    add("primal-shift-gram-identity", gram == fq_identity(f, du), "reachability grams do not resolve the identity");
    add("dual-shift-gram-identity", gramh == fq_identity(f, du), "reachability grams do not resolve the identity");

    FqMatrix cross = fq_zeros(f, du, du);
    for (int m = 2; m <= 2 * d; ++m)
        for (int i = 1; i <= m - 1; ++i) {
            if (i >= static_cast<int>(sh.size()) || m - i >= static_cast<int>(s.size())) continue;
            cross = cross + ahtp[i - 1] * sh[i] * s[m - i].transposed() * ap[m - i - 1];
        }
    add("cross-gram-expansion", cross == h.C * c.C.transposed(), "diagonal S-sum does not expand the cross gram");

    NPair np;
    bool np_ok = true;
    try {
        np = n_matrices(c, h);
        add("n-matrices-internal-assertions", true);
    } catch (const Error& e) {
        np_ok = false;
        add("n-matrices-internal-assertions", false, e.what());
    }

    SubspacePair sp = transition_spaces(c);
    SubspacePair sph = transition_spaces(h);
    Subspace whole = Subspace::span(f, fq_identity(f, 2 * du));
    add("primal-transition-span-dim", static_cast<long>(sp.delta_space.dim()) == d + c.r, "dim != delta + r");
    add("dual-transition-span-dim", static_cast<long>(sph.delta_space.dim()) == d + h.r, "dim != delta + dual r");
    add("primal-zero-output-span-dim", static_cast<long>(sp.omega.dim()) == d - h.r, "dim != delta - dual r");
    add("dual-zero-output-span-dim", static_cast<long>(sph.omega.dim()) == d - c.r, "dim != delta - r");
    add("primal-transition-orthogonal-form", sp.delta_perp == sp.delta_space.orthogonal_complement(),
        "parametrized orthogonal differs from the computed complement");
    add("dual-transition-orthogonal-form", sph.delta_perp == sph.delta_space.orthogonal_complement(),
        "parametrized orthogonal differs from the computed complement");
    add("primal-pair-space-splits", is_direct_sum(sp.delta_space, sp.delta_minus, whole), "transition span plus shifted states is not everything");
    add("dual-pair-space-splits", is_direct_sum(sph.delta_space, sph.delta_minus, whole), "transition span plus shifted states is not everything");
    add("primal-zero-output-via-inputs", sp.omega == omega_via_inputs(c), "the two zero-output constructions differ");
    add("dual-zero-output-via-inputs", sph.omega == omega_via_inputs(h), "the two zero-output constructions differ");

    if (np_ok) {
        FqMatrix nht = np.n_hat.transposed();
        add("n-plus-dual-n-transpose", np.n + nht == -(h.C * c.C.transposed()), "coupling matrices do not cancel the cross gram");
        add("cross-terms-balance",
            h.C * s[0].transposed() + sh[0] * c.C.transposed() == np.n * c.A + h.A.transposed() * nht,
            "first-order cross terms unbalanced");
        add("n-shift-projection-fixed", np.n * c.A * c.A.transposed() == np.n, "coupling matrix moves under the shift projector");

        FqMatrix z = fq_zeros(f, du, du);
        FqMatrix m0 = four_block(h.C * c.C.transposed(), h.C * c.E.transposed() * c.B, sh[0] * c.C.transposed(), z);
        FqMatrix m1 = four_block(np.n, -(np.n * c.A), z, z);
        FqMatrix m2 = four_block(nht, z, -(h.A.transposed() * nht), z);
        FqMatrix msum = m0 + m1 + m2;
        FqMatrix p = h.C * c.E.transposed() * c.B - np.n * c.A;
        add("block-sum-is-skew-pair", msum == four_block(z, p, -p, z), "block sum is not [0 P; -P 0]");
        add("p-invertible", is_invertible(p, f), "state transformation is singular");

        Subspace km0 = Subspace::span(f, left_kernel_basis(m0, f));
        Subspace km1 = Subspace::span(f, left_kernel_basis(m1, f));
        Subspace km2 = Subspace::span(f, left_kernel_basis(m2, f));
        Subspace im0 = Subspace::span(f, m0);
        Subspace im1 = Subspace::span(f, m1);
        Subspace im2 = Subspace::span(f, m2);
        Subspace dstar = intersect(km1, sph.delta_space);
        Subspace om_perp = sp.omega.orthogonal_complement();

        add("m0-kernel-splits", is_direct_sum(sph.omega, sph.delta_minus, km0), "kernel of the gram block is not the expected direct sum");
        add("m1-kernel-splits", is_direct_sum(dstar, sph.delta_minus, km1), "kernel of the coupling block is not the expected direct sum");
        add("m2-kernel-is-dual-transition-span",
            km2 == sph.delta_space && is_direct_sum(dstar, sph.omega, sph.delta_space),
            "kernel of the transposed coupling block is not the dual transition span");
        add("m1-image-is-transition-orthogonal",
            im1 == sp.delta_perp && static_cast<long>(im1.dim()) == d - c.r,
            "image of the coupling block is not the transition orthogonal");
        add("m1-image-in-transition-orthogonal", sp.delta_perp.contains(im1), "coupling block image leaves the transition orthogonal");
        add("dual-transition-span-in-m2-kernel", km2.contains(sph.delta_space), "dual transition span escapes the kernel");
        add("m0-image-in-omega-orthogonal", om_perp.contains(im0), "gram block image leaves the zero-output orthogonal");
        add("omega-orthogonal-splits", is_direct_sum(im0, sp.delta_perp, om_perp), "zero-output orthogonal is not the expected direct sum");
        add("pair-space-splits-off-m2-image", is_direct_sum(om_perp, im2, whole), "pair space does not split off the transposed block image");
        add("pair-space-triple-split",
            is_direct_sum(dstar, sph.omega, sph.delta_space) && is_direct_sum(sph.delta_space, sph.delta_minus, whole),
            "triple decomposition of the pair space failed");
    }

    Subspace cconst = constant_subcode(c);
    Subspace chconst = constant_subcode(h);
    Subspace ccoeff = coefficient_space(c);
    Subspace chcoeff = coefficient_space(h);
    add("primal-constant-subcode-dim", static_cast<long>(cconst.dim()) == c.k - c.r, "dim != k - r");
    add("dual-constant-subcode-dim", static_cast<long>(chconst.dim()) == h.k - h.r, "dim != dual k - dual r");
    add("primal-coefficient-space-dim", static_cast<long>(ccoeff.dim()) == c.k + h.r, "dim != k + dual r");
    add("dual-coefficient-space-dim", static_cast<long>(chcoeff.dim()) == h.k + c.r, "dim != dual k + r");
    add("coefficient-constant-duality",
        ccoeff.orthogonal_complement() == chconst && chcoeff.orthogonal_complement() == cconst,
        "coefficient spaces and constant subcodes are not orthogonal pairs");

    WPolyQ lhs_p = rat_pow(Rat(f.q()), c.k + h.r) * to_rational(weight_enumerator_of_span(chconst));
    WPolyQ rhs_p = mw_transform(to_rational(weight_enumerator_of_span(ccoeff)), c.n, f.q());
    add("primal-subcode-block-transform", lhs_p == rhs_p, "block transform fails on the coefficient space");
    WPolyQ lhs_d = rat_pow(Rat(f.q()), h.k + c.r) * to_rational(weight_enumerator_of_span(cconst));
    WPolyQ rhs_d = mw_transform(to_rational(weight_enumerator_of_span(chcoeff)), c.n, f.q());
    add("dual-subcode-block-transform", lhs_d == rhs_d, "block transform fails on the dual coefficient space");

    SigmaReport sr = sigma_report(c, h);
    SigmaReport srh = sigma_report(h, c);
    add("primal-sigma-map", sr.pass, "zero-output propagation map misbehaves");
    add("dual-sigma-map", srh.pass, "zero-output propagation map misbehaves");
    return out;
}

SigmaReport sigma_report(const Ccf& c, const Ccf& h) {
    const Field& f = *c.field;
    std::size_t d = static_cast<std::size_t>(c.delta);
    SigmaReport rep;
    FqMatrix kermat = c.C * h.E.transposed() * h.B;
    rep.rank = static_cast<long>(rank(kermat));
    Subspace domain = Subspace::span(f, left_kernel_basis(kermat, f));
    rep.dim_domain = static_cast<long>(domain.dim());
    rep.rank_matches = rep.rank == h.r && rep.dim_domain == c.delta - h.r;

    SubspacePair sp = transition_spaces(c);
    const FqMatrix& ob = sp.omega.basis();
    FqMatrix ox = ob.block(0, 0, ob.rows(), d);
    FqMatrix oy = ob.block(0, d, ob.rows(), d);
    rep.well_defined = rank(ox) == ob.rows();
    rep.domain_matches = Subspace::span(f, ox) == domain;
    if (!rep.well_defined || !rep.domain_matches) return rep;

    auto sigma = [&](const FqVector& x) -> std::optional<FqVector> {
        auto lam = solve_left(ox, x, f);
        if (!lam) return std::nullopt;
        return vec_mat(*lam, oy);
    };

    const FqMatrix& kb = domain.basis();
    FqMatrix image(kb.rows(), d, f.zero());
    bool defined = true;
    for (std::size_t i = 0; i < kb.rows() && defined; ++i) {
        auto y = sigma(kb.row(i));
        if (!y)
            defined = false;
        else
            image.set_row(i, *y);
    }
    rep.injective = defined && rank(image) == kb.rows();

    long long cap = 1;
    for (int i = 0; i < c.delta; ++i) cap *= f.q();
    rep.orbits_escape = true;
    for (const auto& start : domain.enumerate()) {
        FqVector cur = start;
        long steps = 0;
        while (true) {
            bool zero = true;
            for (const auto& e : cur) zero = zero && e.is_zero();
            if (zero || !domain.contains(cur)) break;
            if (steps >= cap) {
                rep.orbits_escape = false;
                break;
            }
            auto nxt = sigma(cur);
            if (!nxt) break;
            cur = *nxt;
            ++steps;
        }
        rep.max_orbit_steps = std::max(rep.max_orbit_steps, steps);
        if (!rep.orbits_escape) break;
    }
    rep.pass = rep.rank_matches && rep.well_defined && rep.domain_matches && rep.injective && rep.orbits_escape;
    return rep;
}

MwCertificate verify_macwilliams(const PolyMatrix& g, const PolyMatrix* dual) {
    Ccf c = build_ccf(g);
    const Field& f = *c.field;
    PolyMatrix ghat;
    if (dual) {
        if (dual->rows() != static_cast<std::size_t>(c.n - c.k) || dual->cols() != static_cast<std::size_t>(c.n))
            throw UsageError("dual encoder must be (n-k) x n");
        if (!(g * dual->transposed() == poly_zeros(g.rows(), dual->rows())))
            throw UsageError("dual encoder is not orthogonal to the primal one");
        if (!is_basic(*dual)) throw UsageError("dual encoder is not basic");
        if (!is_minimal(*dual)) throw UsageError("dual encoder is not minimal");
        ghat = *dual;
    } else {
        ghat = dual_encoder(c.G);
    }
    Ccf h = build_ccf(ghat);

    MwCertificate cert;
    cert.q = f.q();
    cert.n = c.n;
    cert.k = c.k;
    cert.delta = c.delta;
    try {
        validate_ccf(c);
        validate_ccf(h);
        if (h.delta != c.delta) throw InvariantViolation("dual realization has a different state dimension");
        PBundle pb = p_bundle(c, h);
        cert.n_mat = pb.n;
        cert.n_hat = pb.n_hat;
        cert.p = pb.p;
        WamZ lam = compute_wam(c);
        WamZ lamhat = compute_wam(h);
        validate_wam(lam, c);
        validate_wam(lamhat, h);
        WamC gamma = conjugate_wam(lam);
        WamC phi = transformed_dual_candidate(gamma, c.n, c.k);
        WamMatchReport rep = match_via_state_map(lamhat, phi, pb.p);
        cert.entries_checked = rep.checked;
        cert.mismatches = rep.mismatches;
        cert.first_mismatch = rep.first;
        cert.pass = rep.pass;
    } catch (const InvariantViolation& e) {
        cert.pass = false;
        cert.failure = e.what();
    }
    return cert;
}

ReversalCcf reversal_ccf(const Ccf& c) {
    const Field& f = *c.field;
    std::size_t d = static_cast<std::size_t>(c.delta);
    std::size_t k = static_cast<std::size_t>(c.k);
    FqMatrix r = fq_zeros(f, d, d);
    std::size_t off = 0;
    for (long i = 0; i < c.r; ++i) {
        std::size_t di = static_cast<std::size_t>(c.indices[i]);
        for (std::size_t t = 0; t < di; ++t) r(off + t, off + di - 1 - t) = f.one();
        off += di;
    }
    FqMatrix rat = r * c.A.transposed();
    FqMatrix rbt = r * c.B.transposed();
    FqMatrix ibbt = fq_identity(f, k) - c.B * c.B.transposed();
    FqMatrix cprime = rat * c.C + rbt * c.E;
    FqMatrix eprime = c.B * r * c.C + ibbt * c.E;

    Ccf rc = build_ccf(reciprocal_matrix(c.G));
    if (!(rc.A == c.A && rc.B == c.B))
        throw InvariantViolation("reversal realization does not share the state maps");
    if (!(rc.C == cprime && rc.E == eprime))
        throw InvariantViolation("closed-form reversal rows disagree with the rebuilt realization");

    FqMatrix l = four_block(rat, rbt, c.B * r, ibbt);
    if (!(l * l.transposed() == fq_identity(f, d + k)))
        throw InvariantViolation("reversal map is not orthogonal");
    if (!(r == r.transposed()) || !(r * r == fq_identity(f, d)) || !(rat * r == c.A))
        throw InvariantViolation("anti-diagonal involution identities failed");
    return ReversalCcf{std::move(rc), std::move(r), std::move(l)};
}

bool reversal_wam_check(const WamZ& lam, const WamZ& lam_rev, const FqMatrix& r) {
    if (lam.field != lam_rev.field || lam.delta != lam_rev.delta)
        throw UsageError("grids are not comparable");
    StateIndexer states(*lam.field, lam.delta, true);
    std::vector<long long> image(states.size());
    for (long long i = 0; i < states.size(); ++i) image[i] = states.index(vec_mat(states.vector_at(i), r));
    for (long long x = 0; x < states.size(); ++x)
        for (long long y = 0; y < states.size(); ++y)
            if (!(lam_rev.entries(x, y) == lam.entries(image[y], image[x]))) return false;
    return true;
}

SequenceCertificate verify_sequence_macwilliams(const PolyMatrix& g) {
    Ccf c = build_ccf(g);
    const Field& f = *c.field;
    SequenceCertificate cert;
    cert.q = f.q();
    cert.n = c.n;
    cert.k = c.k;
    cert.delta = c.delta;
    try {
        ReversalCcf rev = reversal_ccf(c);
        cert.r = rev.r;
        WamZ lam = compute_wam(c);
        WamZ lamrev = compute_wam(rev.ccf);
        cert.reversal_transpose_ok = reversal_wam_check(lam, lamrev, rev.r);
        if (!cert.reversal_transpose_ok)
            throw InvariantViolation("reversal transposition identity failed");

        PolyMatrix gtilde = reciprocal_matrix(dual_encoder(c.G));
        if (!same_row_module(gtilde, dual_encoder(reciprocal_matrix(c.G))))
            throw InvariantViolation("the two sequence-dual constructions generate different modules");
        Ccf t = build_ccf(gtilde);
        PBundle pb = p_bundle(rev.ccf, t);
        cert.p_tilde = pb.p;
        FqMatrix qmat = rev.r * inverse(pb.p, f).value();
        cert.q_mat = qmat;

        WamZ lamt = compute_wam(t);
        WamC gamma = conjugate_wam_untransposed(lam);
        WamC phi = transformed_dual_candidate(gamma, c.n, c.k);
        WamMatchReport rep = match_via_state_map(lamt, phi, inverse(qmat, f).value());
        cert.entries_checked = rep.checked;
        cert.mismatches = rep.mismatches;
        cert.first_mismatch = rep.first;
        cert.pass = rep.pass;
    } catch (const InvariantViolation& e) {
        cert.pass = false;
        cert.failure = e.what();
    }
    return cert;
}

} // namespace ccode
