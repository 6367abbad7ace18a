// Acceptance gate: eight end-to-end criteria, one PASS/FAIL line each.
// Every comparison below is exact equality in Z, Q, or Q(zeta); there are no
// tolerances anywhere.  Runtime budgets are measured and enforced in code.
// The exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <vector>

#include "ccode/duality.hpp"
#include "ccode/random_codes.hpp"
#include "helpers.hpp"

using namespace ccode;
using tst::demo_dual;
using tst::demo_encoder;
using tst::wz;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Frozen 9x9 reference grids of the demo pair.  Pattern value 0 is a zero
// entry; for the primal grid 1..4 select one of four enumerators, for the
// dual grid value v is the monomial W^{v-1}.
const int kGrid[9][9] = {
    {1, 0, 0, 4, 0, 0, 4, 0, 0},
    {2, 0, 0, 4, 0, 0, 3, 0, 0},
    {2, 0, 0, 3, 0, 0, 4, 0, 0},
    {0, 3, 0, 0, 2, 0, 0, 4, 0},
    {0, 4, 0, 0, 2, 0, 0, 3, 0},
    {0, 4, 0, 0, 1, 0, 0, 4, 0},
    {0, 0, 3, 0, 0, 4, 0, 0, 2},
    {0, 0, 4, 0, 0, 4, 0, 0, 1},
    {0, 0, 4, 0, 0, 3, 0, 0, 2},
};

// Frozen conjugated grid: pattern with four rational polynomials f1..f4.
const int kConjGrid[9][9] = {
    {1, 0, 0, 0, 4, 0, 0, 0, 4},
    {0, 0, 4, 1, 0, 0, 0, 4, 0},
    {0, 4, 0, 0, 0, 4, 1, 0, 0},
    {0, 0, 3, 2, 0, 0, 0, 4, 0},
    {0, 4, 0, 0, 0, 3, 2, 0, 0},
    {2, 0, 0, 0, 4, 0, 0, 0, 3},
    {0, 3, 0, 0, 0, 4, 2, 0, 0},
    {2, 0, 0, 0, 3, 0, 0, 0, 4},
    {0, 0, 4, 2, 0, 0, 0, 3, 0},
};

Rat fr(long a, long b) { return Rat(a) / Rat(b); }

std::vector<WPolyQ> conj_values() {
    return {
        WPolyQ(),
        WPolyQ({fr(1, 3), fr(2, 1), fr(4, 1), fr(8, 3)}),
        WPolyQ({fr(1, 3), fr(1, 1), fr(0, 1), fr(-4, 3)}),
        WPolyQ({fr(1, 3), fr(0, 1), fr(-1, 1), fr(2, 3)}),
        WPolyQ({fr(1, 3), fr(-1, 1), fr(1, 1), fr(-1, 3)}),
    };
}

// 1: the demo grid, all 81 entries against the frozen reference, under 1s.
bool demo_primal_grid(double& secs) {
    auto t0 = Clock::now();
    Ccf c = build_ccf(demo_encoder());
    WamZ w = compute_wam(c);
    bool ok = w.size() == 9;
    WPolyZ vals[5] = {WPolyZ(), wz({1, 0, 2}), wz({0, 2, 1}), wz({0, 1, 0, 2}), wz({0, 0, 2, 1})};
    for (int i = 0; i < 9 && ok; ++i)
        for (int j = 0; j < 9 && ok; ++j) ok = w.entries(i, j) == vals[kGrid[i][j]];
    // the worked transition (1,2) -> (0,1) in isolation
    ok = ok && w.entries(5, 1) == wz({0, 0, 2, 1});
    secs = since(t0);
    return ok && secs < 1.0;
}

// 2: the dual demo grid, all 81 entries monomial {1, W, W^2, W^3}, under 1s.
bool demo_dual_grid(double& secs) {
    auto t0 = Clock::now();
    Ccf c = build_ccf(demo_dual());
    WamZ w = compute_wam(c);
    bool ok = w.size() == 9;
    for (int i = 0; i < 9 && ok; ++i)
        for (int j = 0; j < 9 && ok; ++j) {
            int v = kGrid[i][j];
            ok = w.entries(i, j) == (v ? WPolyZ::monomial(1, v - 1) : WPolyZ());
        }
    secs = since(t0);
    return ok && secs < 1.0;
}

// 3: the intermediate witnesses on the demo pair: the conjugated grid with
// its four rational values, their transform images q^{-2} H(f_i) = W^{i-1},
// the coupling matrices, the state map, and the entrywise relabeled match.
bool demo_intermediates(double& secs) {
    auto t0 = Clock::now();
    Ccf c = build_ccf(demo_encoder());
    Ccf h = build_ccf(demo_dual());
    WamZ lam = compute_wam(c);
    WamZ dual = compute_wam(h);
    const Field& f = *c.field;

    WamC gamma = conjugate_wam(lam);
    std::vector<WPolyQ> vals = conj_values();
    bool ok = gamma.size() == 9;
    for (int i = 0; i < 9 && ok; ++i)
        for (int j = 0; j < 9 && ok; ++j) {
            const WPolyC& e = gamma.entries(i, j);
            int v = kConjGrid[i][j];
            if (v == 0) {
                ok = e.is_zero();
                continue;
            }
            ok = e.deg() == vals[v].deg();
            for (int t = 0; t <= e.deg() && ok; ++t)
                ok = e.coeff(t).is_rational() && e.coeff(t).rational_value() == vals[v].coeff(t);
        }

    for (int i = 1; i <= 4 && ok; ++i) {
        WPolyQ image = mw_transform(vals[i], 3, 3);
        ok = fr(1, 9) * image == WPolyQ::monomial(Rat(1), i - 1);
    }

    NPair np = n_matrices(c, h);
    ok = ok && np.n == tst::M(f, {{2, 0}, {1, 0}});
    ok = ok && np.n_hat == tst::M(f, {{1, 0}, {2, 0}});
    FqMatrix p = p_matrix(c, h);
    ok = ok && p == tst::M(f, {{1, 1}, {1, 2}});

    WamC phi = transformed_dual_candidate(gamma, 3, 2);
    WamMatchReport rep = match_via_state_map(dual, phi, p);
    ok = ok && rep.pass && rep.checked == 81 && rep.mismatches == 0;
    secs = since(t0);
    return ok;
}

// 4: randomized degree-zero codes; the full pipeline against a brute-force
// scan of all q^n words for the dual code's enumerator.
bool random_block_codes(double& secs) {
    auto t0 = Clock::now();
    Rng rng(411);
    struct Shape {
        long p, n, k;
    };
    const Shape shapes[] = {
        {2, 6, 3}, {2, 8, 4}, {2, 10, 5}, {2, 13, 6}, {2, 7, 2},
        {3, 4, 2}, {3, 5, 3}, {3, 6, 2},  {3, 8, 4},  {3, 3, 1},
    };
    bool ok = true;
    for (const Shape& sh : shapes) {
        const Field& f = Field::get(sh.p, 1);
        FqMatrix m = random_full_rank_matrix(f, sh.k, sh.n, rng);
        PolyMatrix g = lift(m);

        MwCertificate cert = verify_macwilliams(g);
        ok = ok && cert.pass && cert.delta == 0 && cert.entries_checked == 1;
        ok = ok && block_macwilliams_check(f, m, true);

        std::vector<FqVector> dual_words;
        StateIndexer words(f, sh.n);
        FqMatrix mt = m.transposed();
        for (long long i = 0; i < words.size(); ++i) {
            FqVector w = words.vector_at(i);
            if (hamming_weight(vec_mat(w, mt)) == 0) dual_words.push_back(w);
        }
        WamZ dw = compute_wam(build_ccf(dual_encoder(g)));
        ok = ok && dw.size() == 1 && dw.entries(0, 0) == weight_enumerator(dual_words);
        if (!ok) break;
    }
    secs = since(t0);
    return ok;
}

// 5: at least 100 randomized encoders; realization checks, the full named
// invariant report, invertibility of the state map, and the entrywise
// identity, within 120s.
bool random_invariants(double& secs, int& count) {
    auto t0 = Clock::now();
    Rng rng(520);
    struct Shape {
        long p, n, k;
        int delta;
    };
    const Shape shapes[] = {
        {2, 3, 1, 2}, {2, 3, 2, 2}, {2, 4, 2, 3}, {2, 5, 3, 3}, {2, 4, 1, 4},
        {2, 5, 2, 5}, {2, 5, 4, 2}, {2, 3, 1, 6}, {3, 3, 2, 2}, {3, 3, 1, 2},
        {3, 4, 2, 3}, {3, 5, 3, 3}, {3, 4, 3, 4},
    };
    bool ok = true;
    count = 0;
    for (const Shape& sh : shapes) {
        const Field& f = Field::get(sh.p, 1);
        for (int rep = 0; rep < 8 && ok; ++rep) {
            PolyMatrix g = random_minimal_basic_encoder(f, sh.n, sh.k, sh.delta, rng);
            Ccf c = build_ccf(g);
            validate_ccf(c);
            Ccf h = build_ccf(dual_encoder(g));
            validate_ccf(h);
            for (const CheckResult& r : duality_invariant_report(c, h)) ok = ok && r.pass;
            ok = ok && sigma_report(c, h).pass && sigma_report(h, c).pass;
            MwCertificate cert = verify_macwilliams(g);
            ok = ok && cert.pass && is_invertible(cert.p, f);
            ++count;
        }
        if (!ok) break;
    }
    secs = since(t0);
    return ok && count >= 100 && secs < 120.0;
}

// 6: the reversal relation rev(X, Y) == primal(Y R, X R) and the sequence
// identity, on the demo code and 25 randomized codes, within 60s.
bool sequence_duality(double& secs, int& count) {
    auto t0 = Clock::now();
    Rng rng(603);
    std::vector<PolyMatrix> codes;
    codes.push_back(demo_encoder());
    struct Shape {
        long p, s, n, k;
        int delta;
    };
    const Shape shapes[] = {
        {2, 1, 3, 2, 2}, {3, 1, 3, 2, 2}, {2, 1, 4, 2, 3}, {3, 1, 3, 1, 2}, {2, 2, 3, 2, 1},
    };
    for (const Shape& sh : shapes) {
        const Field& f = Field::get(sh.p, sh.s);
        for (int rep = 0; rep < 5; ++rep)
            codes.push_back(random_minimal_basic_encoder(f, sh.n, sh.k, sh.delta, rng));
    }
    bool ok = true;
    count = 0;
    for (const PolyMatrix& g : codes) {
        Ccf c = build_ccf(g);
        ReversalCcf rev = reversal_ccf(c);
        ok = ok && reversal_wam_check(compute_wam(c), compute_wam(rev.ccf), rev.r);
        SequenceCertificate cert = verify_sequence_macwilliams(g);
        ok = ok && cert.pass && cert.reversal_transpose_ok;
        ++count;
        if (!ok) break;
    }
    secs = since(t0);
    return ok && count == 26 && secs < 60.0;
}

// 7: pairs of minimal encoders of one code differing by a constant
// invertible left factor; their grids must be conjugate under a state map
// found by exhaustive search, within 60s.
bool encoder_invariance(double& secs) {
    auto t0 = Clock::now();
    Rng rng(77);
    struct Shape {
        long p, n, k;
        int delta;
    };
    const Shape shapes[] = {
        {2, 3, 2, 2}, {2, 3, 1, 2}, {2, 4, 2, 1}, {3, 3, 2, 2}, {3, 3, 2, 1},
    };
    bool ok = true;
    for (const Shape& sh : shapes) {
        const Field& f = Field::get(sh.p, 1);
        for (int rep = 0; rep < 2 && ok; ++rep) {
            PolyMatrix g = random_minimal_basic_encoder(f, sh.n, sh.k, sh.delta, rng);
            std::vector<int> degs = row_degrees(g);
            std::sort(degs.begin(), degs.end());

            PolyMatrix g2 = g;
            bool built = false;
            for (int tries = 0; tries < 200 && !built; ++tries) {
                FqMatrix u = random_full_rank_matrix(f, sh.k, sh.k, rng);
                PolyMatrix cand = lift(u) * g;
                std::vector<int> cd = row_degrees(cand);
                std::sort(cd.begin(), cd.end());
                if (cd == degs && is_basic(cand) && is_minimal(cand)) {
                    g2 = cand;
                    built = true;
                }
            }
            ok = ok && built && same_row_module(g, g2);

            WamZ w1 = compute_wam(build_ccf(g));
            WamZ w2 = compute_wam(build_ccf(g2));
            auto p = wams_equivalent(w2, w1);
            ok = ok && p.has_value();
            if (p) ok = ok && conjugate_by_state_iso(w1, *p).entries == w2.entries;
        }
        if (!ok) break;
    }
    secs = since(t0);
    return ok && secs < 60.0;
}

// 8: K conj(K)^T == q^delta I for every prime power q and memory delta with
// q^delta <= 256, checked by exact exponent-bucket counting.
bool character_unitary(int& combos) {
    const long primes[] = {2,   3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,  43,
                           47,  53,  59,  61,  67,  71,  73,  79,  83,  89,  97,  101, 103, 107,
                           109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181,
                           191, 193, 197, 199, 211, 223, 227, 229, 233, 239, 241, 251};
    bool ok = true;
    combos = 0;
    std::vector<long long> counts;
    for (long p : primes) {
        for (long s = 1, q = p; q <= 256; ++s, q *= p) {
            const Field& f = Field::get(p, s);
            long long states = 1;
            for (int delta = 1; states * q <= 256; ++delta) {
                states *= q;
                CharacterMatrix km = character_matrix(f, delta);
                if (km.size != states) {
                    ok = false;
                    break;
                }
                for (long long i = 0; i < states && ok; ++i)
                    for (long long j = 0; j < states && ok; ++j) {
                        counts.assign(p, 0);
                        for (long long t = 0; t < states; ++t)
                            ++counts[(km.exp_at(i, t) + p - km.exp_at(j, t)) % p];
                        if (i == j) {
                            ok = counts[0] == states;
                        } else {
                            for (long e = 0; e < p && ok; ++e) ok = counts[e] == states / p;
                        }
                    }
                ++combos;
            }
            if (!ok) break;
        }
        if (!ok) break;
    }
    return ok;
}

int report(bool pass, const char* line) {
    std::printf("%s: %s\n", pass ? "PASS" : "FAIL", line);
    return pass ? 0 : 1;
}

} // namespace

int main() {
    int failures = 0;
    char buf[256];
    double secs = 0;
    int count = 0;

    bool ok = demo_primal_grid(secs);
    std::snprintf(buf, sizeof buf, "demo grid matches all 81 frozen entries in %.2fs (limit 1s)", secs);
    failures += report(ok, buf);

    ok = demo_dual_grid(secs);
    std::snprintf(buf, sizeof buf, "demo dual grid matches all 81 frozen monomial entries in %.2fs (limit 1s)", secs);
    failures += report(ok, buf);

    ok = demo_intermediates(secs);
    std::snprintf(buf, sizeof buf,
                  "demo intermediates: conjugated grid, transform images, coupling matrices, "
                  "state map, relabeled match of all 81 entries (%.2fs)",
                  secs);
    failures += report(ok, buf);

    ok = random_block_codes(secs);
    std::snprintf(buf, sizeof buf,
                  "10 random degree-zero codes: pipeline agrees with brute-force dual enumeration (%.2fs)", secs);
    failures += report(ok, buf);

    ok = random_invariants(secs, count);
    std::snprintf(buf, sizeof buf,
                  "%d random encoders: realization checks, invariant report, state map, "
                  "entrywise identity in %.1fs (limit 120s)",
                  count, secs);
    failures += report(ok, buf);

    ok = sequence_duality(secs, count);
    std::snprintf(buf, sizeof buf,
                  "reversal grid relation and sequence identity for %d codes in %.1fs (limit 60s)", count, secs);
    failures += report(ok, buf);

    ok = encoder_invariance(secs);
    std::snprintf(buf, sizeof buf,
                  "10 encoder pairs under constant invertible left factors: conjugate grids "
                  "with recovered state maps in %.1fs (limit 60s)",
                  secs);
    failures += report(ok, buf);

    ok = character_unitary(count);
    std::snprintf(buf, sizeof buf,
                  "character kernel times its conjugate transpose is q^delta * I for all %d "
                  "field/memory combinations with at most 256 states",
                  count);
    failures += report(ok, buf);

    return failures;
}
