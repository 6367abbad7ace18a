#include "ccode/poly_matrix.hpp"

#include <algorithm>
#include <map>

namespace ccode {

PolyMatrix poly_zeros(std::size_t rows, std::size_t cols) { return PolyMatrix(rows, cols); }

PolyMatrix poly_identity(const Field& f, std::size_t n) {
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly(f.one());
    return m;
}

PolyMatrix lift(const FqMatrix& m) {
    PolyMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Poly(m(i, j));
    return r;
}

const Field& matrix_field(const PolyMatrix& g) {
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j)
            if (const Field* f = g(i, j).field()) return *f;
    throw UsageError("cannot determine the field of an all-zero matrix");
}

Matrix<Fq> eval_at(const PolyMatrix& g, const Fq& x) {
    Matrix<Fq> r(g.rows(), g.cols());
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) r(i, j) = g(i, j).eval(x);
    return r;
}

Matrix<Fq> coefficient_slice(const PolyMatrix& g, int d, const Field& f) {
    Matrix<Fq> r(g.rows(), g.cols(), f.zero());
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) {
            Fq c = g(i, j).coeff(d);
            if (!c.is_zero()) r(i, j) = c;
        }
    return r;
}

int max_entry_degree(const PolyMatrix& g) {
    int d = -1;
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) d = std::max(d, g(i, j).deg());
    return d;
}

std::vector<int> row_degrees(const PolyMatrix& g) {
    std::vector<int> d(g.rows(), -1);
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) d[i] = std::max(d[i], g(i, j).deg());
    return d;
}

int external_degree(const PolyMatrix& g) {
    int s = 0;
    for (int d : row_degrees(g)) s += std::max(d, 0);
    return s;
}

Matrix<Fq> highest_coefficient_matrix(const PolyMatrix& g, const Field& f) {
    auto degs = row_degrees(g);
    Matrix<Fq> h(g.rows(), g.cols(), f.zero());
    for (std::size_t i = 0; i < g.rows(); ++i) {
        if (degs[i] < 0) continue;
        for (std::size_t j = 0; j < g.cols(); ++j) {
            Fq c = g(i, j).coeff(degs[i]);
            if (!c.is_zero()) h(i, j) = c;
        }
    }
    return h;
}

Poly poly_determinant(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw UsageError("determinant of non-square polynomial matrix");
    std::size_t n = m.rows();
    if (n == 0) throw UsageError("determinant of an empty matrix is field-ambiguous");
    const Field* fp = nullptr;
    for (std::size_t i = 0; i < n && !fp; ++i)
        for (std::size_t j = 0; j < n && !fp; ++j) fp = m(i, j).field();
    if (!fp) return Poly(); // all-zero matrix
    const Field& f = *fp;
    // memo[mask] = det of rows (n - popcount(mask))..n-1 on the columns in mask.
    std::map<unsigned, Poly> memo;
    memo[0] = Poly(f.one());
    unsigned full = (1u << n) - 1;
    // Iterate masks in increasing popcount via plain increasing order (a mask's
    // submasks are smaller numbers, so they are already computed).
    for (unsigned mask = 1; mask <= full; ++mask) {
        int c = __builtin_popcount(mask);
        std::size_t row = n - static_cast<std::size_t>(c);
        Poly acc;
        int sign = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (!(mask & (1u << j))) continue;
            const Poly& e = m(row, j);
            if (!e.is_zero()) {
                Poly sub = memo.at(mask & ~(1u << j));
                Poly term = e * sub;
                acc = (sign % 2 == 0) ? acc + term : acc - term;
            }
            ++sign;
        }
        memo[mask] = acc;
    }
    return memo.at(full);
}

std::vector<Poly> full_size_minors(const PolyMatrix& g) {
    std::size_t k = g.rows(), n = g.cols();
    if (k > n) throw UsageError("full-size minors need rows <= cols");
    if (k == 0) throw UsageError("full-size minors of an empty matrix");
    std::vector<Poly> out;
    std::vector<std::size_t> cols(k);
    for (std::size_t i = 0; i < k; ++i) cols[i] = i;
    while (true) {
        PolyMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) sub(i, j) = g(i, cols[j]);
        out.push_back(poly_determinant(sub));
        // next combination, lexicographic
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (cols[i] != i + n - k) {
                ++cols[i];
                for (std::size_t j = i + 1; j < k; ++j) cols[j] = cols[j - 1] + 1;
                break;
            }
            if (i == 0) return out;
        }
    }
}

int code_degree(const PolyMatrix& g) {
    int d = -1;
    for (const Poly& m : full_size_minors(g)) d = std::max(d, m.deg());
    if (d < 0) throw StructuralError("rank-deficient generator: every full-size minor vanishes");
    return d;
}

Poly minors_gcd(const PolyMatrix& g) {
    Poly acc;
    for (const Poly& m : full_size_minors(g)) {
        acc = poly_gcd(acc, m);
        if (acc.deg() == 0) break;
    }
    return acc;
}

bool is_basic(const PolyMatrix& g) {
    if (g.rows() == 0 || g.rows() > g.cols()) return false;
    Poly d = minors_gcd(g);
    return d.deg() == 0;
}

bool is_minimal(const PolyMatrix& g) { return external_degree(g) == code_degree(g); }

PolyMatrix minimal_reduction(const PolyMatrix& g) {
    if (!is_basic(g)) throw PreconditionError("minimal_reduction requires a basic encoder");
    const Field& f = matrix_field(g);
    PolyMatrix m = g;
    while (true) {
        auto degs = row_degrees(m);
        Matrix<Fq> h = highest_coefficient_matrix(m, f);
        FqMatrix ker = left_kernel_basis(h, f);
        if (ker.rows() == 0) break;
        // Cancel the highest-degree row involved in the first kernel relation.
        FqVector c = ker.row(0);
        std::size_t target = m.rows();
        int dmax = -1;
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (!c[i].is_zero() && degs[i] > dmax) {
                dmax = degs[i];
                target = i;
            }
        Poly replacement;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Poly acc;
            for (std::size_t i = 0; i < m.rows(); ++i) {
                if (c[i].is_zero()) continue;
                acc += (c[i] * m(i, j)).shifted(dmax - degs[i]);
            }
            m(target, j) = acc;
        }
        bool zero_row = true;
        for (std::size_t j = 0; j < m.cols() && zero_row; ++j) zero_row = m(target, j).is_zero();
        if (zero_row) throw InvariantViolation("row reduction produced a zero row on a basic encoder");
    }
    if (!is_minimal(m)) throw InvariantViolation("row reduction did not reach a minimal encoder");
    if (!same_row_module(g, m)) throw InvariantViolation("row reduction changed the row module");
    return m;
}

PolyMatrix hermite_form(const PolyMatrix& g) {
    if (g.rows() == 0) return g;
    const Field& f = matrix_field(g);
    (void)f;
    PolyMatrix h = g;
    std::size_t pr = 0;
    for (std::size_t col = 0; col < h.cols() && pr < h.rows(); ++col) {
        // Euclidean elimination below pr within this column.
        while (true) {
            std::size_t best = h.rows();
            for (std::size_t i = pr; i < h.rows(); ++i) {
                if (h(i, col).is_zero()) continue;
                if (best == h.rows() || h(i, col).deg() < h(best, col).deg()) best = i;
            }
            if (best == h.rows()) break; // column clear below pr
            bool others = false;
            for (std::size_t i = pr; i < h.rows(); ++i) {
                if (i == best || h(i, col).is_zero()) continue;
                others = true;
                Poly q = divmod(h(i, col), h(best, col)).first;
                for (std::size_t j = 0; j < h.cols(); ++j) h(i, j) -= q * h(best, j);
            }
            if (!others) {
                if (best != pr)
                    for (std::size_t j = 0; j < h.cols(); ++j) std::swap(h(best, j), h(pr, j));
                Fq scale = h(pr, col).leading().inv();
                for (std::size_t j = 0; j < h.cols(); ++j) h(pr, j) = scale * h(pr, j);
                for (std::size_t i = 0; i < pr; ++i) {
                    if (h(i, col).is_zero()) continue;
                    Poly q = divmod(h(i, col), h(pr, col)).first;
                    if (q.is_zero()) continue;
                    for (std::size_t j = 0; j < h.cols(); ++j) h(i, j) -= q * h(pr, j);
                }
                ++pr;
                break;
            }
        }
    }
    return h;
}

bool same_row_module(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols() != b.cols()) return false;
    return hermite_form(a) == hermite_form(b);
}

namespace {

struct SmithWork {
    PolyMatrix s, u, v, w; // g = u*s*v maintained; w = v^{-1}

    void row_swap(std::size_t i, std::size_t j) {
        for (std::size_t t = 0; t < s.cols(); ++t) std::swap(s(i, t), s(j, t));
        for (std::size_t t = 0; t < u.rows(); ++t) std::swap(u(t, i), u(t, j));
    }
    void col_swap(std::size_t i, std::size_t j) {
        for (std::size_t t = 0; t < s.rows(); ++t) std::swap(s(t, i), s(t, j));
        for (std::size_t t = 0; t < v.cols(); ++t) std::swap(v(i, t), v(j, t));
        for (std::size_t t = 0; t < w.rows(); ++t) std::swap(w(t, i), w(t, j));
    }
    // row i -= q * row j
    void row_addmul(std::size_t i, std::size_t j, const Poly& q) {
        for (std::size_t t = 0; t < s.cols(); ++t) s(i, t) -= q * s(j, t);
        for (std::size_t t = 0; t < u.rows(); ++t) u(t, j) += q * u(t, i);
    }
    // col j -= q * col i
    void col_addmul(std::size_t j, std::size_t i, const Poly& q) {
        for (std::size_t t = 0; t < s.rows(); ++t) s(t, j) -= q * s(t, i);
        for (std::size_t t = 0; t < v.cols(); ++t) v(i, t) += q * v(j, t);
        for (std::size_t t = 0; t < w.rows(); ++t) w(t, j) -= q * w(t, i);
    }
    // row i *= c (unit)
    void row_scale(std::size_t i, const Fq& c) {
        Poly pc(c);
        Poly pci(c.inv());
        for (std::size_t t = 0; t < s.cols(); ++t) s(i, t) = pc * s(i, t);
        for (std::size_t t = 0; t < u.rows(); ++t) u(t, i) = pci * u(t, i);
    }
};

} // namespace

SmithDecomposition smith_decompose(const PolyMatrix& g) {
    const Field& f = matrix_field(g);
    std::size_t k = g.rows(), n = g.cols();
    SmithWork w{g, poly_identity(f, k), poly_identity(f, n), poly_identity(f, n)};
    std::size_t steps = std::min(k, n);
    for (std::size_t t = 0; t < steps; ++t) {
        while (true) {
            // Minimal-degree nonzero pivot in the trailing block.
            std::size_t pi = k, pj = n;
            int pd = -1;
            for (std::size_t i = t; i < k; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    const Poly& e = w.s(i, j);
                    if (e.is_zero()) continue;
                    if (pd < 0 || e.deg() < pd) {
                        pd = e.deg();
                        pi = i;
                        pj = j;
                    }
                }
            if (pd < 0) { pi = k; break; } // trailing block all zero
            if (pi != t) w.row_swap(pi, t);
            if (pj != t) w.col_swap(pj, t);
            bool changed = false;
            for (std::size_t i = t + 1; i < k; ++i) {
                if (w.s(i, t).is_zero()) continue;
                auto [q, r] = divmod(w.s(i, t), w.s(t, t));
                w.row_addmul(i, t, q);
                if (!r.is_zero()) changed = true;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (w.s(t, j).is_zero()) continue;
                auto [q, r] = divmod(w.s(t, j), w.s(t, t));
                w.col_addmul(j, t, q);
                if (!r.is_zero()) changed = true;
            }
            if (changed) continue;
            // Divisibility fixup: fold in a row containing a non-multiple.
            bool fixed = false;
            for (std::size_t i = t + 1; i < k && !fixed; ++i)
                for (std::size_t j = t + 1; j < n && !fixed; ++j) {
                    if (w.s(i, j).is_zero()) continue;
                    if (!divmod(w.s(i, j), w.s(t, t)).second.is_zero()) {
                        Poly neg_one(-f.one());
                        w.row_addmul(t, i, neg_one); // row t += row i
                        fixed = true;
                    }
                }
            if (!fixed) break;
        }
        if (w.s(t, t).is_zero()) break;
        w.row_scale(t, w.s(t, t).leading().inv());
    }
    SmithDecomposition out{w.u, w.v, w.w, {}};
    for (std::size_t t = 0; t < steps; ++t) out.invariants.push_back(w.s(t, t));
    // Verify the decomposition and the inverse bookkeeping.
    PolyMatrix diag(k, n);
    for (std::size_t t = 0; t < steps; ++t) diag(t, t) = out.invariants[t];
    if (out.u * diag * out.v != g) throw InvariantViolation("smith decomposition does not recompose");
    if (out.v * out.v_inv != poly_identity(f, n)) throw InvariantViolation("smith v inverse bookkeeping failed");
    for (std::size_t t = 1; t < out.invariants.size(); ++t) {
        if (out.invariants[t - 1].is_zero()) {
            if (!out.invariants[t].is_zero()) throw InvariantViolation("smith invariant order violated");
        } else if (!divmod(out.invariants[t], out.invariants[t - 1]).second.is_zero()) {
            throw InvariantViolation("smith divisibility chain violated");
        }
    }
    return out;
}

PolyMatrix dual_encoder(const PolyMatrix& g) {
    const Field& f = matrix_field(g);
    std::size_t k = g.rows(), n = g.cols();
    if (k >= n) throw UsageError("dual encoder requires k < n");
    if (!is_basic(g)) throw PreconditionError("dual encoder requires a basic generator");
    SmithDecomposition sd = smith_decompose(g);
    for (const Poly& d : sd.invariants)
        if (d.deg() != 0) throw InvariantViolation("basic generator with non-unit smith invariant");
    PolyMatrix ghat_raw(n - k, n);
    for (std::size_t i = 0; i < n - k; ++i)
        for (std::size_t j = 0; j < n; ++j) ghat_raw(i, j) = sd.v_inv(j, k + i);
    if (g * ghat_raw.transposed() != poly_zeros(k, n - k))
        throw InvariantViolation("smith-based kernel rows are not orthogonal to the generator");
    PolyMatrix ghat = minimal_reduction(ghat_raw);
    if (!is_basic(ghat)) throw InvariantViolation("dual encoder is not basic");
    if (code_degree(ghat) != code_degree(g)) throw InvariantViolation("dual encoder degree mismatch");
    (void)f;
    return ghat;
}

PolyMatrix reciprocal_matrix(const PolyMatrix& g) {
    if (!is_minimal(g)) throw PreconditionError("reciprocal matrix requires a minimal encoder");
    auto degs = row_degrees(g);
    PolyMatrix r(g.rows(), g.cols());
    for (std::size_t i = 0; i < g.rows(); ++i) {
        if (degs[i] < 0) throw StructuralError("reciprocal of a zero row");
        for (std::size_t j = 0; j < g.cols(); ++j) r(i, j) = reciprocal_to_degree(g(i, j), degs[i]);
    }
    return r;
}

CodeProfile profile(const PolyMatrix& g, const Field& f) {
    CodeProfile p;
    p.k = static_cast<long>(g.rows());
    p.n = static_cast<long>(g.cols());
    p.q = f.q();
    p.row_degrees = row_degrees(g);
    p.basic = is_basic(g);
    p.degree = code_degree(g);
    p.minimal = (external_degree(g) == p.degree);
    p.forney = p.row_degrees;
    std::sort(p.forney.begin(), p.forney.end());
    for (int d : p.row_degrees)
        if (d > 0) ++p.r;
    return p;
}

} // namespace ccode
