#include "ccode/random_codes.hpp"

namespace ccode {

Fq random_element(const Field& f, Rng& rng) {
    std::uniform_int_distribution<long> d(0, f.q() - 1);
    return f.element(d(rng));
}

FqMatrix random_full_rank_matrix(const Field& f, long k, long n, Rng& rng, int attempts) {
    if (k < 1 || n < k) throw UsageError("need 1 <= k <= n");
    for (int t = 0; t < attempts; ++t) {
        FqMatrix m(static_cast<std::size_t>(k), static_cast<std::size_t>(n), f.zero());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = random_element(f, rng);
        if (rank(m) == static_cast<std::size_t>(k)) return m;
    }
    throw ResourceError("could not draw a full-rank matrix");
}

PolyMatrix random_minimal_basic_encoder(const Field& f, long n, long k, int delta, Rng& rng,
                                        int attempts) {
    if (k < 1 || n <= k) throw UsageError("need 1 <= k < n");
    if (delta < 0) throw UsageError("negative state dimension");
    std::uniform_int_distribution<long> row_pick(0, k - 1);
    for (int t = 0; t < attempts; ++t) {
        std::vector<int> deg(static_cast<std::size_t>(k), 0);
        for (int u = 0; u < delta; ++u) ++deg[static_cast<std::size_t>(row_pick(rng))];
        PolyMatrix g(static_cast<std::size_t>(k), static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < g.rows(); ++i)
            for (std::size_t j = 0; j < g.cols(); ++j) {
                std::vector<Fq> cs(static_cast<std::size_t>(deg[i]) + 1, f.zero());
                for (std::size_t d = 0; d < cs.size(); ++d) cs[d] = random_element(f, rng);
                g(i, j) = Poly(std::move(cs));
            }
        if (row_degrees(g) != deg) continue;
        if (rank(highest_coefficient_matrix(g, f)) != static_cast<std::size_t>(k)) continue;
        if (!is_basic(g)) continue;
        if (!is_minimal(g)) continue;
        return g;
    }
    throw ResourceError("could not draw a basic minimal encoder");
}

} // namespace ccode
