#include "doctest.h"

#include <cstdlib>

#include "ccode/ccf.hpp"
#include "ccode/wam.hpp"
#include "helpers.hpp"

using namespace ccode;
using tst::M;
using tst::P;
using tst::demo_dual;
using tst::demo_encoder;

TEST_CASE("realization of the demo encoder") {
    Ccf c = build_ccf(demo_encoder());
    const Field& f = *c.field;
    CHECK(c.n == 3);
    CHECK(c.k == 2);
    CHECK(c.delta == 2);
    CHECK(c.r == 1);
    CHECK(c.indices == std::vector<int>{2, 0});
    CHECK(c.row_perm == std::vector<std::size_t>{0, 1});
    CHECK(c.A == M(f, {{0, 1}, {0, 0}}));
    CHECK(c.B == M(f, {{1, 0}, {0, 0}}));
    CHECK(c.C == M(f, {{0, 1, 0}, {1, 0, 0}}));
    CHECK(c.E == M(f, {{1, 2, 0}, {1, 0, 2}}));
    validate_ccf(c);
}

TEST_CASE("realization of the demo dual encoder") {
    Ccf c = build_ccf(demo_dual());
    const Field& f = *c.field;
    CHECK(c.k == 1);
    CHECK(c.delta == 2);
    CHECK(c.r == 1);
    CHECK(c.A == M(f, {{0, 1}, {0, 0}}));
    CHECK(c.B == M(f, {{1, 0}}));
    CHECK(c.C == M(f, {{1, 0, 1}, {0, 2, 0}}));
    CHECK(c.E == M(f, {{2, 2, 2}}));
    validate_ccf(c);
}

TEST_CASE("constant rows are moved behind positive-degree rows") {
    const Field& f = Field::get(3, 1);
    PolyMatrix g(2, 3);
    g(0, 0) = P(f, {1});
    g(0, 2) = P(f, {2});
    g(1, 0) = P(f, {1, 0, 1});
    g(1, 1) = P(f, {2, 1});
    Ccf c = build_ccf(g);
    CHECK(c.row_perm == std::vector<std::size_t>{1, 0});
    CHECK(c.indices == std::vector<int>{2, 0});
    // the realized encoder equals the demo and so do the matrices
    Ccf demo = build_ccf(demo_encoder());
    CHECK(c.G == demo.G);
    CHECK(c.A == demo.A);
    CHECK(c.B == demo.B);
    CHECK(c.C == demo.C);
    CHECK(c.E == demo.E);
}

TEST_CASE("single transition matches the worked entry") {
    Ccf c = build_ccf(demo_encoder());
    const Field& f = *c.field;
    FqVector x = {f.element(1), f.element(2)};
    auto [y0, v0] = ccf_step(c, x, {f.zero(), f.zero()});
    CHECK(y0 == FqVector{f.zero(), f.one()});
    CHECK(v0 == FqVector{f.element(2), f.element(1), f.zero()});
    auto [y1, v1] = ccf_step(c, x, {f.zero(), f.one()});
    CHECK(y1 == FqVector{f.zero(), f.one()});
    CHECK(v1 == FqVector{f.zero(), f.element(1), f.element(2)});
}

TEST_CASE("driving the realization reproduces polynomial encoding") {
    Ccf c = build_ccf(demo_encoder());
    const Field& f = *c.field;
    std::vector<Poly> u = {P(f, {1, 2, 0, 1}), P(f, {2, 0, 1})};
    int horizon = 6;
    CHECK(encode_series(c, u, horizon) == encode_polynomial(c, u, horizon));
    std::vector<Poly> zero = {Poly(), Poly()};
    for (const auto& v : encode_series(c, zero, 3))
        CHECK(hamming_weight(v) == 0);
}

TEST_CASE("state indexing is lexicographic with the leftmost digit most significant") {
    const Field& f3 = Field::get(3, 1);
    StateIndexer s(f3, 2);
    CHECK(s.size() == 9);
    CHECK(s.index({f3.element(1), f3.element(2)}) == 5);
    CHECK(s.vector_at(5) == FqVector{f3.element(1), f3.element(2)});
    const Field& f4 = Field::get(2, 2);
    StateIndexer t(f4, 2);
    CHECK(t.index({f4.element(2), f4.element(1)}) == 9);
    for (long long i = 0; i < t.size(); ++i) CHECK(t.index(t.vector_at(i)) == i);
    StateIndexer empty(f3, 0);
    CHECK(empty.size() == 1);
    CHECK(empty.index({}) == 0);
}

TEST_CASE("state cap honors the environment override") {
    const Field& f = Field::get(3, 1);
    setenv("CCDUAL_MAX_STATES", "8", 1);
    CHECK_THROWS_AS(StateIndexer(f, 2, true), ResourceError);
    setenv("CCDUAL_MAX_STATES", "9", 1);
    CHECK(StateIndexer(f, 2, true).size() == 9);
    setenv("CCDUAL_MAX_STATES", "bogus", 1);
    CHECK_THROWS_AS(StateIndexer(f, 2, true), UsageError);
    unsetenv("CCDUAL_MAX_STATES");
    CHECK(StateIndexer(f, 2, true).size() == 9);
}

TEST_CASE("realization requires basic minimal input") {
    const Field& f = Field::get(3, 1);
    PolyMatrix catastrophic(1, 2);
    catastrophic(0, 0) = P(f, {0, 1});
    catastrophic(0, 1) = P(f, {0, 2});
    CHECK_THROWS_AS(build_ccf(catastrophic), PreconditionError);
    PolyMatrix nonminimal(2, 2);
    nonminimal(0, 0) = P(f, {1});
    nonminimal(1, 0) = P(f, {0, 1});
    nonminimal(1, 1) = P(f, {1});
    CHECK_THROWS_AS(build_ccf(nonminimal), PreconditionError);
}

TEST_CASE("degree-zero encoders realize with empty state") {
    const Field& f = Field::get(2, 1);
    PolyMatrix g(1, 2);
    g(0, 0) = P(f, {1});
    g(0, 1) = P(f, {1});
    Ccf c = build_ccf(g);
    CHECK(c.delta == 0);
    CHECK(c.r == 0);
    CHECK(c.A.rows() == 0);
    CHECK(c.B.cols() == 0);
    validate_ccf(c);
    auto [y, v] = ccf_step(c, {}, {f.one()});
    CHECK(y.empty());
    CHECK(v == FqVector{f.one(), f.one()});
}
