#include "doctest.h"

#include "ccode/poly_matrix.hpp"
#include "helpers.hpp"

using namespace ccode;
using tst::P;
using tst::demo_dual;
using tst::demo_encoder;

TEST_CASE("polynomial basics") {
    const Field& f = Field::get(3, 1);
    Poly a = P(f, {1, 0, 1});
    Poly b = P(f, {2, 1});
    CHECK(a.deg() == 2);
    CHECK((a * b).deg() == 3);
    CHECK(a + (-a) == Poly());
    CHECK(a.eval(f.element(1)) == f.element(2));
    auto [quo, rem] = divmod(a, b);
    CHECK(quo * b + rem == a);
    CHECK(rem.deg() < b.deg());
    CHECK(poly_gcd(a * b, b) == monic(b));
    CHECK(reciprocal_to_degree(b, 2) == P(f, {0, 1, 2}));
    CHECK(a.str() == "1 + D^2");
}

TEST_CASE("demo encoder degrees and minors") {
    PolyMatrix g = demo_encoder();
    const Field& f = matrix_field(g);
    CHECK(row_degrees(g) == std::vector<int>{2, 0});
    CHECK(external_degree(g) == 2);
    CHECK(code_degree(g) == 2);
    auto minors = full_size_minors(g);
    REQUIRE(minors.size() == 3);
    CHECK(minors[0] == -P(f, {2, 1}));       // columns {0,1}
    CHECK(minors[1] == P(f, {2, 0, 2}));     // columns {0,2}
    CHECK(minors[2] == P(f, {1, 2}));        // columns {1,2}
    CHECK(minors_gcd(g) == P(f, {1}));
    CHECK(is_basic(g));
    CHECK(is_minimal(g));
    CHECK(rank(highest_coefficient_matrix(g, f)) == 2);
}

TEST_CASE("profile of the demo encoder") {
    PolyMatrix g = demo_encoder();
    CodeProfile p = profile(g, matrix_field(g));
    CHECK(p.n == 3);
    CHECK(p.k == 2);
    CHECK(p.q == 3);
    CHECK(p.degree == 2);
    CHECK(p.row_degrees == std::vector<int>{2, 0});
    CHECK(p.forney == std::vector<int>{0, 2});
    CHECK(p.r == 1);
    CHECK(p.basic);
    CHECK(p.minimal);
}

TEST_CASE("minimal reduction of a basic non-minimal encoder") {
    const Field& f = Field::get(3, 1);
    PolyMatrix g(2, 2);
    g(0, 0) = P(f, {1});
    g(1, 0) = P(f, {0, 1}); // rows (1, 0) and (D, 1)
    g(1, 1) = P(f, {1});
    CHECK(is_basic(g));
    CHECK_FALSE(is_minimal(g));
    CHECK(code_degree(g) == 0);
    PolyMatrix m = minimal_reduction(g);
    CHECK(is_minimal(m));
    CHECK(external_degree(m) == 0);
    CHECK(same_row_module(g, m));
    CHECK(same_row_module(m, poly_identity(f, 2)));
}

TEST_CASE("dual encoder of the demo code") {
    PolyMatrix g = demo_encoder();
    PolyMatrix d = dual_encoder(g);
    CHECK(d.rows() == 1);
    CHECK(d.cols() == 3);
    CHECK(g * d.transposed() == poly_zeros(2, 1));
    CHECK(is_basic(d));
    CHECK(is_minimal(d));
    CHECK(external_degree(d) == 2);
    CHECK(same_row_module(d, demo_dual()));
    // duality is involutive on the row module
    CHECK(same_row_module(dual_encoder(d), g));
}

TEST_CASE("reciprocal matrix of the demo encoder") {
    PolyMatrix g = demo_encoder();
    const Field& f = matrix_field(g);
    PolyMatrix rec = reciprocal_matrix(g);
    CHECK(rec(0, 0) == P(f, {1, 0, 1}));
    CHECK(rec(0, 1) == P(f, {0, 1, 2}));
    CHECK(rec(0, 2) == Poly());
    CHECK(rec(1, 0) == P(f, {1}));
    CHECK(rec(1, 2) == P(f, {2}));
    CHECK(row_degrees(rec) == row_degrees(g));
    CHECK(is_minimal(rec));
    // applying the reversal twice restores the encoder
    CHECK(reciprocal_matrix(rec) == g);
}

TEST_CASE("hermite form is a module invariant") {
    const Field& f = Field::get(3, 1);
    PolyMatrix g = demo_encoder();
    PolyMatrix scrambled(2, 3);
    // unimodular left transformation: row0 <-> row1, then row1 += D * row0
    for (std::size_t j = 0; j < 3; ++j) {
        scrambled(0, j) = g(1, j);
        scrambled(1, j) = g(0, j) + P(f, {0, 1}) * g(1, j);
    }
    CHECK(hermite_form(g) == hermite_form(scrambled));
    CHECK(same_row_module(g, scrambled));
    CHECK_FALSE(same_row_module(g, demo_dual()));
}

TEST_CASE("smith decomposition reconstructs and exposes invariants") {
    PolyMatrix g = demo_encoder();
    SmithDecomposition s = smith_decompose(g);
    REQUIRE(s.invariants.size() == 2);
    const Field& f = matrix_field(g);
    CHECK(s.invariants[0] == P(f, {1}));
    CHECK(s.invariants[1] == P(f, {1}));
    CHECK(poly_determinant(s.u).deg() == 0);
    CHECK(poly_determinant(s.v).deg() == 0);
    CHECK(s.v * s.v_inv == poly_identity(f, 3));
}

TEST_CASE("basicness fails when a polynomial factor divides all minors") {
    const Field& f = Field::get(2, 1);
    PolyMatrix g(1, 2);
    g(0, 0) = P(f, {0, 1});
    g(0, 1) = P(f, {0, 0, 1});
    CHECK_FALSE(is_basic(g));
    CHECK(minors_gcd(g) == P(f, {0, 1}));
}

TEST_CASE("rank-deficient matrices have no code degree") {
    const Field& f = Field::get(2, 1);
    PolyMatrix g(2, 2);
    g(0, 0) = P(f, {0, 1});
    g(0, 1) = P(f, {0, 1});
    g(1, 0) = P(f, {0, 1});
    g(1, 1) = P(f, {0, 1});
    CHECK_THROWS_AS(code_degree(g), StructuralError);
}

TEST_CASE("coefficient slices and evaluation") {
    PolyMatrix g = demo_encoder();
    const Field& f = matrix_field(g);
    CHECK(eval_at(g, f.zero()) == tst::M(f, {{1, 2, 0}, {1, 0, 2}}));
    CHECK(coefficient_slice(g, 1, f) == tst::M(f, {{0, 1, 0}, {0, 0, 0}}));
    CHECK(coefficient_slice(g, 2, f) == tst::M(f, {{1, 0, 0}, {0, 0, 0}}));
    CHECK(max_entry_degree(g) == 2);
}
