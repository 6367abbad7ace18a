#pragma once

// Shared builders for the running example: a rate-2/3 degree-2 code over
// GF(3) whose grids are frozen throughout the suite.

#include <initializer_list>

#include "ccode/poly_matrix.hpp"
#include "ccode/weight_poly.hpp"

namespace tst {

using namespace ccode;

inline Poly P(const Field& f, std::initializer_list<long> coeffs) {
    std::vector<Fq> v;
    for (long c : coeffs) v.push_back(f.element(c));
    return Poly(std::move(v));
}

inline FqMatrix M(const Field& f, std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<Fq>> r;
    for (const auto& row : rows) {
        std::vector<Fq> one;
        for (long c : row) one.push_back(f.element(c));
        r.push_back(std::move(one));
    }
    return FqMatrix::from_rows(r);
}

/// G = [1+D^2, 2+D, 0; 1, 0, 2] over GF(3): k=2, n=3, degree 2, indices (2,0).
inline PolyMatrix demo_encoder() {
    const Field& f = Field::get(3, 1);
    PolyMatrix g(2, 3);
    g(0, 0) = P(f, {1, 0, 1});
    g(0, 1) = P(f, {2, 1});
    g(1, 0) = P(f, {1});
    g(1, 2) = P(f, {2});
    return g;
}

/// A dual encoder of the demo code: (2+D, 2+2D^2, 2+D).
inline PolyMatrix demo_dual() {
    const Field& f = Field::get(3, 1);
    PolyMatrix g(1, 3);
    g(0, 0) = P(f, {2, 1});
    g(0, 1) = P(f, {2, 0, 2});
    g(0, 2) = P(f, {2, 1});
    return g;
}

inline WPolyZ wz(std::initializer_list<long long> coeffs) {
    return WPolyZ(std::vector<long long>(coeffs));
}

} // namespace tst
