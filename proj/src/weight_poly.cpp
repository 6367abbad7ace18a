#include "ccode/weight_poly.hpp"

namespace ccode {

namespace {

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw ResourceError("integer overflow in transform coefficients");
    return r;
}

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw ResourceError("integer overflow in transform coefficients");
    return r;
}

std::vector<long long> mul_checked(const std::vector<long long>& a, const std::vector<long long>& b) {
    std::vector<long long> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = checked_add(c[i + j], checked_mul(a[i], b[j]));
    }
    return c;
}

} // namespace

WPolyZ mw_basis_poly(int j, long n, long q) {
    if (j < 0 || j > n) throw UsageError("transform basis index out of range");
    std::vector<long long> acc{1};
    for (int t = 0; t < j; ++t) acc = mul_checked(acc, {1, -1});
    for (long t = 0; t < n - j; ++t) acc = mul_checked(acc, {1, q - 1});
    return WPolyZ(std::move(acc));
}

WPolyQ to_rational(const WPolyZ& f) {
    std::vector<Rat> c(f.deg() + 1);
    for (int i = 0; i <= f.deg(); ++i) c[i] = rat_from_ll(f.coeff(i));
    return WPolyQ(std::move(c));
}

WPolyC to_cyclotomic(const WPolyZ& f, long p) {
    std::vector<CycloRat> c(f.deg() + 1);
    for (int i = 0; i <= f.deg(); ++i) c[i] = CycloRat::from_rational(p, rat_from_ll(f.coeff(i)));
    return WPolyC(std::move(c));
}

} // namespace ccode
