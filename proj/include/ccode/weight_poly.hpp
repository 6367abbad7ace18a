#pragma once

/// @file weight_poly.hpp
/// Weight enumerator polynomials in the indeterminate W over an exact
/// coefficient ring (64-bit integers, rationals, or cyclotomic rationals),
/// and the MacWilliams transform  f |-> sum_j f_j (1-W)^j (1+(q-1)W)^{n-j}.

#include <string>
#include <vector>

#include "ccode/cyclo.hpp"
#include "ccode/errors.hpp"
#include "ccode/rational.hpp"

namespace ccode {

template <class R>
struct RingOps;

template <>
struct RingOps<long long> {
    static bool is_zero(long long v) { return v == 0; }
    static long long from_ll(long long v) { return v; }
    static long long scale_ll(long long v, long long s) { return v * s; }
    static std::string str(long long v) { return std::to_string(v); }
};

template <>
struct RingOps<Rat> {
    static bool is_zero(const Rat& v) { return v == 0; }
    static Rat from_ll(long long v) { return rat_from_ll(v); }
    static Rat scale_ll(const Rat& v, long long s) { return v * rat_from_ll(s); }
    static std::string str(const Rat& v) { return rat_to_string(v); }
};

template <>
struct RingOps<CycloRat> {
    static bool is_zero(const CycloRat& v) { return v.is_zero(); }
    static CycloRat scale_ll(const CycloRat& v, long long s) { return rat_from_ll(s) * v; }
    static std::string str(const CycloRat& v) { return v.str(); }
};

template <class R>
class WeightPoly {
public:
    WeightPoly() = default;
    explicit WeightPoly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

    static WeightPoly monomial(const R& coeff, int degree) {
        if (degree < 0) throw UsageError("monomial with negative degree");
        std::vector<R> c(degree + 1);
        c[degree] = coeff;
        return WeightPoly(std::move(c));
    }
    static WeightPoly one() { return monomial(RingOps<R>::from_ll(1), 0); }

    int deg() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    R coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : R{}; }
    const std::vector<R>& coeffs() const { return c_; }

    void add_monomial(const R& coeff, int degree) {
        if (static_cast<int>(c_.size()) <= degree) c_.resize(degree + 1);
        c_[degree] = c_[degree] + coeff;
        trim();
    }

    /// Value at W = 1 (the coefficient sum).
    R eval_one() const {
        R acc{};
        for (const auto& c : c_) acc = acc + c;
        return acc;
    }

    friend WeightPoly operator+(const WeightPoly& a, const WeightPoly& b) {
        std::vector<R> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        return WeightPoly(std::move(c));
    }
    friend WeightPoly operator-(const WeightPoly& a, const WeightPoly& b) {
        std::vector<R> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
        return WeightPoly(std::move(c));
    }
    friend WeightPoly operator*(const WeightPoly& a, const WeightPoly& b) {
        if (a.is_zero() || b.is_zero()) return WeightPoly();
        std::vector<R> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (RingOps<R>::is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
        }
        return WeightPoly(std::move(c));
    }
    friend WeightPoly operator*(const R& s, const WeightPoly& a) {
        std::vector<R> c(a.c_.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = s * a.c_[i];
        return WeightPoly(std::move(c));
    }
    WeightPoly& operator+=(const WeightPoly& o) { return *this = *this + o; }

    friend bool operator==(const WeightPoly& a, const WeightPoly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const WeightPoly& a, const WeightPoly& b) { return !(a == b); }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = 0; i <= deg(); ++i) {
            if (RingOps<R>::is_zero(c_[i])) continue;
            if (!out.empty()) out += " + ";
            std::string cs = RingOps<R>::str(c_[i]);
            if (i == 0) {
                out += cs;
            } else {
                if (cs != "1") out += (cs.find_first_of("+- ") != std::string::npos ? "(" + cs + ")" : cs) + "*";
                out += "W";
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && RingOps<R>::is_zero(c_.back())) c_.pop_back();
    }
    std::vector<R> c_;
};

using WPolyZ = WeightPoly<long long>;
using WPolyQ = WeightPoly<Rat>;
using WPolyC = WeightPoly<CycloRat>;

/// The transform basis element (1-W)^j (1+(q-1)W)^{n-j} with integer coefficients.
WPolyZ mw_basis_poly(int j, long n, long q);

/// MacWilliams transform of a polynomial of degree <= n.
template <class R>
WeightPoly<R> mw_transform(const WeightPoly<R>& f, long n, long q) {
    if (f.deg() > n) throw PreconditionError("transform input degree exceeds the block length");
    if (n < 0 || q < 2) throw UsageError("transform needs n >= 0 and q >= 2");
    WeightPoly<R> out;
    for (int j = 0; j <= f.deg(); ++j) {
        R fj = f.coeff(j);
        if (RingOps<R>::is_zero(fj)) continue;
        WPolyZ basis = mw_basis_poly(j, n, q);
        for (int t = 0; t <= basis.deg(); ++t) {
            long long b = basis.coeff(t);
            if (b == 0) continue;
            out.add_monomial(RingOps<R>::scale_ll(fj, b), t);
        }
    }
    return out;
}

WPolyQ to_rational(const WPolyZ& f);
WPolyC to_cyclotomic(const WPolyZ& f, long p);

} // namespace ccode
