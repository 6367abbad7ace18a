#pragma once

/// @file poly.hpp
/// Univariate polynomials in D over a finite field, canonical form (no
/// trailing zero coefficients; the zero polynomial has an empty list and
/// degree -1).

#include <string>
#include <vector>

#include "ccode/field.hpp"

namespace ccode {

class Poly {
public:
    Poly() = default;
    explicit Poly(const Fq& constant) : c_{constant} { trim(); }
    explicit Poly(std::vector<Fq> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly monomial(const Fq& coeff, int degree) {
        if (degree < 0) throw UsageError("monomial with negative degree");
        if (coeff.is_zero()) return Poly();
        std::vector<Fq> c(degree + 1);
        c[degree] = coeff;
        return Poly(std::move(c));
    }

    /// -1 for the zero polynomial.
    int deg() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    Fq coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Fq(); }
    Fq leading() const { return c_.empty() ? Fq() : c_.back(); }
    const std::vector<Fq>& coeffs() const { return c_; }

    /// Field of the coefficients; nullptr for the (unattached) zero polynomial.
    const Field* field() const {
        for (const auto& c : c_)
            if (c.field()) return c.field();
        return nullptr;
    }

    Fq eval(const Fq& x) const {
        Fq acc;
        for (int i = deg(); i >= 0; --i) acc = acc * x + c_[i];
        return acc;
    }

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Fq& s, const Poly& a);
    Poly operator-() const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Shift by D^k (multiply by the monomial).
    Poly shifted(int k) const;

    /// Quotient and remainder by a nonzero divisor.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

    std::string str(const std::string& var = "D") const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Fq> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
Poly poly_gcd(Poly a, Poly b);

/// Make monic (scale by the inverse of the leading coefficient).
Poly monic(const Poly& a);

/// D^d * a(1/D) for d >= deg a: the coefficient list reversed into degree d.
Poly reciprocal_to_degree(const Poly& a, int d);

} // namespace ccode
