#pragma once

/// @file cyclo.hpp
/// Exact arithmetic in the cyclotomic field Q(zeta) for zeta a primitive p-th
/// root of unity, p prime.  Elements are stored on the power basis
/// {1, zeta, ..., zeta^{p-2}} with rational coordinates; zeta^{p-1} reduces to
/// -(1 + zeta + ... + zeta^{p-2}).  Complex conjugation is zeta -> zeta^{p-1}.

#include <string>
#include <vector>

#include "ccode/rational.hpp"

namespace ccode {

class CycloRat {
public:
    /// Unattached zero, usable as the additive identity for any p.
    CycloRat() = default;

    /// Zero element of Q(zeta_p).
    explicit CycloRat(long p) : p_(check_p(p)), c_(p - 1) {}

    static CycloRat from_rational(long p, const Rat& r) {
        CycloRat x(p);
        x.c_[0] = r;
        return x;
    }
    /// zeta^t (t taken mod p).
    static CycloRat zeta_power(long p, long t);

    long p() const { return p_; }
    bool is_zero() const;
    /// True iff the element lies in Q, i.e. the coordinates of
    /// zeta^1..zeta^{p-2} all vanish on the reduced power basis.
    bool is_rational() const;
    /// The rational value (requires is_rational()).
    Rat rational_value() const;

    const std::vector<Rat>& coords() const { return c_; }

    friend CycloRat operator+(const CycloRat& a, const CycloRat& b);
    friend CycloRat operator-(const CycloRat& a, const CycloRat& b);
    friend CycloRat operator*(const CycloRat& a, const CycloRat& b);
    CycloRat operator-() const;
    CycloRat& operator+=(const CycloRat& o) { return *this = *this + o; }
    CycloRat& operator-=(const CycloRat& o) { return *this = *this - o; }
    friend CycloRat operator*(const Rat& s, const CycloRat& a);
    friend bool operator==(const CycloRat& a, const CycloRat& b);
    friend bool operator!=(const CycloRat& a, const CycloRat& b) { return !(a == b); }

    /// Complex conjugate (zeta -> zeta^{-1}).
    CycloRat conj() const;

    /// Exact division by a nonzero rational.
    CycloRat div_by(const Rat& d) const;

    /// Build from exponent buckets: sum over e in [0, p) of bucket[e]*zeta^e.
    static CycloRat from_buckets(long p, const std::vector<Rat>& buckets);

    std::string str() const;

private:
    static long check_p(long p) {
        if (p < 2) throw UsageError("cyclotomic order must be a prime >= 2");
        for (long d = 2; d * d <= p; ++d)
            if (p % d == 0) throw UsageError("cyclotomic order must be prime, got " + std::to_string(p));
        return p;
    }
    static void align(const CycloRat& a, const CycloRat& b, long& p);

    long p_ = 0; // 0 marks the unattached zero
    std::vector<Rat> c_;
};

} // namespace ccode
