#pragma once

/// @file field.hpp
/// Finite fields GF(p^s) with exact arithmetic on canonically indexed elements.
///
/// An element a = a_0 + a_1*x + ... + a_{s-1}*x^{s-1} (a_i residues mod p) is
/// identified by its index  sum a_i * p^i  in [0, q).  This index order is the
/// element order used everywhere downstream (state enumeration, matrix grids).
/// Arithmetic is direct modular computation on the coefficient vectors; no
/// discrete-log tables are built.

#include <cstdint>
#include <string>
#include <vector>

#include "ccode/errors.hpp"

namespace ccode {

class Fq;

/// Immutable description of one field GF(p^s); elements hold a pointer to it.
/// Instances are interned: Field::get returns a stable reference, and pointer
/// equality coincides with field equality.
class Field {
public:
    /// Field with the default modulus: the lexicographically smallest monic
    /// irreducible of degree s over GF(p), coefficients compared low-degree-first.
    static const Field& get(long p, long s);

    /// Field with an explicit monic irreducible modulus, coefficients ascending
    /// (size s+1, last entry 1). Irreducibility is verified by trial division.
    static const Field& get(long p, long s, const std::vector<long>& modulus);

    long p() const { return p_; }
    long s() const { return s_; }
    long q() const { return q_; }
    const std::vector<long>& modulus() const { return mod_; }

    Fq zero() const;
    Fq one() const;
    /// Element with the given canonical index in [0, q).
    Fq element(long idx) const;
    /// Element from residue coefficients (any integers; reduced mod p).
    Fq from_coeffs(const std::vector<long>& coeffs) const;

    /// Absolute trace onto the prime field, as a residue in [0, p).
    long trace(const Fq& a) const;

    bool operator==(const Field& o) const { return this == &o; }

    // Index-level arithmetic; exposed for element internals and hot loops.
    uint32_t add_idx(uint32_t a, uint32_t b) const;
    uint32_t sub_idx(uint32_t a, uint32_t b) const;
    uint32_t neg_idx(uint32_t a) const;
    uint32_t mul_idx(uint32_t a, uint32_t b) const;
    uint32_t inv_idx(uint32_t a) const;
    uint32_t pow_idx(uint32_t a, long long e) const;
    long trace_idx(uint32_t a) const;

    std::string label() const; // "GF(9)" style, for messages

private:
    Field(long p, long s, std::vector<long> mod);
    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

    void to_digits(uint32_t idx, long* d) const;    // s digits, little-endian
    uint32_t from_digits(const long* d) const;

    long p_, s_, q_;
    std::vector<long> mod_; // ascending, monic, size s+1
};

/// One field element: a context pointer plus its canonical index.
/// A default-constructed element is an unattached zero: it acts as the additive
/// identity of any field, so empty sums (zero-dimension matrix products) work.
/// Combining nonzero elements from different fields throws UsageError.
class Fq {
public:
    Fq() = default;
    Fq(const Field& f, long idx) : f_(&f), v_(static_cast<uint32_t>(idx)) {
        if (idx < 0 || idx >= f.q()) throw UsageError("element index out of range for " + f.label());
    }

    const Field* field() const { return f_; }
    long idx() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    /// Residue coefficients (length s), little-endian; empty field -> {0}.
    std::vector<long> coeffs() const;

    Fq operator-() const { return f_ ? Fq(*f_, f_->neg_idx(v_)) : Fq(); }
    Fq inv() const {
        if (!f_ || v_ == 0) throw DomainError("inverse of zero field element");
        return Fq(*f_, f_->inv_idx(v_));
    }
    Fq pow(long long e) const {
        if (!f_) {
            if (e <= 0) throw DomainError("zero element raised to non-positive power");
            return Fq();
        }
        return Fq(*f_, f_->pow_idx(v_, e));
    }

    friend Fq operator+(const Fq& a, const Fq& b) {
        if (!a.f_) return b;
        if (!b.f_) return a;
        require_same(a, b);
        return Fq(*a.f_, a.f_->add_idx(a.v_, b.v_));
    }
    friend Fq operator-(const Fq& a, const Fq& b) {
        if (!b.f_) return a;
        if (!a.f_) return -b;
        require_same(a, b);
        return Fq(*a.f_, a.f_->sub_idx(a.v_, b.v_));
    }
    friend Fq operator*(const Fq& a, const Fq& b) {
        if (!a.f_) return b.f_ ? Fq(*b.f_, 0) : Fq();
        if (!b.f_) return Fq(*a.f_, 0);
        require_same(a, b);
        return Fq(*a.f_, a.f_->mul_idx(a.v_, b.v_));
    }
    friend Fq operator/(const Fq& a, const Fq& b) { return a * b.inv(); }

    Fq& operator+=(const Fq& o) { return *this = *this + o; }
    Fq& operator-=(const Fq& o) { return *this = *this - o; }
    Fq& operator*=(const Fq& o) { return *this = *this * o; }

    friend bool operator==(const Fq& a, const Fq& b) {
        if (a.is_zero() && b.is_zero()) return true;
        if (!a.f_ || !b.f_) return false;
        require_same(a, b);
        return a.v_ == b.v_;
    }
    friend bool operator!=(const Fq& a, const Fq& b) { return !(a == b); }

    std::string str() const { return std::to_string(v_); }

private:
    static void require_same(const Fq& a, const Fq& b) {
        if (a.f_ != b.f_) throw UsageError("mixed field contexts: " + a.f_->label() + " vs " + b.f_->label());
    }

    const Field* f_ = nullptr;
    uint32_t v_ = 0;
};

inline Fq Field::zero() const { return Fq(*this, 0); }
inline Fq Field::one() const { return Fq(*this, 1); }
inline Fq Field::element(long idx) const { return Fq(*this, idx); }
inline long Field::trace(const Fq& a) const {
    if (a.field() && a.field() != this) throw UsageError("trace: element from another field");
    return trace_idx(static_cast<uint32_t>(a.idx()));
}

/// Hamming weight of a vector of field elements.
inline long hamming_weight(const std::vector<Fq>& v) {
    long w = 0;
    for (const auto& e : v)
        if (!e.is_zero()) ++w;
    return w;
}

} // namespace ccode
