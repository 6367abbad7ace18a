#include "ccode/cyclo.hpp"

namespace ccode {

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw UsageError("empty rational literal");
    std::string t = s;
    auto slash = t.find('/');
    try {
        if (slash == std::string::npos) {
            Rat r(mpz_class(t), 1);
            r.canonicalize();
            return r;
        }
        mpz_class num(t.substr(0, slash));
        mpz_class den(t.substr(slash + 1));
        if (den == 0) throw UsageError("zero denominator in rational literal '" + s + "'");
        Rat r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw UsageError("malformed rational literal '" + s + "'");
    }
}

CycloRat CycloRat::zeta_power(long p, long t) {
    CycloRat x(p);
    long e = ((t % p) + p) % p;
    if (e < p - 1) {
        x.c_[e] = 1;
    } else {
        for (auto& c : x.c_) c = -1;
    }
    return x;
}

bool CycloRat::is_zero() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

bool CycloRat::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat CycloRat::rational_value() const {
    if (!is_rational()) throw DomainError("cyclotomic element is not rational");
    return c_.empty() ? Rat(0) : c_[0];
}

void CycloRat::align(const CycloRat& a, const CycloRat& b, long& p) {
    if (a.p_ && b.p_ && a.p_ != b.p_) throw UsageError("mixed cyclotomic orders");
    p = a.p_ ? a.p_ : b.p_;
}

CycloRat operator+(const CycloRat& a, const CycloRat& b) {
    long p;
    CycloRat::align(a, b, p);
    if (p == 0) return CycloRat();
    CycloRat r(p);
    for (long i = 0; i < p - 1; ++i) {
        if (a.p_) r.c_[i] += a.c_[i];
        if (b.p_) r.c_[i] += b.c_[i];
    }
    return r;
}

CycloRat operator-(const CycloRat& a, const CycloRat& b) {
    long p;
    CycloRat::align(a, b, p);
    if (p == 0) return CycloRat();
    CycloRat r(p);
    for (long i = 0; i < p - 1; ++i) {
        if (a.p_) r.c_[i] += a.c_[i];
        if (b.p_) r.c_[i] -= b.c_[i];
    }
    return r;
}

CycloRat CycloRat::operator-() const {
    CycloRat r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

CycloRat operator*(const CycloRat& a, const CycloRat& b) {
    long p;
    CycloRat::align(a, b, p);
    if (p == 0 || !a.p_ || !b.p_) return p ? CycloRat(p) : CycloRat();
    // Convolve on exponents 0..2p-4, fold mod p, then reduce zeta^{p-1}.
    std::vector<Rat> buckets(p);
    for (long i = 0; i < p - 1; ++i) {
        if (a.c_[i] == 0) continue;
        for (long j = 0; j < p - 1; ++j) {
            if (b.c_[j] == 0) continue;
            buckets[(i + j) % p] += a.c_[i] * b.c_[j];
        }
    }
    return CycloRat::from_buckets(p, buckets);
}

CycloRat operator*(const Rat& s, const CycloRat& a) {
    CycloRat r = a;
    for (auto& c : r.c_) c *= s;
    return r;
}

bool operator==(const CycloRat& a, const CycloRat& b) {
    if (a.is_zero() && b.is_zero()) return true;
    if (!a.p_ || !b.p_) return false;
    if (a.p_ != b.p_) throw UsageError("mixed cyclotomic orders");
    return a.c_ == b.c_;
}

CycloRat CycloRat::conj() const {
    if (!p_) return *this;
    std::vector<Rat> buckets(p_);
    for (long i = 0; i < p_ - 1; ++i) {
        if (c_[i] == 0) continue;
        buckets[(i * (p_ - 1)) % p_] += c_[i];
    }
    return from_buckets(p_, buckets);
}

CycloRat CycloRat::div_by(const Rat& d) const {
    if (d == 0) throw DomainError("division of cyclotomic element by zero");
    CycloRat r = *this;
    for (auto& c : r.c_) c /= d;
    return r;
}

CycloRat CycloRat::from_buckets(long p, const std::vector<Rat>& buckets) {
    if (static_cast<long>(buckets.size()) != p) throw UsageError("bucket count must equal p");
    CycloRat r(p);
    const Rat& top = buckets[p - 1];
    for (long i = 0; i < p - 1; ++i) r.c_[i] = buckets[i] - top;
    return r;
}

std::string CycloRat::str() const {
    if (!p_ || is_zero()) return "0";
    std::string out;
    for (long i = 0; i < p_ - 1; ++i) {
        if (c_[i] == 0) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += rat_to_string(c_[i]);
        } else {
            if (c_[i] != 1) out += rat_to_string(c_[i]) + "*";
            out += "z";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

} // namespace ccode
