#include "ccode/field.hpp"

#include <map>
#include <memory>
#include <tuple>

namespace ccode {
namespace {

constexpr long kMaxQ = 65536; // size envelope for one field

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

long mod_pos(long a, long p) {
    long r = a % p;
    return r < 0 ? r + p : r;
}

long inv_mod_p(long a, long p) {
    long t = 0, newt = 1, r = p, newr = mod_pos(a, p);
    while (newr != 0) {
        long quo = r / newr;
        std::tie(t, newt) = std::make_pair(newt, t - quo * newt);
        std::tie(r, newr) = std::make_pair(newr, r - quo * newr);
    }
    if (r != 1) throw DomainError("no inverse mod p");
    return mod_pos(t, p);
}

// Dense polynomials over GF(p) as coefficient vectors, ascending, no
// trailing zeros. Used only for modulus validation and element inversion.
using PPoly = std::vector<long>;

void ptrim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pmul(const PPoly& a, const PPoly& b, long p) {
    if (a.empty() || b.empty()) return {};
    PPoly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = mod_pos(c[i + j] + a[i] * b[j], p);
    ptrim(c);
    return c;
}

// Remainder of a by monic-or-not nonzero b.
PPoly pmod(PPoly a, const PPoly& b, long p) {
    ptrim(a);
    long lead_inv = inv_mod_p(b.back(), p);
    while (a.size() >= b.size()) {
        long c = mod_pos(a.back() * lead_inv, p);
        size_t shift = a.size() - b.size();
        for (size_t j = 0; j < b.size(); ++j) a[shift + j] = mod_pos(a[shift + j] - c * b[j], p);
        ptrim(a);
        if (a.empty()) break;
    }
    return a;
}

PPoly psub_scaled(const PPoly& a, const PPoly& b, long c, long p) {
    PPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        long av = i < a.size() ? a[i] : 0;
        long bv = i < b.size() ? b[i] : 0;
        r[i] = mod_pos(av - c * bv, p);
    }
    ptrim(r);
    return r;
}

// Trial division by every monic polynomial of degree 1 .. s/2.
bool is_irreducible(const PPoly& f, long p) {
    long s = static_cast<long>(f.size()) - 1;
    if (s < 1) return false;
    if (s == 1) return true;
    for (long d = 1; 2 * d <= s; ++d) {
        long count = 1;
        for (long i = 0; i < d; ++i) count *= p; // p^d monic candidates
        for (long c = 0; c < count; ++c) {
            PPoly g(d + 1, 0);
            long t = c;
            for (long i = 0; i < d; ++i) {
                g[i] = t % p;
                t /= p;
            }
            g[d] = 1;
            if (pmod(f, g, p).empty()) return false;
        }
    }
    return true;
}

std::vector<long> default_modulus(long p, long s) {
    if (s == 1) return {0, 1};
    long count = 1;
    for (long i = 0; i < s; ++i) count *= p;
    for (long c = 0; c < count; ++c) {
        PPoly f(s + 1, 0);
        long t = c;
        for (long i = 0; i < s; ++i) {
            f[i] = t % p;
            t /= p;
        }
        f[s] = 1;
        if (is_irreducible(f, p)) return f;
    }
    throw InvariantViolation("no irreducible modulus found"); // unreachable
}

using FieldKey = std::tuple<long, long, std::vector<long>>;

std::map<FieldKey, std::unique_ptr<Field>>& registry() {
    static std::map<FieldKey, std::unique_ptr<Field>> r;
    return r;
}

} // namespace

Field::Field(long p, long s, std::vector<long> mod) : p_(p), s_(s), mod_(std::move(mod)) {
    if (!is_prime(p_)) throw UsageError("field characteristic must be prime, got " + std::to_string(p_));
    if (s_ < 1) throw UsageError("field extension degree must be >= 1");
    long q = 1;
    for (long i = 0; i < s_; ++i) {
        q *= p_;
        if (q > kMaxQ) throw ResourceError("field size exceeds envelope of " + std::to_string(kMaxQ));
    }
    q_ = q;
    if (static_cast<long>(mod_.size()) != s_ + 1) throw UsageError("modulus must have degree s (s+1 coefficients)");
    for (auto& c : mod_) c = mod_pos(c, p_);
    if (mod_.back() != 1) throw UsageError("modulus must be monic");
    if (!is_irreducible(mod_, p_)) throw UsageError("modulus is reducible over GF(" + std::to_string(p_) + ")");
}

const Field& Field::get(long p, long s) {
    // validate up front so the modulus search never runs on bad parameters
    if (!is_prime(p)) throw UsageError("field characteristic must be prime, got " + std::to_string(p));
    if (s < 1) throw UsageError("field extension degree must be >= 1");
    long q = 1;
    for (long i = 0; i < s; ++i) {
        q *= p;
        if (q > kMaxQ) throw ResourceError("field size exceeds envelope of " + std::to_string(kMaxQ));
    }
    return get(p, s, default_modulus(p, s));
}

const Field& Field::get(long p, long s, const std::vector<long>& modulus) {
    std::vector<long> mod = modulus;
    if (is_prime(p))
        for (auto& c : mod) c = mod_pos(c, p);
    FieldKey key{p, s, mod};
    auto& reg = registry();
    auto it = reg.find(key);
    if (it == reg.end()) it = reg.emplace(key, std::unique_ptr<Field>(new Field(p, s, mod))).first;
    return *it->second;
}

std::string Field::label() const { return "GF(" + std::to_string(q_) + ")"; }

void Field::to_digits(uint32_t idx, long* d) const {
    long t = idx;
    for (long i = 0; i < s_; ++i) {
        d[i] = t % p_;
        t /= p_;
    }
}

uint32_t Field::from_digits(const long* d) const {
    long idx = 0;
    for (long i = s_ - 1; i >= 0; --i) idx = idx * p_ + mod_pos(d[i], p_);
    return static_cast<uint32_t>(idx);
}

uint32_t Field::add_idx(uint32_t a, uint32_t b) const {
    if (s_ == 1) return static_cast<uint32_t>((a + b) % p_);
    long da[32], db[32];
    to_digits(a, da);
    to_digits(b, db);
    for (long i = 0; i < s_; ++i) da[i] = (da[i] + db[i]) % p_;
    return from_digits(da);
}

uint32_t Field::sub_idx(uint32_t a, uint32_t b) const {
    if (s_ == 1) return static_cast<uint32_t>(mod_pos(static_cast<long>(a) - static_cast<long>(b), p_));
    long da[32], db[32];
    to_digits(a, da);
    to_digits(b, db);
    for (long i = 0; i < s_; ++i) da[i] = mod_pos(da[i] - db[i], p_);
    return from_digits(da);
}

uint32_t Field::neg_idx(uint32_t a) const { return sub_idx(0, a); }

uint32_t Field::mul_idx(uint32_t a, uint32_t b) const {
    if (s_ == 1) return static_cast<uint32_t>((static_cast<unsigned long long>(a) * b) % p_);
    long da[32], db[32];
    long prod[64] = {0};
    to_digits(a, da);
    to_digits(b, db);
    for (long i = 0; i < s_; ++i) {
        if (da[i] == 0) continue;
        for (long j = 0; j < s_; ++j) prod[i + j] = mod_pos(prod[i + j] + da[i] * db[j], p_);
    }
    for (long d = 2 * s_ - 2; d >= s_; --d) {
        long c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (long j = 0; j < s_; ++j) prod[d - s_ + j] = mod_pos(prod[d - s_ + j] - c * mod_[j], p_);
    }
    return from_digits(prod);
}

uint32_t Field::inv_idx(uint32_t a) const {
    if (a == 0) throw DomainError("inverse of zero in " + label());
    if (s_ == 1) return static_cast<uint32_t>(inv_mod_p(a, p_));
    long da[32];
    to_digits(a, da);
    PPoly r0 = mod_, r1(da, da + s_);
    ptrim(r1);
    PPoly t0 = {}, t1 = {1};
    while (!r1.empty()) {
        // One Euclidean step: r0 = q*r1 + r2 with matching Bezout update.
        PPoly r2 = r0, q;
        long lead_inv = inv_mod_p(r1.back(), p_);
        q.assign(r2.size() >= r1.size() ? r2.size() - r1.size() + 1 : 0, 0);
        while (r2.size() >= r1.size() && !r2.empty()) {
            long c = mod_pos(r2.back() * lead_inv, p_);
            size_t shift = r2.size() - r1.size();
            q[shift] = c;
            PPoly shifted(shift, 0);
            shifted.insert(shifted.end(), r1.begin(), r1.end());
            r2 = psub_scaled(r2, shifted, c, p_);
        }
        PPoly t2 = psub_scaled(t0, pmul(q, t1, p_), 1, p_);
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    // r0 is the gcd: a nonzero constant since the modulus is irreducible.
    if (r0.size() != 1) throw InvariantViolation("gcd with irreducible modulus not constant");
    long scale = inv_mod_p(r0[0], p_);
    long digits[32] = {0};
    for (size_t i = 0; i < t0.size() && i < static_cast<size_t>(s_); ++i) digits[i] = mod_pos(t0[i] * scale, p_);
    return from_digits(digits);
}

uint32_t Field::pow_idx(uint32_t a, long long e) const {
    if (e < 0) return pow_idx(inv_idx(a), -e);
    uint32_t result = 1, base = a;
    while (e > 0) {
        if (e & 1) result = mul_idx(result, base);
        base = mul_idx(base, base);
        e >>= 1;
    }
    return result;
}

long Field::trace_idx(uint32_t a) const {
    uint32_t acc = a, frob = a;
    for (long i = 1; i < s_; ++i) {
        frob = pow_idx(frob, p_);
        acc = add_idx(acc, frob);
    }
    long d[32];
    to_digits(acc, d);
    for (long i = 1; i < s_; ++i)
        if (d[i] != 0) throw InvariantViolation("trace left the prime field");
    return d[0];
}

std::vector<long> Fq::coeffs() const {
    if (!f_) return {0};
    std::vector<long> d(f_->s());
    long t = v_;
    for (long i = 0; i < f_->s(); ++i) {
        d[i] = t % f_->p();
        t /= f_->p();
    }
    return d;
}

Fq Field::from_coeffs(const std::vector<long>& coeffs) const {
    if (static_cast<long>(coeffs.size()) > s_)
        throw UsageError("coefficient list longer than the extension degree of " + label());
    long d[32] = {0};
    for (std::size_t i = 0; i < coeffs.size(); ++i) d[i] = mod_pos(coeffs[i], p_);
    return Fq(*this, from_digits(d));
}

} // namespace ccode
